#ifndef SPECWALK_VERDICTS_HPP
#define SPECWALK_VERDICTS_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "specwalk/graph.hpp"
#include "specwalk/matrix.hpp"
#include "specwalk/poly.hpp"
#include "specwalk/spectral.hpp"

namespace specwalk {

/// Absolute tolerance for numeric verdicts on idempotent entries.
constexpr double kVerdictTol = 1e-8;
/// Deviations inside [kBorderlineLo, kBorderlineHi] are too close to the
/// threshold to trust floating point; those verdicts are re-decided exactly.
constexpr double kBorderlineLo = 1e-10;
constexpr double kBorderlineHi = 1e-6;

/// Applies the borderline policy: below the band the numeric answer is a
/// clean yes, above it a clean no, inside it the exact verdict wins.
struct NumericVerdict {
    bool value;
    double deviation;   // the quantity compared against kVerdictTol
    bool borderline;    // true if `value` was overridden by the exact test
};

struct CospectralVerdict {
    bool exact;    // char_poly(X-a) == char_poly(X-b)
    NumericVerdict numeric;  // max_r |(E_r)_{a,a} - (E_r)_{b,b}|
    bool walk_gram_equal;      // M_a^T M_a == M_b^T M_b, exact
    bool modules_orthogonal;   // (e_a - e_b)^T A^k (e_a + e_b) = 0 for k < n, exact
};

CospectralVerdict are_cospectral(const Graph& g, int a, int b,
                                 const SpectralDecomposition& decomp);
CospectralVerdict are_cospectral(const Graph& g, int a, int b);

struct ParallelVerdict {
    bool exact;  // reduced denominator of phi(X-{a,b})/phi(X) is square-free
    NumericVerdict numeric;  // max_r of the 2x2 minors of E_r at {a,b}
    std::vector<double> per_r_determinants;
};

ParallelVerdict are_parallel(const Graph& g, int a, int b,
                             const SpectralDecomposition& decomp);
ParallelVerdict are_parallel(const Graph& g, int a, int b);

/// Q = p(A) for a rational polynomial p with Q^2 = I and Q e_a = e_b.
/// Exists exactly when a and b are strongly cospectral.
struct SymmetryMatrix {
    RatPoly p;              // degree < deg(psi); p^2 = 1 (mod psi)
    IntPoly psi;            // minimal polynomial it was built against
    Mat<mpq_class> materialize(const Graph& g) const;  // Q = p(A)
};

struct PairVerdict {
    int a = 0, b = 0;
    bool cospectral_exact = false;
    bool parallel_exact = false;
    bool strongly_cospectral_exact = false;
    NumericVerdict cospectral_numeric{};
    NumericVerdict parallel_numeric{};
    NumericVerdict sc_numeric{};  // max_r min(||E_r(e_a -+ e_b)||)
    bool walk_gram_equal = false;
    bool modules_orthogonal = false;
    std::vector<double> per_r_determinants;
    /// Per distinct eigenvalue: +1 / -1 for in-support signs, 0 out of support.
    /// Present only when strongly cospectral.
    std::vector<int> sign_pattern;
    std::optional<SymmetryMatrix> symmetry;
    IntPoly support_poly_a;
    IntPoly support_poly_b;
};

PairVerdict are_strongly_cospectral(const Graph& g, int a, int b,
                                    const SpectralDecomposition& decomp);
PairVerdict are_strongly_cospectral(const Graph& g, int a, int b);

/// Minimal-degree rational p with p(A) e_a = e_b and p = +-1 on the
/// eigenvalue support of a, extended off-support so that p^2 = 1 (mod psi).
/// Returns nullopt exactly when a, b are not strongly cospectral.
std::optional<SymmetryMatrix> symmetry_polynomial(const Graph& g, int a, int b);

/// Numeric orthogonal symmetry Q with Q^2 = I, QA = AQ, Q e_a = e_b, built
/// as the reflection through the complement of the module of e_a - e_b.
/// Returns nullopt when a, b are not cospectral (exact test).
std::optional<Mat<double>> cospectral_rotation(const Graph& g, int a, int b);

/// Maximal classes of pairwise strongly cospectral vertices. Transitivity is
/// re-checked at runtime; class sizes are checked against the common
/// eigenvalue-support size.
Partition sc_classes(const Graph& g);

/// diag(A^k) constant for k = 0..n-1, integer arithmetic; cross-checked
/// against the idempotent diagonals.
bool is_walk_regular(const Graph& g);
bool is_walk_regular(const Graph& g, const SpectralDecomposition& decomp);

/// Trace-orthogonal basis profile of the algebra generated by A, e_a e_a^T
/// and I: dimension s^2 + #{r : E'_r != 0}.
struct AlgebraProfile {
    int support_size;                     // s
    std::vector<bool> e_prime_nonzero;    // per distinct eigenvalue
    int dimension;
};
AlgebraProfile algebra_dimension(const Graph& g, int a,
                                 const SpectralDecomposition& decomp);
AlgebraProfile algebra_dimension(const Graph& g, int a);

struct SpectrallyExtremalReport {
    int eccentricity;
    int support_size;
    bool extremal;                     // support size == eccentricity + 1
    std::optional<int> forced_partner; // unique vertex at max distance, when
                                       // extremal and in a nontrivial SC class
};

/// Connected graphs only (eccentricity must be defined on all of V).
SpectrallyExtremalReport spectrally_extremal(const Graph& g, int a);

}  // namespace specwalk

#endif
