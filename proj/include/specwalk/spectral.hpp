#ifndef SPECWALK_SPECTRAL_HPP
#define SPECWALK_SPECTRAL_HPP

#include <gmpxx.h>

#include <vector>

#include "specwalk/exact.hpp"
#include "specwalk/graph.hpp"
#include "specwalk/matrix.hpp"
#include "specwalk/poly.hpp"

namespace specwalk {

constexpr double kDefaultGroupTol = 1e-7;
constexpr double kSupportWeightTol = 1e-9;
constexpr int kDefaultDecomposeCap = 2000;

/// A = sum_r theta_r E_r with numerically grouped eigenvalues. Eigenvalues
/// are distinct and descending; E_r = Y_r Y_r^T for an orthonormal basis of
/// the merged eigenspace.
struct SpectralDecomposition {
    int n = 0;
    std::vector<double> eigenvalues;    // distinct, descending
    std::vector<int> multiplicities;
    std::vector<Mat<double>> idempotents;
    double residual = 0;   // ||A - sum theta_r E_r||_F
    double group_tol = 0;  // tolerance used for merging
    double spectral_radius = 0;

    int distinct_count() const { return static_cast<int>(eigenvalues.size()); }
    /// ||E_r e_a||^2 = (E_r)_{a,a}
    double weight(int r, int a) const { return idempotents[r](a, a); }
};

/// Deterministic cyclic Jacobi eigensolver plus eigenvalue grouping.
/// Eigenvalues closer than group_tol * max(1, spectral radius) are merged.
SpectralDecomposition eigen_decompose(const Graph& g, double group_tol = kDefaultGroupTol,
                                      int size_cap = kDefaultDecomposeCap);

/// Square-free integer polynomial whose roots are exactly the eigenvalue
/// support of vertex a: char_poly(X) / gcd(char_poly(X), char_poly(X-a)).
IntPoly support_polynomial(const Graph& g, int a);

/// Columns e_a, A e_a, ..., A^{n-1} e_a with its exact rank over Q. The rank
/// equals the size of the eigenvalue support of a.
struct WalkMatrix {
    Mat<mpz_class> m;
    int rank;
};
WalkMatrix walk_matrix(const Graph& g, int a);

/// Probability density (E_r)_{a,a} on the eigenvalues.
struct SpectralDensity {
    std::vector<double> eigenvalues;
    std::vector<double> weights;
    std::vector<int> support;  // indices r with weight > kSupportWeightTol
};
SpectralDensity spectral_density(const SpectralDecomposition& decomp, int a);

/// sum_r sqrt(p_r q_r); 1 exactly when the densities coincide.
double fidelity(const SpectralDensity& p, const SpectralDensity& q);

/// Orthogonal projection onto the commutant of A: sum_r E_r M E_r.
Mat<double> commutant_project(const SpectralDecomposition& decomp, const Mat<double>& m);

/// M-hat with entries sum_r ((E_r)_{a,b})^2, plus the discriminant used by
/// the integrality check disc^2 * M-hat in Z.
struct AverageMixingMatrix {
    Mat<double> m;
    mpz_class disc;
};
AverageMixingMatrix average_mixing_matrix(const SpectralDecomposition& decomp,
                                          const mpz_class& disc);

}  // namespace specwalk

#endif
