#ifndef SPECWALK_EXACT_HPP
#define SPECWALK_EXACT_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "specwalk/graph.hpp"
#include "specwalk/matrix.hpp"
#include "specwalk/poly.hpp"

namespace specwalk {

/// det(tI - A) as an exact integer polynomial, by the Berkowitz method
/// (division-free, so every intermediate stays an integer).
IntPoly char_poly(const Mat<mpz_class>& a);
IntPoly char_poly(const Graph& g);

/// Characteristic polynomial of the induced subgraph on V \ S.
IntPoly char_poly_deleted(const Graph& g, const std::vector<int>& to_delete);

struct MinimalPolynomial {
    IntPoly psi;     // square-free part of char_poly; monic; psi(A) = 0
    mpz_class disc;  // discriminant of psi, never 0
};

/// The minimal polynomial of the adjacency matrix and its discriminant.
/// psi(A) = 0 is verified exactly before returning.
MinimalPolynomial minimal_polynomial(const Graph& g);

/// Exact rank over Q by fraction-free (Bareiss) elimination.
int exact_rank(Mat<mpz_class> m);
int exact_rank(const Mat<mpq_class>& m);

/// One exact solution of Mx = b, or nullopt if the system is inconsistent.
/// Rows are cleared of denominators, eliminated fraction-free, and the
/// result is verified against M and b before returning. Underdetermined
/// systems get free variables set to 0.
std::optional<std::vector<mpq_class>> solve_rational_system(
    const Mat<mpq_class>& m, const std::vector<mpq_class>& b);

/// Columns z, Az, ..., A^{k-1}z over the integers.
Mat<mpz_class> krylov_matrix(const Graph& g, const std::vector<mpz_class>& z, int k);

/// e_a as an integer vector.
std::vector<mpz_class> unit_vector(int n, int a);

/// det(((t0*I - A)^{-1})_{D,D}) evaluated exactly; t0 must not be an
/// eigenvalue. |D| is 0, 1 or 2.
mpq_class resolvent_minor_det(const Graph& g, const std::vector<int>& d, const mpq_class& t0);

}  // namespace specwalk

#endif
