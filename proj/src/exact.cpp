#include "specwalk/exact.hpp"

#include <algorithm>

namespace specwalk {

// ---------------------------------------------------------------------------
// Berkowitz: processes leading principal submatrices, updating the
// coefficient vector by convolution with a Toeplitz column built from
// R M^k C products. No divisions anywhere.

IntPoly char_poly(const Mat<mpz_class>& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("char_poly needs a square matrix");
    const int n = a.rows();
    std::vector<mpz_class> coeff{mpz_class(1)};  // descending powers
    for (int i = 1; i <= n; ++i) {
        std::vector<mpz_class> v(i + 1);
        v[0] = 1;
        v[1] = -a(i - 1, i - 1);
        if (i >= 2) {
            // w runs through M^k C for the (i-1)x(i-1) leading block M
            std::vector<mpz_class> w(i - 1);
            for (int r = 0; r < i - 1; ++r) w[r] = a(r, i - 1);
            for (int k = 2; k <= i; ++k) {
                mpz_class dot(0);
                for (int c = 0; c < i - 1; ++c) dot += a(i - 1, c) * w[c];
                v[k] = -dot;
                if (k < i) {
                    std::vector<mpz_class> next(i - 1, mpz_class(0));
                    for (int r = 0; r < i - 1; ++r)
                        for (int c = 0; c < i - 1; ++c) next[r] += a(r, c) * w[c];
                    w = std::move(next);
                }
            }
        }
        std::vector<mpz_class> conv(i + 1, mpz_class(0));
        for (std::size_t k = 0; k < v.size(); ++k)
            for (std::size_t j = 0; j < coeff.size(); ++j) conv[k + j] += v[k] * coeff[j];
        coeff = std::move(conv);
    }
    std::reverse(coeff.begin(), coeff.end());
    return IntPoly(std::move(coeff));
}

IntPoly char_poly(const Graph& g) { return char_poly(g.adjacency<mpz_class>()); }

IntPoly char_poly_deleted(const Graph& g, const std::vector<int>& to_delete) {
    return char_poly(delete_vertices(g, to_delete).graph);
}

MinimalPolynomial minimal_polynomial(const Graph& g) {
    IntPoly phi = char_poly(g);
    if (g.vertex_count() == 0) return {IntPoly::one(), mpz_class(1)};
    IntPoly psi = square_free_part(phi);
    if (psi.leading() != 1)
        throw InvariantViolation("square-free part of a monic polynomial must be monic");
    Mat<mpz_class> check = psi.eval(g.adjacency<mpz_class>());
    for (int i = 0; i < check.rows(); ++i)
        for (int j = 0; j < check.cols(); ++j)
            if (check(i, j) != 0)
                throw InvariantViolation("psi(A) != 0: square-free part is not annihilating");
    mpz_class disc = psi.degree() >= 1 ? discriminant(psi) : mpz_class(1);
    if (disc == 0) throw InvariantViolation("minimal polynomial with zero discriminant");
    return {std::move(psi), std::move(disc)};
}

// ---------------------------------------------------------------------------
// Fraction-free elimination. `prev` is the previous pivot; every division is
// exact (the entries are minors of the original matrix).

namespace {

struct Echelon {
    Mat<mpz_class> m;
    std::vector<int> pivot_cols;  // per eliminated row
    int rank;
};

Echelon bareiss_echelon(Mat<mpz_class> m, int elimination_cols) {
    const int rows = m.rows();
    Echelon e{Mat<mpz_class>(), {}, 0};
    mpz_class prev(1);
    int row = 0;
    for (int col = 0; col < elimination_cols && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (m(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < m.cols(); ++j) {
                mpz_class t = m(i, j) * m(row, col) - m(i, col) * m(row, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, col) = 0;
        }
        prev = m(row, col);
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.m = std::move(m);
    e.rank = row;
    return e;
}

}  // namespace

int exact_rank(Mat<mpz_class> m) {
    const int cols = m.cols();
    return bareiss_echelon(std::move(m), cols).rank;
}

int exact_rank(const Mat<mpq_class>& m) {
    Mat<mpz_class> z(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class lcm(1);
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            mpq_class scaled = m(i, j) * mpq_class(lcm);
            z(i, j) = scaled.get_num();
        }
    }
    return exact_rank(std::move(z));
}

std::optional<std::vector<mpq_class>> solve_rational_system(
    const Mat<mpq_class>& m, const std::vector<mpq_class>& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw DimensionMismatch("solve: rhs length does not match row count");
    const int rows = m.rows(), cols = m.cols();

    Mat<mpz_class> aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        mpz_class lcm(1);
        for (int j = 0; j < cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), b[i].get_den().get_mpz_t());
        for (int j = 0; j < cols; ++j) {
            mpq_class s = m(i, j) * mpq_class(lcm);
            aug(i, j) = s.get_num();
        }
        mpq_class s = b[i] * mpq_class(lcm);
        aug(i, cols) = s.get_num();
    }

    Echelon e = bareiss_echelon(std::move(aug), cols);
    for (int i = e.rank; i < rows; ++i)
        if (e.m(i, cols) != 0) return std::nullopt;

    std::vector<mpq_class> x(cols, mpq_class(0));
    for (int i = e.rank - 1; i >= 0; --i) {
        int pc = e.pivot_cols[i];
        mpq_class acc(e.m(i, cols));
        for (int j = pc + 1; j < cols; ++j)
            if (e.m(i, j) != 0) acc -= mpq_class(e.m(i, j)) * x[j];
        x[pc] = acc / mpq_class(e.m(i, pc));
        x[pc].canonicalize();
    }

    for (int i = 0; i < rows; ++i) {
        mpq_class acc(0);
        for (int j = 0; j < cols; ++j) acc += m(i, j) * x[j];
        if (acc != b[i]) throw InvariantViolation("rational solve failed verification");
    }
    return x;
}

std::vector<mpz_class> unit_vector(int n, int a) {
    std::vector<mpz_class> e(n, mpz_class(0));
    e[a] = 1;
    return e;
}

Mat<mpz_class> krylov_matrix(const Graph& g, const std::vector<mpz_class>& z, int k) {
    const int n = g.vertex_count();
    if (static_cast<int>(z.size()) != n)
        throw DimensionMismatch("krylov vector length does not match graph");
    Mat<mpz_class> out(n, k);
    std::vector<mpz_class> w = z;
    for (int c = 0; c < k; ++c) {
        for (int r = 0; r < n; ++r) out(r, c) = w[r];
        if (c + 1 < k) {
            std::vector<mpz_class> next(n, mpz_class(0));
            for (int u = 0; u < n; ++u) {
                if (w[u] == 0) continue;
                for (int v : g.neighbors(u)) next[v] += w[u];
            }
            w = std::move(next);
        }
    }
    return out;
}

mpq_class resolvent_minor_det(const Graph& g, const std::vector<int>& d,
                              const mpq_class& t0) {
    const int n = g.vertex_count();
    for (int v : d) g.check_vertex(v);
    if (d.size() > 2) throw Error("resolvent minor implemented for |D| <= 2");
    if (d.empty()) return 1;

    Mat<mpq_class> b(n, n);
    for (int i = 0; i < n; ++i) {
        b(i, i) = t0;
        for (int j : g.neighbors(i)) b(i, j) -= 1;
    }
    // columns of (t0 I - A)^{-1} restricted to D
    std::vector<std::vector<mpq_class>> sol;
    for (int v : d) {
        std::vector<mpq_class> rhs(n, mpq_class(0));
        rhs[v] = 1;
        auto x = solve_rational_system(b, rhs);
        if (!x) throw Error("t0 is an eigenvalue; resolvent undefined");
        sol.push_back(std::move(*x));
    }
    if (d.size() == 1) return sol[0][d[0]];
    return sol[0][d[0]] * sol[1][d[1]] - sol[0][d[1]] * sol[1][d[0]];
}

}  // namespace specwalk
