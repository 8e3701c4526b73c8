#include "specwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace specwalk {

namespace {

// Cyclic-by-rows Jacobi. Sweeps in a fixed order, so identical input bytes
// give identical output. Good to ~1e-14 * ||A|| off-diagonal mass.
struct JacobiResult {
    std::vector<double> values;
    Mat<double> vectors;  // columns are eigenvectors
};

JacobiResult jacobi_eigen(const Graph& g) {
    const int n = g.vertex_count();
    Mat<double> a = g.adjacency<double>();
    Mat<double> v = Mat<double>::identity(n);

    double norm = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) norm += a(i, j) * a(i, j);
    norm = std::sqrt(norm);
    const double stop = (norm > 0 ? norm : 1.0) * 1e-15;
    const int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2 * a(i, j) * a(i, j);
        if (std::sqrt(off) <= stop) {
            JacobiResult r;
            r.values.resize(n);
            for (int i = 0; i < n; ++i) r.values[i] = a(i, i);
            r.vectors = std::move(v);
            return r;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0) continue;
                double theta = (a(q, q) - a(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    throw ConvergenceFailure("Jacobi eigensolver did not converge in 100 sweeps");
}

}  // namespace

SpectralDecomposition eigen_decompose(const Graph& g, double group_tol, int size_cap) {
    const int n = g.vertex_count();
    if (n < 1) throw Error("eigen_decompose needs at least one vertex");
    if (n > size_cap)
        throw TooLarge("decomposition capped at " + std::to_string(size_cap) +
                       " vertices; raise the cap explicitly for larger graphs");
    if (group_tol <= 0) throw Error("group_tol must be positive");

    JacobiResult jr = jacobi_eigen(g);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (jr.values[x] != jr.values[y]) return jr.values[x] > jr.values[y];
        return x < y;
    });

    double rho = 0;
    for (double t : jr.values) rho = std::max(rho, std::abs(t));
    const double merge_gap = group_tol * std::max(1.0, rho);

    SpectralDecomposition d;
    d.n = n;
    d.group_tol = group_tol;
    d.spectral_radius = rho;

    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n &&
               jr.values[order[end - 1]] - jr.values[order[end]] <= merge_gap)
            ++end;
        double mean = 0;
        for (int k = start; k < end; ++k) mean += jr.values[order[k]];
        mean /= (end - start);
        Mat<double> e(n, n);
        for (int k = start; k < end; ++k) {
            int col = order[k];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) e(i, j) += jr.vectors(i, col) * jr.vectors(j, col);
        }
        d.eigenvalues.push_back(mean);
        d.multiplicities.push_back(end - start);
        d.idempotents.push_back(std::move(e));
        start = end;
    }

    double res = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int r = 0; r < d.distinct_count(); ++r)
                s += d.eigenvalues[r] * d.idempotents[r](i, j);
            double diff = s - (g.adjacent(i, j) ? 1.0 : 0.0);
            res += diff * diff;
        }
    d.residual = std::sqrt(res);
    return d;
}

IntPoly support_polynomial(const Graph& g, int a) {
    g.check_vertex(a);
    IntPoly phi = char_poly(g);
    IntPoly phi_a = char_poly_deleted(g, {a});
    IntPoly d = divide_exact(phi, poly_gcd(phi, phi_a)).primitive_part();
    return d;
}

WalkMatrix walk_matrix(const Graph& g, int a) {
    g.check_vertex(a);
    const int n = g.vertex_count();
    Mat<mpz_class> m = krylov_matrix(g, unit_vector(n, a), n);
    int rank = exact_rank(m);
    return {std::move(m), rank};
}

SpectralDensity spectral_density(const SpectralDecomposition& decomp, int a) {
    if (a < 0 || a >= decomp.n) throw UnknownVertex(a);
    SpectralDensity d;
    d.eigenvalues = decomp.eigenvalues;
    d.weights.reserve(decomp.distinct_count());
    for (int r = 0; r < decomp.distinct_count(); ++r) {
        double w = decomp.weight(r, a);
        if (w < 0 && w > -1e-12) w = 0;  // clip eigensolver noise
        d.weights.push_back(w);
        if (w > kSupportWeightTol) d.support.push_back(r);
    }
    return d;
}

double fidelity(const SpectralDensity& p, const SpectralDensity& q) {
    if (p.eigenvalues.size() != q.eigenvalues.size())
        throw MismatchedSupportGrids("densities over different eigenvalue lists");
    for (std::size_t r = 0; r < p.eigenvalues.size(); ++r)
        if (std::abs(p.eigenvalues[r] - q.eigenvalues[r]) > 1e-9)
            throw MismatchedSupportGrids("densities over different eigenvalue lists");
    double f = 0;
    for (std::size_t r = 0; r < p.weights.size(); ++r)
        f += std::sqrt(std::max(0.0, p.weights[r])) * std::sqrt(std::max(0.0, q.weights[r]));
    return f;
}

Mat<double> commutant_project(const SpectralDecomposition& decomp, const Mat<double>& m) {
    if (m.rows() != decomp.n || m.cols() != decomp.n)
        throw DimensionMismatch("commutant projection shape mismatch");
    Mat<double> out(decomp.n, decomp.n);
    for (const Mat<double>& e : decomp.idempotents) out = out + e * m * e;
    return out;
}

AverageMixingMatrix average_mixing_matrix(const SpectralDecomposition& decomp,
                                          const mpz_class& disc) {
    Mat<double> m(decomp.n, decomp.n);
    for (const Mat<double>& e : decomp.idempotents)
        for (int i = 0; i < decomp.n; ++i)
            for (int j = 0; j < decomp.n; ++j) m(i, j) += e(i, j) * e(i, j);
    return {std::move(m), disc};
}

}  // namespace specwalk
