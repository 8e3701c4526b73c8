#include "specwalk/verdicts.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specwalk/exact.hpp"

namespace specwalk {

namespace {

void check_pair(const Graph& g, int a, int b) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) throw SameVertex(a);
}

/// Borderline policy: trust the float answer only when the deviation is well
/// clear of the threshold on either side; otherwise the exact bit decides.
NumericVerdict decide_numeric(double deviation, bool exact) {
    if (deviation < kBorderlineLo) return {true, deviation, false};
    if (deviation > kBorderlineHi) return {false, deviation, false};
    return {exact, deviation, true};
}

std::vector<double> unit_double(int n, int a) {
    std::vector<double> e(n, 0.0);
    e[a] = 1.0;
    return e;
}

double projection_norm(const Mat<double>& e, const std::vector<double>& x) {
    double out = 0;
    for (int i = 0; i < e.rows(); ++i) {
        double s = 0;
        for (int j = 0; j < e.cols(); ++j) s += e(i, j) * x[j];
        out += s * s;
    }
    return std::sqrt(out);
}

}  // namespace

CospectralVerdict are_cospectral(const Graph& g, int a, int b,
                                 const SpectralDecomposition& decomp) {
    check_pair(g, a, b);
    const int n = g.vertex_count();

    bool exact = char_poly_deleted(g, {a}) == char_poly_deleted(g, {b});

    double dev = 0;
    for (int r = 0; r < decomp.distinct_count(); ++r)
        dev = std::max(dev, std::abs(decomp.weight(r, a) - decomp.weight(r, b)));

    // diagnostics, both exact: the closed-walk Gram matrices and the
    // orthogonality of the e_a - e_b and e_a + e_b walk modules
    Mat<mpz_class> ka = krylov_matrix(g, unit_vector(n, a), n);
    Mat<mpz_class> kb = krylov_matrix(g, unit_vector(n, b), n);
    bool gram_equal = (ka.transposed() * ka) == (kb.transposed() * kb);

    std::vector<mpz_class> diff(n, mpz_class(0)), sum(n, mpz_class(0));
    diff[a] += 1;
    diff[b] -= 1;
    sum[a] += 1;
    sum[b] += 1;
    bool orthogonal = true;
    std::vector<mpz_class> w = sum;
    for (int k = 0; k < n && orthogonal; ++k) {
        mpz_class dot(0);
        for (int i = 0; i < n; ++i) dot += diff[i] * w[i];
        if (dot != 0) orthogonal = false;
        if (k + 1 < n) {
            std::vector<mpz_class> next(n, mpz_class(0));
            for (int u = 0; u < n; ++u) {
                if (w[u] == 0) continue;
                for (int v : g.neighbors(u)) next[v] += w[u];
            }
            w = std::move(next);
        }
    }

    if (gram_equal != exact || orthogonal != exact)
        throw InvariantViolation("cospectrality characterizations disagree");
    return {exact, decide_numeric(dev, exact), gram_equal, orthogonal};
}

CospectralVerdict are_cospectral(const Graph& g, int a, int b) {
    return are_cospectral(g, a, b, eigen_decompose(g));
}

ParallelVerdict are_parallel(const Graph& g, int a, int b,
                             const SpectralDecomposition& decomp) {
    check_pair(g, a, b);

    // exact route: every pole of phi(X - {a,b}) / phi(X) is simple
    IntPoly phi = char_poly(g);
    IntPoly phi_ab = char_poly_deleted(g, {a, b});
    RationalFn reduced = reduce_rational_function(phi_ab, phi);
    bool exact = is_square_free(reduced.den);

    std::vector<double> dets;
    double dev = 0;
    for (int r = 0; r < decomp.distinct_count(); ++r) {
        const Mat<double>& e = decomp.idempotents[r];
        double det = e(a, a) * e(b, b) - e(a, b) * e(a, b);
        dets.push_back(det);
        dev = std::max(dev, std::abs(det));
    }
    return {exact, decide_numeric(dev, exact), std::move(dets)};
}

ParallelVerdict are_parallel(const Graph& g, int a, int b) {
    return are_parallel(g, a, b, eigen_decompose(g));
}

PairVerdict are_strongly_cospectral(const Graph& g, int a, int b,
                                    const SpectralDecomposition& decomp) {
    check_pair(g, a, b);
    const int n = g.vertex_count();

    PairVerdict v;
    v.a = a;
    v.b = b;

    CospectralVerdict cos = are_cospectral(g, a, b, decomp);
    ParallelVerdict par = are_parallel(g, a, b, decomp);
    v.cospectral_exact = cos.exact;
    v.parallel_exact = par.exact;
    v.strongly_cospectral_exact = cos.exact && par.exact;
    v.cospectral_numeric = cos.numeric;
    v.parallel_numeric = par.numeric;
    v.walk_gram_equal = cos.walk_gram_equal;
    v.modules_orthogonal = cos.modules_orthogonal;
    v.per_r_determinants = par.per_r_determinants;
    v.support_poly_a = support_polynomial(g, a);
    v.support_poly_b = support_polynomial(g, b);

    // numeric strong-cospectrality: each eigenspace kills e_a - e_b or e_a + e_b
    std::vector<double> ea = unit_double(n, a), eb = unit_double(n, b);
    std::vector<double> diff(n), sum(n);
    for (int i = 0; i < n; ++i) {
        diff[i] = ea[i] - eb[i];
        sum[i] = ea[i] + eb[i];
    }
    double dev = 0;
    for (int r = 0; r < decomp.distinct_count(); ++r) {
        double d = std::min(projection_norm(decomp.idempotents[r], diff),
                            projection_norm(decomp.idempotents[r], sum));
        dev = std::max(dev, d);
    }
    v.sc_numeric = decide_numeric(dev, v.strongly_cospectral_exact);

    if (v.strongly_cospectral_exact) {
        for (int r = 0; r < decomp.distinct_count(); ++r) {
            double waa = decomp.weight(r, a);
            if (waa <= kSupportWeightTol) {
                v.sign_pattern.push_back(0);
                continue;
            }
            int sigma = decomp.idempotents[r](a, b) >= 0 ? 1 : -1;
            // cross-check ||E_r e_a - sigma E_r e_b||
            std::vector<double> x(n, 0.0);
            x[a] = 1.0;
            x[b] = -sigma;
            if (projection_norm(decomp.idempotents[r], x) > kBorderlineHi)
                throw InvariantViolation("sign pattern fails the projection cross-check");
            v.sign_pattern.push_back(sigma);
        }
        v.symmetry = symmetry_polynomial(g, a, b);
        if (!v.symmetry)
            throw InvariantViolation(
                "strongly cospectral pair without a symmetry polynomial");
    }
    return v;
}

PairVerdict are_strongly_cospectral(const Graph& g, int a, int b) {
    return are_strongly_cospectral(g, a, b, eigen_decompose(g));
}

// ---------------------------------------------------------------------------

Mat<mpq_class> SymmetryMatrix::materialize(const Graph& g) const {
    Mat<mpz_class> az = g.adjacency<mpz_class>();
    Mat<mpq_class> aq(az.rows(), az.cols());
    for (int i = 0; i < az.rows(); ++i)
        for (int j = 0; j < az.cols(); ++j) aq(i, j) = mpq_class(az(i, j));
    return p.eval(aq);
}

std::optional<SymmetryMatrix> symmetry_polynomial(const Graph& g, int a, int b) {
    check_pair(g, a, b);
    const int n = g.vertex_count();

    IntPoly d_a = support_polynomial(g, a);
    const int s = d_a.degree();

    // minimal-degree candidate: solve [e_a, A e_a, ..., A^{s-1} e_a] c = e_b
    Mat<mpz_class> kz = krylov_matrix(g, unit_vector(n, a), s);
    Mat<mpq_class> kq(n, s);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < s; ++j) kq(i, j) = mpq_class(kz(i, j));
    std::vector<mpq_class> rhs(n, mpq_class(0));
    rhs[b] = 1;
    auto coeffs = solve_rational_system(kq, rhs);
    if (!coeffs) return std::nullopt;  // e_b not in the walk module of a

    RatPoly p(std::move(*coeffs));
    // p is an involution on the walk module iff p^2 = 1 on the support roots
    RatPoly da_q = RatPoly::from(d_a);
    if (!rat_mod(p * p - RatPoly::one(), da_q).is_zero()) return std::nullopt;

    IntPoly psi = minimal_polynomial(g).psi;
    IntPoly off = divide_exact(psi, d_a);  // d_a | psi: support is a subset of the spectrum
    if (off.degree() >= 1) {
        // extend by CRT so that q = 1 on the off-support eigenvalues:
        // q = p + d_a * h with h = (1 - p) / d_a (mod off)
        RatPoly off_q = RatPoly::from(off);
        RatExtendedGcd eg = rat_extended_gcd(da_q, off_q);
        if (eg.g.degree() != 0)
            throw InvariantViolation("support polynomial does not split the minimal polynomial");
        RatPoly h = rat_mod(eg.u * (RatPoly::one() - p), off_q);
        p = p + da_q * h;
    }
    if (!rat_mod(p * p - RatPoly::one(), RatPoly::from(psi)).is_zero())
        throw InvariantViolation("symmetry polynomial is not an involution mod psi");
    return SymmetryMatrix{std::move(p), std::move(psi)};
}

std::optional<Mat<double>> cospectral_rotation(const Graph& g, int a, int b) {
    check_pair(g, a, b);
    if (!(char_poly_deleted(g, {a}) == char_poly_deleted(g, {b}))) return std::nullopt;
    const int n = g.vertex_count();

    // orthonormal basis of the A-module generated by e_a - e_b
    Mat<double> ad = g.adjacency<double>();
    std::vector<std::vector<double>> basis;
    std::vector<double> w(n, 0.0);
    w[a] = 1.0;
    w[b] = -1.0;
    for (int k = 0; k < n; ++k) {
        std::vector<double> cand = w;
        for (const auto& u : basis) {
            double dot = std::inner_product(u.begin(), u.end(), cand.begin(), 0.0);
            for (int i = 0; i < n; ++i) cand[i] -= dot * u[i];
        }
        // re-orthogonalize once; plain MGS drifts on near-dependent vectors
        for (const auto& u : basis) {
            double dot = std::inner_product(u.begin(), u.end(), cand.begin(), 0.0);
            for (int i = 0; i < n; ++i) cand[i] -= dot * u[i];
        }
        double norm = std::sqrt(std::inner_product(cand.begin(), cand.end(), cand.begin(), 0.0));
        if (norm > 1e-10) {
            for (double& x : cand) x /= norm;
            basis.push_back(std::move(cand));
        }
        std::vector<double> next(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) next[i] += ad(i, j) * w[j];
        w = std::move(next);
    }

    Mat<double> q = Mat<double>::identity(n);
    for (const auto& u : basis)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q(i, j) -= 2 * u[i] * u[j];
    return q;
}

// ---------------------------------------------------------------------------

Partition sc_classes(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return Partition{{}, {}};

    // cospectral prefilter: strongly cospectral pairs share phi(X - v)
    std::vector<IntPoly> deleted(n);
    for (int v = 0; v < n; ++v) deleted[v] = char_poly_deleted(g, {v});

    IntPoly phi = char_poly(g);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    auto parallel_exact = [&](int a, int b) {
        IntPoly phi_ab = char_poly_deleted(g, {a, b});
        return is_square_free(reduce_rational_function(phi_ab, phi).den);
    };

    std::vector<std::vector<bool>> sc(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!(deleted[a] == deleted[b])) continue;
            if (!parallel_exact(a, b)) continue;
            sc[a][b] = sc[b][a] = true;
            int ra = find(a), rb = find(b);
            if (ra != rb) parent[ra] = rb;
        }

    std::vector<std::vector<int>> groups(n);
    for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> cells;
    for (auto& c : groups)
        if (!c.empty()) cells.push_back(std::move(c));

    // the relation must be transitive (signs compose); re-check rather than assume
    for (const auto& cell : cells)
        for (std::size_t i = 0; i < cell.size(); ++i)
            for (std::size_t j = i + 1; j < cell.size(); ++j)
                if (!sc[cell[i]][cell[j]])
                    throw InvariantViolation("strong cospectrality failed transitivity");

    // |class| <= common support size
    for (const auto& cell : cells) {
        if (cell.size() < 2) continue;
        int s = support_polynomial(g, cell.front()).degree();
        if (static_cast<int>(cell.size()) > s)
            throw InvariantViolation("SC class larger than the eigenvalue support");
    }
    return Partition::from_cells(n, std::move(cells));
}

bool is_walk_regular(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    Mat<mpz_class> a = g.adjacency<mpz_class>();
    Mat<mpz_class> power = Mat<mpz_class>::identity(n);
    for (int k = 0; k < n; ++k) {
        if (k > 0) power = power * a;
        for (int v = 1; v < n; ++v)
            if (power(v, v) != power(0, 0)) return false;
    }
    return true;
}

bool is_walk_regular(const Graph& g, const SpectralDecomposition& decomp) {
    bool exact = is_walk_regular(g);
    double dev = 0;
    for (const auto& e : decomp.idempotents)
        for (int v = 1; v < decomp.n; ++v)
            dev = std::max(dev, std::abs(e(v, v) - e(0, 0)));
    NumericVerdict numeric = decide_numeric(dev, exact);
    if (numeric.value != exact)
        throw InvariantViolation("walk regularity: numeric and exact routes disagree");
    return exact;
}

AlgebraProfile algebra_dimension(const Graph& g, int a,
                                 const SpectralDecomposition& decomp) {
    g.check_vertex(a);
    const int s = support_polynomial(g, a).degree();

    AlgebraProfile prof;
    prof.support_size = s;
    int numeric_support = 0;
    int nonzero = 0;
    for (int r = 0; r < decomp.distinct_count(); ++r) {
        double waa = decomp.weight(r, a);
        bool in_support = waa > kSupportWeightTol;
        if (in_support) ++numeric_support;
        // E'_r = E_r - F_r vanishes exactly when the eigenspace is spanned by
        // E_r e_a, i.e. multiplicity one and in support
        bool e_prime = in_support ? decomp.multiplicities[r] > 1 : true;
        prof.e_prime_nonzero.push_back(e_prime);
        if (e_prime) ++nonzero;
    }
    if (numeric_support != s)
        throw InvariantViolation("numeric eigenvalue support disagrees with the exact one");
    prof.dimension = s * s + nonzero;
    return prof;
}

AlgebraProfile algebra_dimension(const Graph& g, int a) {
    return algebra_dimension(g, a, eigen_decompose(g));
}

SpectrallyExtremalReport spectrally_extremal(const Graph& g, int a) {
    g.check_vertex(a);
    if (!is_connected(g)) throw DisconnectedGraph("spectrally_extremal needs a connected graph");

    std::vector<int> dist = distances(g, a);
    int d = *std::max_element(dist.begin(), dist.end());
    int s = support_polynomial(g, a).degree();

    SpectrallyExtremalReport rep{d, s, s == d + 1, std::nullopt};
    if (!rep.extremal) return rep;

    // partner exists only when a sits in a nontrivial SC class
    IntPoly phi = char_poly(g);
    IntPoly del_a = char_poly_deleted(g, {a});
    std::vector<int> partners;
    for (int b = 0; b < g.vertex_count(); ++b) {
        if (b == a) continue;
        if (!(char_poly_deleted(g, {b}) == del_a)) continue;
        IntPoly phi_ab = char_poly_deleted(g, {a, b});
        if (is_square_free(reduce_rational_function(phi_ab, phi).den))
            partners.push_back(b);
    }
    if (partners.empty()) return rep;

    std::vector<int> at_d;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] == d) at_d.push_back(v);
    if (at_d.size() != 1)
        throw InvariantViolation("extremal vertex with SC partner but no unique antipode");
    for (int b : partners)
        if (b != at_d.front())
            throw InvariantViolation("SC partner of an extremal vertex is not its antipode");
    rep.forced_partner = at_d.front();
    return rep;
}

}  // namespace specwalk
