#include "specwalk/poly.hpp"

#include <algorithm>
#include <sstream>

namespace specwalk {

IntPoly IntPoly::of(std::initializer_list<long> ascending) {
    std::vector<mpz_class> c;
    c.reserve(ascending.size());
    for (long v : ascending) c.emplace_back(v);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::linear_root(const mpz_class& r) {
    return IntPoly({-r, mpz_class(1)});
}

const mpz_class& IntPoly::leading() const {
    if (is_zero()) throw ZeroPolynomial();
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> r = c_;
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const mpz_class& k) const {
    std::vector<mpz_class> r = c_;
    for (auto& x : r) x *= k;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(int by) const {
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> r(c_.size() + by, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + by] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<mpz_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * mpz_class(static_cast<long>(i));
    return IntPoly(std::move(r));
}

mpz_class IntPoly::content() const {
    mpz_class g(0);
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> r = c_;
    for (auto& x : r) x /= g;
    return IntPoly(std::move(r));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

double IntPoly::eval(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Mat<mpz_class> IntPoly::eval(const Mat<mpz_class>& m) const {
    if (m.rows() != m.cols()) throw DimensionMismatch("polynomial of a non-square matrix");
    const int n = m.rows();
    Mat<mpz_class> acc(n, n);
    if (is_zero()) return acc;
    for (int i = degree(); i >= 0; --i) {
        if (i != degree()) acc = acc * m;
        for (int d = 0; d < n; ++d) acc(d, d) += c_[i];
    }
    return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& a = c_[k];
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != 1) out << mag.get_str();
        if (k > 0) {
            if (mag != 1) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------

PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial();
    if (a.degree() < b.degree()) return {IntPoly(), a};
    const mpz_class& lb = b.leading();
    int steps = a.degree() - b.degree() + 1;
    std::vector<mpz_class> rem = a.coeffs();
    std::vector<mpz_class> quo(steps, mpz_class(0));
    int dr = a.degree();
    int done = 0;
    while (dr >= b.degree()) {
        // scale once per extracted term so the division stays integral
        mpz_class lead = rem[dr];
        for (auto& x : rem) x *= lb;
        for (auto& x : quo) x *= lb;
        int shift = dr - b.degree();
        quo[shift] += lead;
        for (int i = 0; i <= b.degree(); ++i) rem[i + shift] -= lead * b[i];
        ++done;
        while (dr >= 0 && rem[dr] == 0) --dr;
        if (dr < 0) break;
    }
    // pad with the remaining powers of lc(b) to match the classical definition
    mpz_class pad(1);
    for (int i = done; i < steps; ++i) pad *= lb;
    for (auto& x : rem) x *= pad;
    for (auto& x : quo) x *= pad;
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial();
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree())
        throw InvariantViolation("exact polynomial division: degree too small");
    std::vector<mpz_class> rem = a.coeffs();
    std::vector<mpz_class> quo(a.degree() - b.degree() + 1, mpz_class(0));
    for (int shift = a.degree() - b.degree(); shift >= 0; --shift) {
        mpz_class& lead = rem[shift + b.degree()];
        if (lead == 0) continue;
        mpz_class q;
        mpz_class r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(),
                    b.leading().get_mpz_t());
        if (r != 0) throw InvariantViolation("polynomial division is not exact");
        quo[shift] = q;
        for (int i = 0; i <= b.degree(); ++i) rem[i + shift] -= q * b[i];
    }
    for (const auto& x : rem)
        if (x != 0) throw InvariantViolation("polynomial division left a remainder");
    return IntPoly(std::move(quo));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly() : b.primitive_part().scaled(abs(b.content()));
    if (b.is_zero()) return a.primitive_part().scaled(abs(a.content()));
    mpz_class cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    IntPoly p = a.primitive_part();
    IntPoly q = b.primitive_part();
    if (p.degree() < q.degree()) std::swap(p, q);
    // primitive polynomial remainder sequence
    while (!q.is_zero()) {
        IntPoly r = pseudo_divide(p, q).remainder;
        p = q;
        q = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    return p.primitive_part().scaled(cont);
}

IntPoly square_free_part(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.degree() == 0) return IntPoly::one();
    IntPoly g = poly_gcd(p, p.derivative());
    return divide_exact(p, g).primitive_part();
}

bool is_square_free(const IntPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

int zero_multiplicity(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    int k = 0;
    while (p[k] == 0) ++k;
    return k;
}

// ---------------------------------------------------------------------------
// Resultant: Bareiss fraction-free determinant of the Sylvester matrix.

namespace {

mpz_class bareiss_determinant(Mat<mpz_class> m) {
    const int n = m.rows();
    if (n == 0) return 1;
    mpz_class prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : mpz_class(-m(n - 1, n - 1));
}

}  // namespace

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const int da = a.degree(), db = b.degree();
    if (da == 0 && db == 0) return 1;
    Mat<mpz_class> syl(da + db, da + db);
    for (int i = 0; i < db; ++i)
        for (int k = 0; k <= da; ++k) syl(i, i + k) = a[da - k];
    for (int i = 0; i < da; ++i)
        for (int k = 0; k <= db; ++k) syl(db + i, i + k) = b[db - k];
    return bareiss_determinant(std::move(syl));
}

mpz_class discriminant(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    const int m = p.degree();
    if (m == 0) throw Error("discriminant of a constant polynomial");
    if (m == 1) return 1;
    mpz_class res = resultant(p, p.derivative());
    mpz_class disc;
    mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), p.leading().get_mpz_t());
    if ((static_cast<long>(m) * (m - 1) / 2) % 2 == 1) disc = -disc;
    return disc;
}

std::vector<mpz_class> newton_power_sums(const IntPoly& monic, int kmax) {
    if (monic.is_zero() || monic.leading() != 1)
        throw Error("newton_power_sums needs a monic polynomial");
    const int m = monic.degree();
    // e_k = (-1)^k * coefficient of t^{m-k}
    std::vector<mpz_class> e(m + 1);
    e[0] = 1;
    for (int k = 1; k <= m; ++k) e[k] = (k % 2 ? -monic[m - k] : monic[m - k]);
    std::vector<mpz_class> q(kmax + 1);
    q[0] = m;
    for (int k = 1; k <= kmax; ++k) {
        mpz_class acc(0);
        for (int i = 1; i < k && i <= m; ++i) {
            mpz_class term = e[i] * q[k - i];
            acc += (i % 2 ? term : mpz_class(-term));
        }
        if (k <= m) {
            mpz_class term = e[k] * k;
            acc += (k % 2 ? term : mpz_class(-term));
        }
        q[k] = acc;
    }
    return q;
}

// ---------------------------------------------------------------------------

mpq_class RationalFn::eval(const mpq_class& x) const {
    mpq_class d = den.eval(x);
    if (d == 0) throw ZeroDenominator();
    return num.eval(x) / d;
}

RationalFn reduce_rational_function(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw ZeroDenominator();
    if (num.is_zero()) return {IntPoly(), IntPoly::one()};
    IntPoly g = poly_gcd(num, den);
    IntPoly n = divide_exact(num, g);
    IntPoly d = divide_exact(den, g);
    mpz_class joint;
    mpz_gcd(joint.get_mpz_t(), n.content().get_mpz_t(), d.content().get_mpz_t());
    if (d.leading() < 0) joint = -joint;
    std::vector<mpz_class> nc = n.coeffs(), dc = d.coeffs();
    for (auto& x : nc) x /= joint;
    for (auto& x : dc) x /= joint;
    return {IntPoly(std::move(nc)), IntPoly(std::move(dc))};
}

// ---------------------------------------------------------------------------
// RatPoly

RatPoly RatPoly::from(const IntPoly& p) {
    std::vector<mpq_class> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const mpq_class& k) const {
    std::vector<mpq_class> r = c_;
    for (auto& x : r) x *= k;
    return RatPoly(std::move(r));
}

mpq_class RatPoly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Mat<mpq_class> RatPoly::eval(const Mat<mpq_class>& m) const {
    if (m.rows() != m.cols()) throw DimensionMismatch("polynomial of a non-square matrix");
    const int n = m.rows();
    Mat<mpq_class> acc(n, n);
    if (is_zero()) return acc;
    for (int i = degree(); i >= 0; --i) {
        if (i != degree()) acc = acc * m;
        for (int d = 0; d < n; ++d) acc(d, d) += c_[i];
    }
    return acc;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        mpq_class a = c_[k];
        if (a == 0) continue;
        mpq_class mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != 1) out << mag.get_str();
        if (k > 0) {
            if (mag != 1) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

RatDivision rat_divide(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial();
    std::vector<mpq_class> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<mpq_class> quo(a.degree() - db + 1, mpq_class(0));
    for (int shift = a.degree() - db; shift >= 0; --shift) {
        mpq_class q = rem[shift + db] / b[db];
        if (q == 0) continue;
        quo[shift] = q;
        for (int i = 0; i <= db; ++i) rem[i + shift] -= q * b[i];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly rat_mod(const RatPoly& a, const RatPoly& modulus) {
    return rat_divide(a, modulus).remainder;
}

RatExtendedGcd rat_extended_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly u0 = RatPoly::one(), u1;
    RatPoly v0, v1 = RatPoly::one();
    while (!r1.is_zero()) {
        RatDivision d = rat_divide(r0, r1);
        RatPoly r2 = d.remainder;
        RatPoly u2 = u0 - d.quotient * u1;
        RatPoly v2 = v0 - d.quotient * v1;
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    mpq_class lead = r0[r0.degree()];
    mpq_class inv = 1 / lead;
    return {r0.scaled(inv), u0.scaled(inv), v0.scaled(inv)};
}

}  // namespace specwalk
