#ifndef SPECWALK_POLY_HPP
#define SPECWALK_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "specwalk/errors.hpp"
#include "specwalk/matrix.hpp"

namespace specwalk {

/// Integer polynomial, coefficients ascending by degree. The zero polynomial
/// is the empty coefficient vector; otherwise the leading coefficient is
/// nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> ascending) : c_(std::move(ascending)) {
        normalize();
    }
    /// Convenience for literals: IntPoly::of({0, -2, 0, 1}) is t^3 - 2t.
    static IntPoly of(std::initializer_list<long> ascending);
    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({mpz_class(1)}); }
    /// t - r
    static IntPoly linear_root(const mpz_class& r);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& operator[](int k) const { return c_[k]; }
    const mpz_class& leading() const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly scaled(const mpz_class& k) const;
    IntPoly shifted(int by) const;  // multiply by t^by

    IntPoly derivative() const;

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class content() const;
    /// this / content, sign chosen so the leading coefficient is positive.
    IntPoly primitive_part() const;

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;
    double eval(double x) const;
    /// p(M) by Horner; M square.
    Mat<mpz_class> eval(const Mat<mpz_class>& m) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
struct PseudoDivision {
    IntPoly quotient;
    IntPoly remainder;
};
PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b);

/// Exact division; throws InvariantViolation if b does not divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// Polynomial gcd over Z (primitive PRS), returned with positive leading
/// coefficient; includes the gcd of the contents.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p'): same roots, all simple, primitive, positive leading
/// coefficient. Throws ZeroPolynomial on p = 0.
IntPoly square_free_part(const IntPoly& p);

bool is_square_free(const IntPoly& p);

/// Multiplicity of 0 as a root: index of the lowest nonzero coefficient.
int zero_multiplicity(const IntPoly& p);

/// Res(a, b) via Bareiss on the Sylvester matrix.
mpz_class resultant(const IntPoly& a, const IntPoly& b);

/// (-1)^{m(m-1)/2} Res(p, p') / lc(p), m = deg p.
mpz_class discriminant(const IntPoly& p);

/// Power sums q_k = sum_i r_i^k of the roots of a monic integer polynomial,
/// for k = 0..kmax, by Newton's identities. All integers.
std::vector<mpz_class> newton_power_sums(const IntPoly& monic, int kmax);

/// Reduced ratio of two integer polynomials: no common factor over Q, the
/// joint content divided out, denominator with positive leading coefficient.
struct RationalFn {
    IntPoly num;
    IntPoly den;

    bool operator==(const RationalFn& o) const { return num == o.num && den == o.den; }
    mpq_class eval(const mpq_class& x) const;  // throws ZeroDenominator at poles
};

RationalFn reduce_rational_function(const IntPoly& num, const IntPoly& den);

// ---------------------------------------------------------------------------
// Rational-coefficient polynomials. Only what the symmetry-polynomial
// machinery needs: ring ops, division with remainder, extended gcd.

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> ascending) : c_(std::move(ascending)) {
        normalize();
    }
    static RatPoly from(const IntPoly& p);
    static RatPoly one() { return RatPoly({mpq_class(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& operator[](int k) const { return c_[k]; }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly scaled(const mpq_class& k) const;

    mpq_class eval(const mpq_class& x) const;
    Mat<mpq_class> eval(const Mat<mpq_class>& m) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpq_class> c_;
};

struct RatDivision {
    RatPoly quotient;
    RatPoly remainder;
};
RatDivision rat_divide(const RatPoly& a, const RatPoly& b);

RatPoly rat_mod(const RatPoly& a, const RatPoly& modulus);

/// g = gcd(a,b) monic, plus u, v with u*a + v*b = g.
struct RatExtendedGcd {
    RatPoly g, u, v;
};
RatExtendedGcd rat_extended_gcd(const RatPoly& a, const RatPoly& b);

}  // namespace specwalk

#endif
