#pragma once

#include "qbundle/poly.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qb {

/// Raised when a rational function is specialized at one of its poles.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact element of the field Q(u). The deformation parameter is q = u^4,
/// so q^(1/2) = u^2 and every weight-pairing exponent is an integer power of u.
///
/// Canonical form: u^shift * num / den with num(0) != 0 (or num == 0),
/// den(0) != 0, gcd(num, den) == 1 in Z[u] including content, and lc(den) > 0.
/// Two Scalars are equal iff their canonical forms coincide.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long c);
    Scalar(const mpz_class& c);
    Scalar(const mpq_class& c);

    /// The indeterminate u.
    static Scalar u();
    /// u^k for any integer k.
    static Scalar u_pow(int k);
    /// q = u^4
    static Scalar q() { return u_pow(4); }
    /// c * u^k
    static Scalar laurent(const mpz_class& c, int k);
    /// num(u) / den(u) for arbitrary integer polynomials.
    static Scalar fraction(const Poly& num, const Poly& den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    /// True when the value is a Laurent polynomial in u.
    bool is_laurent() const { return den_.is_one(); }

    int shift() const { return shift_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    /// Exact substitution u = u0. Throws PoleError at u0 = 0 with a negative
    /// u-power or when the denominator vanishes.
    mpq_class eval_at(const mpq_class& u0) const;

    Scalar inverse() const;
    Scalar pow(int e) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Rough bit-size, used to pick cheap pivots.
    std::size_t complexity() const { return num_.size_hint() + den_.size_hint(); }

    /// Human-readable form, e.g. "(u^8 + 1)/(u^4)". Round-trips through parse().
    std::string to_string() const;
    /// Parses expressions in u built from integers, u, + - * / ^ and parentheses.
    static Scalar parse(const std::string& text);

private:
    void normalize();
    int shift_ = 0;
    Poly num_;
    Poly den_;
};

/// Quantum integer [n] = (q^n - q^-n) / (q - q^-1); [-n] = -[n].
Scalar qint(int n);
/// [n]! = [1][2]...[n]
Scalar qfactorial(int n);

}  // namespace qb
