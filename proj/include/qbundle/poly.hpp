#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qb {

/// Dense univariate polynomial over the integers, coefficients stored from
/// the constant term upward. The coefficient vector never has a trailing zero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpz_class> coeffs);
    Poly(long c);
    static Poly constant(const mpz_class& c);
    /// c * u^k
    static Poly monomial(const mpz_class& c, int k);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& lc() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int k) const;

    /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
    int low_order() const;
    /// Divide by u^k; the low k coefficients must be zero.
    Poly shifted_down(int k) const;
    Poly shifted_up(int k) const;

    mpz_class content() const;
    Poly primitive_part() const;
    /// Sum of absolute values of the coefficients' bit sizes; used for pivot heuristics.
    std::size_t size_hint() const;
    mpz_class max_norm() const;

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const mpz_class& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const mpz_class& c) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Exact division by an integer that divides every coefficient.
    Poly div_exact(const mpz_class& c) const;
    /// Returns true and writes the quotient if b divides *this in Z[u].
    bool divides_by(const Poly& b, Poly* quotient) const;
    /// Exact division; throws std::logic_error if b does not divide.
    Poly div_exact(const Poly& b) const;
    /// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
    Poly pseudo_rem(const Poly& b) const;

    std::string to_string(const std::string& var = "u") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Greatest common divisor in Z[u], with positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace qb
