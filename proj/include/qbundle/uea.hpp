#pragma once

#include "qbundle/scalar.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qb {

/// PBW monomial f^f k^k e^e.
struct Pbw {
    int f = 0;
    int k = 0;
    int e = 0;
    auto operator<=>(const Pbw&) const = default;
    int degree() const { return f + e + (k < 0 ? -k : k); }
};

/// Element of U_q(sl2) stored in PBW normal form (f's, then k's, then e's).
///
/// Conventions, fixed here once for the whole library:
///   k e k^-1 = q e,   k f k^-1 = q^-1 f,   e f - f e = (k^2 - k^-2) / (q - q^-1),
///   Delta(k) = k (x) k,   Delta(e) = e (x) k + k^-1 (x) e,   Delta(f) = f (x) k + k^-1 (x) f,
///   eps(e) = eps(f) = 0,  eps(k) = 1,
///   S(k) = k^-1,  S(e) = -q e,  S(f) = -q^-1 f,
///   e* = f,  f* = e,  k* = k  (u is real, so * fixes scalars).
/// Only rank 1 is implemented.
class UEAElement {
public:
    UEAElement() = default;
    UEAElement(const Scalar& c);
    static UEAElement monomial(const Pbw& m, const Scalar& c = Scalar(1));
    static UEAElement one() { return UEAElement(Scalar(1)); }
    static UEAElement e() { return monomial({0, 0, 1}); }
    static UEAElement f() { return monomial({1, 0, 0}); }
    static UEAElement k(int power = 1) { return monomial({0, power, 0}); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Pbw, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Pbw& m) const;
    int degree() const;

    void add_term(const Pbw& m, const Scalar& c);

    UEAElement operator-() const;
    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator-=(const UEAElement& o);
    UEAElement& operator*=(const Scalar& s);
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator*(UEAElement a, const Scalar& s) { return a *= s; }
    friend UEAElement operator*(const Scalar& s, UEAElement a) { return a *= s; }
    friend UEAElement operator*(const UEAElement& a, const UEAElement& b);
    friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.terms_ == b.terms_; }

    UEAElement pow(int n) const;

    /// "[c] f^a k^b e^c + ..." ; "0" for the zero element.
    std::string to_string() const;
    static UEAElement parse(const std::string& text);

private:
    std::map<Pbw, Scalar> terms_;
};

/// Product of two PBW monomials, in normal form.
UEAElement multiply_monomials(const Pbw& x, const Pbw& y);

/// Finite sum of simple tensors in U (x) U, kept as left PBW monomial -> right factor,
/// so that no left factor appears twice.
class TensorUEA {
public:
    TensorUEA() = default;
    static TensorUEA simple(const UEAElement& a, const UEAElement& b);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Pbw, UEAElement>& terms() const { return terms_; }
    std::vector<std::pair<UEAElement, UEAElement>> pairs() const;

    void add(const UEAElement& a, const UEAElement& b);
    void add_term(const Pbw& left, const UEAElement& right);

    TensorUEA& operator+=(const TensorUEA& o);
    TensorUEA& operator-=(const TensorUEA& o);
    TensorUEA& operator*=(const Scalar& s);
    friend TensorUEA operator+(TensorUEA a, const TensorUEA& b) { return a += b; }
    friend TensorUEA operator-(TensorUEA a, const TensorUEA& b) { return a -= b; }
    friend TensorUEA operator*(const TensorUEA& a, const TensorUEA& b);
    friend bool operator==(const TensorUEA& a, const TensorUEA& b) { return a.terms_ == b.terms_; }

    TensorUEA flipped() const;
    /// Multiplication map a (x) b -> a b.
    UEAElement multiply_legs() const;

private:
    std::map<Pbw, UEAElement> terms_;
};

/// Triple tensors, used for coassociativity checks.
class Tensor3UEA {
public:
    void add(const UEAElement& a, const UEAElement& b, const UEAElement& c);
    const std::map<std::pair<Pbw, Pbw>, UEAElement>& terms() const { return terms_; }
    friend bool operator==(const Tensor3UEA& a, const Tensor3UEA& b) { return a.terms_ == b.terms_; }

private:
    std::map<std::pair<Pbw, Pbw>, UEAElement> terms_;
};

TensorUEA coproduct(const UEAElement& x);
Scalar counit(const UEAElement& x);
UEAElement antipode(const UEAElement& x);
UEAElement antipode_inv(const UEAElement& x);
UEAElement star(const UEAElement& x);

/// (Delta (x) id) and (id (x) Delta) applied to a tensor.
Tensor3UEA coproduct_left(const TensorUEA& t);
Tensor3UEA coproduct_right(const TensorUEA& t);
/// Apply maps to the two legs independently.
TensorUEA map_legs(const TensorUEA& t, UEAElement (*left)(const UEAElement&),
                   UEAElement (*right)(const UEAElement&));

/// All PBW monomials f^a k^b e^c with a + |b| + c <= degree.
std::vector<Pbw> pbw_monomials(int degree);

}  // namespace qb
