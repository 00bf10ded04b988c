#pragma once

#include "qbundle/repmod.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qb {

/// Raised when a result would need Peter-Weyl levels above the active bound.
struct LevelOverflow : std::runtime_error {
    int required;
    int bound;
    LevelOverflow(int required_level, int level_bound);
};

/// Default cap on Peter-Weyl levels for operations that are not given one.
inline constexpr int kDefaultLevelBound = 12;

/// Index of the matrix coefficient t^(n)_{ij}.
struct CoeffIndex {
    int n = 0;
    int i = 0;
    int j = 0;
    auto operator<=>(const CoeffIndex&) const = default;
};

/// Finite combination of matrix coefficients t^(n)_{ij} of the irreducible
/// modules, i.e. an element of the coefficient Hopf algebra T_q.
class CoeffElement {
public:
    CoeffElement() = default;
    CoeffElement(const Scalar& c);  // c times the unit t^(0)_{00}
    static CoeffElement unit() { return CoeffElement(Scalar(1)); }
    static CoeffElement t(int n, int i, int j, const Scalar& c = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<CoeffIndex, Scalar>& terms() const { return terms_; }
    Scalar coeff(const CoeffIndex& idx) const;
    /// Highest level present; -1 for zero.
    int level() const;
    /// The level-n block.
    CoeffElement block(int n) const;

    void add_term(const CoeffIndex& idx, const Scalar& c);

    CoeffElement operator-() const;
    CoeffElement& operator+=(const CoeffElement& o);
    CoeffElement& operator-=(const CoeffElement& o);
    CoeffElement& operator*=(const Scalar& s);
    friend CoeffElement operator+(CoeffElement a, const CoeffElement& b) { return a += b; }
    friend CoeffElement operator-(CoeffElement a, const CoeffElement& b) { return a -= b; }
    friend CoeffElement operator*(CoeffElement a, const Scalar& s) { return a *= s; }
    friend CoeffElement operator*(const Scalar& s, CoeffElement a) { return a *= s; }
    /// Product with the default level bound.
    friend CoeffElement operator*(const CoeffElement& a, const CoeffElement& b);
    friend bool operator==(const CoeffElement& a, const CoeffElement& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    std::map<CoeffIndex, Scalar> terms_;
};

/// <t^(n)_{ij}, f^a k^b e^c>, the (i, j) entry of the monomial on irrep(n).
Scalar pairing(const CoeffIndex& t, const Pbw& m);

Scalar eval(const CoeffElement& f, const UEAElement& x);

/// Product in T_q. Throws LevelOverflow if the result reaches past level_bound.
CoeffElement multiply(const CoeffElement& f, const CoeffElement& g, int level_bound = kDefaultLevelBound);

using CoeffTensor = std::vector<std::pair<CoeffElement, CoeffElement>>;

/// Delta t_{ij} = sum_k t_{ik} (x) t_{kj}, one pair per (basis term, k).
CoeffTensor coproduct(const CoeffElement& f);
Scalar counit(const CoeffElement& f);
/// S(f)(x) = f(S(x)).
CoeffElement antipode(const CoeffElement& f);
/// f*(x) = f(S(x)*); u is real, so the conjugation on scalars is trivial.
CoeffElement star(const CoeffElement& f);

/// Right translation x o f = sum f_(1) <f_(2), x>.
CoeffElement circle(const UEAElement& x, const CoeffElement& f);
/// Left translation x . f = sum <f_(1), S^-1(x)> f_(2).
CoeffElement dot(const UEAElement& x, const CoeffElement& f);

/// Normalized Haar functional: the level-0 coefficient.
Scalar haar(const CoeffElement& f);
Scalar haar_norm_sq(const CoeffElement& f, int level_bound = kDefaultLevelBound);

/// Matrix of a linear map on the level-n block in the basis t^(n)_{ij}
/// (index i * (n+1) + j), determined by solving against the pairing.
const Matrix& antipode_block(int n);
const Matrix& star_block(int n);

/// Evaluation of the Peter-Weyl basis up to a level against a finite set of PBW
/// monomials. The pairing only couples t_{ij} with monomials f^a k^b e^c where
/// a - c = i - j, so rows and columns are grouped into blocks by that shift and
/// the rank certificate is computed one block at a time.
class PairingTable {
public:
    explicit PairingTable(int level);

    int level() const { return level_; }
    const std::vector<CoeffIndex>& basis() const { return basis_; }
    const std::vector<Pbw>& monomials() const { return monomials_; }
    /// Per shift: the column indices into basis(), the row indices into monomials(), the block.
    struct Block {
        int shift;
        std::vector<std::size_t> columns;
        std::vector<std::size_t> rows;
        Matrix values;
        std::size_t rank;
    };
    const std::vector<Block>& blocks() const { return blocks_; }
    bool full_column_rank() const;

    /// Recovers the coefficients of a functional on U_q from its values on
    /// monomials(); the functional must lie in the span of basis().
    /// Throws NoSolution otherwise.
    CoeffElement solve(const std::vector<Scalar>& values) const;

    /// Shared table for a given level.
    static const PairingTable& get(int level);

private:
    int level_;
    std::vector<CoeffIndex> basis_;
    std::vector<Pbw> monomials_;
    std::vector<Block> blocks_;
};

/// JSON-style text: [[n, i, j, "scalar"], ...].
std::string to_json(const CoeffElement& f);
CoeffElement coeff_from_json(const std::string& text);

}  // namespace qb
