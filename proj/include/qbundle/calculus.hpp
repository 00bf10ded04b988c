#pragma once

#include "qbundle/homspace.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qb {

struct AxiomViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SplitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Left-covariant first order calculus given by a quantum tangent space:
/// K functionals X_a and a K x K matrix of functionals F with
///   eps(X_a) = 0, eps(F_ab) = delta_ab,
///   Delta(X_a) = 1 (x) X_a + sum_b X_b (x) F_ba,  Delta(F_ab) = sum_c F_ac (x) F_cb.
/// Invariant forms omega_a, a = r * dim + s, satisfy
///   da = sum_a (X_a o a) omega_a,   omega_a b = sum_c (F_ac o b) omega_c.
struct CalculusData {
    Module source;
    std::size_t K = 0;
    std::vector<UEAElement> M;  // X_a + delta
    std::vector<UEAElement> X;
    std::vector<std::vector<UEAElement>> F;
    /// The U_q-module structure on the invariant forms induced by the right
    /// coaction: ad_x(X_d) = S(x_(1)) X_d x_(2) = sum_b gamma(x)_{db} X_b.
    Module gamma;
    /// Coordinates of the bi-invariant form theta = sum_r omega_rr.
    Vector theta;
    bool nondegenerate = false;
};

struct AxiomReport {
    bool counit_x = true, counit_f = true, coproduct_x = true, coproduct_f = true;
    std::string failure;
    bool all() const { return counit_x && counit_f && coproduct_x && coproduct_f; }
};

/// Builds the calculus from M = (id (x) pi)(R_21 R_12) on the module wc,
/// with X = M - delta and F_{(t p),(r s)} = (R_21)_{rt} (R_12)_{ps}.
/// Throws AxiomViolation if an identity fails.
CalculusData from_rep(const Module& wc);
AxiomReport check_axioms(const CalculusData& c);

/// Braiding of invariant forms: sigma(omega_a (x) omega_b) = sum F_al(R_eb) omega_e (x) omega_l,
/// where R is the coaction matrix gamma. Index of omega_a (x) omega_b is a * K + b.
Matrix braiding_matrix(const CalculusData& c);
/// P (gamma (x) gamma)(R), the flip composed with the universal R-matrix.
Matrix r_braiding_matrix(const CalculusData& c);

struct Eigenspace {
    Scalar value;
    std::vector<Vector> vectors;
};

struct BraidingSplit {
    Matrix sigma, plus, minus;
    std::vector<Eigenspace> eigenspaces;
    std::vector<Vector> kernel_minus;  // basis of ker sigma_-
};

/// Eigenvalues of the form +-u^k are searched exactly; the positive class is
/// the set with positive value at u = 1. Throws SplitError if the eigenspaces
/// do not fill the space or an eigenvalue vanishes at u = 1.
BraidingSplit split_braiding(const Matrix& sigma);
BraidingSplit braiding(const CalculusData& c);

/// Quotient of the tensor algebra over the invariant forms by the ideal
/// generated by a subspace of degree-2 tensors, with a standard monomial
/// basis in every degree.
class ExteriorAlgebra {
public:
    ExteriorAlgebra(std::size_t K, std::vector<Vector> relations);

    std::size_t K() const { return K_; }
    std::size_t dim(int n) const;
    const std::vector<std::vector<int>>& words(int n) const;
    /// Coordinates of a word in the standard basis of its degree.
    Vector reduce_word(const std::vector<int>& word) const;
    /// Reduction of a tensor given in coordinates over all K^n words (base-K index).
    Vector reduce_tensor(int n, const Vector& coords) const;

private:
    struct Degree {
        std::vector<std::vector<int>> words;
        Matrix normal;  // dim(n) x (dim(n-1) * K)
    };
    const Degree& degree(int n) const;

    std::size_t K_;
    std::vector<Vector> relations_;
    mutable std::recursive_mutex mu_;
    mutable std::vector<std::unique_ptr<Degree>> degrees_;
    mutable std::map<std::vector<int>, Vector> word_cache_;
};

/// Element of Omega^n or Gamma^(x)n in left-trivialized coordinates: one
/// function per standard word (reduced) or per word in base-K order.
struct FormElement {
    int degree = 0;
    bool reduced = true;
    std::vector<CoeffElement> coords;

    friend bool operator==(const FormElement& a, const FormElement& b) {
        return a.degree == b.degree && a.reduced == b.reduced && a.coords == b.coords;
    }
    bool is_zero() const;
    int level() const;
};

/// The differential calculus with all its structure maps.
class Calculus {
public:
    explicit Calculus(CalculusData data, int level_bound = kDefaultLevelBound);

    const CalculusData& data() const { return data_; }
    const BraidingSplit& split() const { return split_; }
    const ExteriorAlgebra& algebra() const { return *algebra_; }
    std::size_t K() const { return data_.K; }
    int level_bound() const { return bound_; }
    std::size_t omega_dim(int n) const { return algebra_->dim(n); }

    FormElement zero(int n) const;
    FormElement function(const CoeffElement& a) const;
    FormElement add(const FormElement& a, const FormElement& b) const;
    FormElement scale(const FormElement& a, const Scalar& s) const;

    /// Reduction modulo the ideal J of an unreduced element.
    FormElement reduce_mod_J(const FormElement& w) const;

    FormElement d0(const CoeffElement& a) const;
    FormElement left_mult(const CoeffElement& a, const FormElement& w) const;
    FormElement right_mult(const FormElement& w, const CoeffElement& b) const;
    FormElement wedge(const FormElement& a, const FormElement& b) const;
    /// Invariant form with a single standard word of degree n.
    FormElement basis_form(int n, std::size_t index) const;
    FormElement theta() const;
    /// d w = theta w - (-1)^n w theta.
    FormElement d(const FormElement& w) const;

    /// x . (f omega_S) = (x . f) omega_S.
    FormElement dot(const UEAElement& x, const FormElement& w) const;
    /// p o (f omega_S) = sum (p_(1) o f) gamma(p_(2)) omega_S.
    FormElement circle(const UEAElement& p, const FormElement& w) const;

private:
    CoeffElement circle_f(std::size_t a, std::size_t c, const CoeffElement& g) const;
    Vector act_on_word(const UEAElement& x, const std::vector<int>& word) const;

    CalculusData data_;
    BraidingSplit split_;
    std::unique_ptr<ExteriorAlgebra> algebra_;
    int bound_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<int, std::size_t, std::size_t>, Matrix> f_blocks_;
};

/// Spans of the restricted forms Omega^n(E_q) = span{a_0 db_1 ... db_n} with
/// every a_i, b_i in the invariant basis up to the window.
struct RestrictedCalculus {
    int window = 0;
    std::vector<std::vector<FormElement>> spans;  // by degree
    std::vector<std::size_t> dims;                // rank per degree
    std::vector<bool> closed;                     // d(Omega^n) inside Omega^(n+1), for n < spans.size() - 1
};

RestrictedCalculus restrict(const Calculus& c, const ThetaChoice& theta, int window, int max_degree = 2);

/// Rank of a set of forms of one degree.
std::size_t form_rank(const std::vector<FormElement>& forms);
/// True iff every element of sub lies in the span of span.
bool span_contains(const std::vector<FormElement>& span, const std::vector<FormElement>& sub);

/// p o w with the membership check against a restricted span.
FormElement circle_on_restricted(const Calculus& c, const RestrictedCalculus& r, const UEAElement& p, const FormElement& w);

}  // namespace qb
