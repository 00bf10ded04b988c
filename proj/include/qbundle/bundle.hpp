#pragma once

#include "qbundle/homspace.hpp"

#include <vector>

namespace qb {

/// Finite-dimensional module of the Cartan subalgebra (Theta empty) in a
/// weight basis v_0..v_{d-1}. k acts on v_r by u^(k_exponents[r]); the weight
/// is k_exponents[r] / 2 and is integral iff the exponent is even.
class LModule {
public:
    LModule() = default;
    static LModule from_weights(const std::vector<int>& weights);
    static LModule from_k_exponents(std::vector<int> exponents);

    std::size_t dim() const { return exps_.size(); }
    const std::vector<int>& k_exponents() const { return exps_; }
    bool integral() const;
    /// Throws std::invalid_argument if a weight is not integral.
    std::vector<int> weights() const;

private:
    std::vector<int> exps_;
};

/// Element of V (x) T_q: one coefficient function per basis vector of V.
using Section = std::vector<CoeffElement>;
/// Element of W (x) T_q: one coefficient function per basis vector of W.
using WVector = std::vector<CoeffElement>;
/// Square matrix with entries in T_q.
using CoeffMatrix = std::vector<std::vector<CoeffElement>>;

int level_of(const std::vector<CoeffElement>& v);
bool is_zero(const std::vector<CoeffElement>& v);
std::vector<CoeffElement> add(const std::vector<CoeffElement>& a, const std::vector<CoeffElement>& b);
std::vector<CoeffElement> scale(const std::vector<CoeffElement>& a, const Scalar& s);
/// Componentwise right and left multiplication by a function.
std::vector<CoeffElement> right_multiply(const std::vector<CoeffElement>& v, const CoeffElement& a,
                                         int level_bound = kDefaultLevelBound);
std::vector<CoeffElement> left_multiply(const CoeffElement& a, const std::vector<CoeffElement>& v,
                                        int level_bound = kDefaultLevelBound);
CoeffMatrix matmul(const CoeffMatrix& a, const CoeffMatrix& b, int level_bound = kDefaultLevelBound);
WVector apply(const CoeffMatrix& m, const WVector& v, int level_bound = kDefaultLevelBound);

/// W restricted to U_l containing V: one irrep(|m|) per weight entry of V,
/// with V's line sent to the weight-m vector of its own copy.
struct Completion {
    Module w;
    std::vector<int> highest;       // highest weight of each summand
    std::vector<std::size_t> offset;  // first basis index of each summand
    Matrix emb;                      // dimW x dimV
    Matrix proj;                     // dimV x dimW
};

Completion complete(const LModule& v);

/// Def. 3 constraint x o zeta = (S(x) (x) id) zeta for the generators k^(+-1).
bool satisfies_constraint(const LModule& v, const Section& s);

/// Basis of the sections with every component of level <= N, from the
/// blockwise kernel of the constraint.
std::vector<Section> sections_basis(const LModule& v, int level);

/// Section space of V together with the maps to and from W (x) E_q.
class Bundle {
public:
    explicit Bundle(LModule v, int level_bound = kDefaultLevelBound);

    const LModule& fiber() const { return v_; }
    const Completion& completion() const { return c_; }
    std::size_t dim_w() const { return c_.w.dim(); }
    int level_bound() const { return bound_; }
    /// Peter-Weyl level of the matrix coefficients of W.
    int w_level() const;

    /// Matrix coefficient t_{beta alpha} of W and its antipode.
    const CoeffElement& t(std::size_t beta, std::size_t alpha) const { return t_[beta][alpha]; }
    const CoeffElement& st(std::size_t beta, std::size_t alpha) const { return st_[beta][alpha]; }

    /// The map W (x) E_q -> H(V).
    Section wp(const WVector& x) const;
    Section wp(std::size_t alpha, const CoeffElement& a) const;
    /// The map H(V) -> W (x) E_q.
    WVector im(const Section& s) const;

    /// Generators zeta_alpha = wp(w_alpha (x) 1).
    std::vector<Section> generators() const;
    /// Matrix of e = im o wp over T_q: e(x)_gamma = sum_alpha E_{gamma alpha} x_alpha.
    const CoeffMatrix& idempotent_matrix() const { return e_; }
    WVector apply_idempotent(const WVector& x) const;

private:
    LModule v_;
    Completion c_;
    int bound_;
    std::vector<std::vector<CoeffElement>> t_, st_;
    CoeffMatrix e_;
};

struct BundleIdempotent {
    int level = 0;          // window of the domain W (x) E_q^{<=level}
    int matched_level = 0;  // level + w_level(): window of the image sections
    CoeffMatrix matrix;
    bool matrix_idempotent = false;   // E * E == E over T_q
    bool window_idempotent = false;   // e(e(x)) == e(x) on the domain basis
    std::size_t rank = 0;             // rank of e on the domain
    std::size_t sections_dim = 0;     // dim of sections_basis at matched_level
};

BundleIdempotent idempotent(const LModule& v, int level, int level_bound = kDefaultLevelBound);

/// Expresses a section as sum_alpha zeta_alpha a_alpha with a_alpha in
/// E_q^{<=level} by solving the linear system; throws NoSolution.
std::vector<CoeffElement> generation_coefficients(const Bundle& b, const Section& s, int level);

/// Basis of holomorphic sections: the kernel of the U_p constraint, where e
/// acts by zero on the line V. Requires dim V == 1.
std::vector<Section> holomorphic_sections(const LModule& v, int level);

/// Matrices of e, f, k under the dot action on the span of a basis of sections.
struct DotModule {
    Matrix e, f, k;
};
DotModule dot_action(const std::vector<Section>& basis);
/// No proper invariant subspace: the kernel of e is one-dimensional, its
/// f-string spans everything, and the commutant is the scalars.
bool is_irreducible(const DotModule& m);

}  // namespace qb
