#pragma once

#include "qbundle/bundle.hpp"
#include "qbundle/calculus.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qb {

struct NotLinear : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of W (x) Omega^n: one form of the same degree per basis vector of W.
/// Sections tensored with forms are the elements fixed by the bundle idempotent.
using WForm = std::vector<FormElement>;

WForm wform_zero(const Bundle& b, const Calculus& c, int degree);
WForm wform_add(const WForm& x, const WForm& y);
WForm wform_sub(const WForm& x, const WForm& y);
WForm wform_scale(const WForm& x, const Scalar& s);
bool wform_is_zero(const WForm& x);
int wform_level(const WForm& x);

/// im(s) as a degree-0 element.
WForm embed_section(const Bundle& b, const Calculus& c, const Section& s);
/// (e psi)_g = sum_a E_{g a} psi_a.
WForm apply_idempotent(const Bundle& b, const Calculus& c, const WForm& psi);
bool in_image(const Bundle& b, const Calculus& c, const WForm& psi);
/// Componentwise d.
WForm wform_d(const Calculus& c, const WForm& psi);
/// psi w, componentwise product of forms.
WForm wform_right(const Calculus& c, const WForm& psi, const FormElement& w);
/// f psi, componentwise left multiplication by a function.
WForm wform_left(const Calculus& c, const CoeffElement& f, const WForm& psi);

/// The chain im, then id (x) d, then the idempotent.
WForm partial(const Bundle& b, const Calculus& c, const Section& s);
/// partial(sum_a zeta_a a_a) = sum_b zeta_b d(sum_{j in V, a} t_{b j} S(t_{j a}) a_a), with the
/// j-sum running over the image of V in W. Built from t and S(t) directly.
WForm partial_explicit(const Bundle& b, const Calculus& c, const std::vector<CoeffElement>& a);

/// Grassmann form e o (id (x) d).
WForm nabla0(const Bundle& b, const Calculus& c, const WForm& psi);
/// sum_a partial(zeta_a) psi_a + zeta_a d psi_a, for psi in the image of e.
WForm nabla0_chain(const Bundle& b, const Calculus& c, const WForm& psi);

/// A map from sections to e(W (x) Omega^1), the shape of a difference of two connections.
using SectionFormMap = std::function<WForm(const Section&)>;
/// s -> e M im(s) for a matrix M of one-forms; right linear by construction.
SectionFormMap form_matrix_map(const Bundle& b, const Calculus& c, const std::vector<std::vector<FormElement>>& m);

/// nabla0 + A, where A acts on psi = sum zeta_a psi_a by sum_a A(zeta_a) psi_a.
struct ConnectionMap {
    std::vector<WForm> perturbation;  // A(zeta_a) per generator; empty for nabla0
    WForm apply(const Bundle& b, const Calculus& c, const WForm& psi) const;
};

/// Certifies A(zeta_a g) = A(zeta_a) g for the generators zeta_a and the
/// invariant basis g up to cert_level, and that every A(zeta_a) is fixed by e.
/// Throws NotLinear with the failing pair.
ConnectionMap make_connection(const Bundle& b, const Calculus& c, const SectionFormMap& a, int cert_level = 2);
ConnectionMap base_connection();

/// (D1 - D2)(zeta_a g) == (D1 - D2)(zeta_a) g for all generators and invariant g up to the level.
bool difference_is_linear(const Bundle& b, const Calculus& c, const ConnectionMap& d1, const ConnectionMap& d2,
                          int cert_level = 2);

/// F = nabla^2 on the generators: column a is nabla(nabla(zeta_a)), a degree-2 element.
struct CurvatureMap {
    std::vector<WForm> columns;
    /// Right Omega-linear extension: F(psi) = sum_a F(zeta_a) psi_a.
    WForm extend(const Calculus& c, const WForm& psi) const;
    bool is_zero() const;
};

CurvatureMap curvature(const Bundle& b, const Calculus& c, const ConnectionMap& d);
/// nabla(F(zeta_a)) == F(nabla(zeta_a)) for every generator.
bool bianchi(const Bundle& b, const Calculus& c, const ConnectionMap& d, const CurvatureMap& f);

/// Spanning set of e(W (x) Omega^n(E_q)) at a window: zeta_a w for w in the restricted span.
struct TensoredSectionSpace {
    int window = 0;
    int degree = 0;
    std::vector<WForm> elements;
    bool idempotent_fixed = false;  // e psi == psi for every element
};
TensoredSectionSpace tensored_space(const Bundle& b, const Calculus& c, const RestrictedCalculus& r, int degree);

}  // namespace qb
