#include "qbundle/connection.hpp"

#include <algorithm>
#include <sstream>

namespace qb {

WForm wform_zero(const Bundle& b, const Calculus& c, int degree) { return WForm(b.dim_w(), c.zero(degree)); }

WForm wform_add(const WForm& x, const WForm& y) {
    if (x.size() != y.size()) throw std::invalid_argument("wform_add: size mismatch");
    WForm out = x;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t s = 0; s < out[i].coords.size(); ++s) out[i].coords[s] += y[i].coords.at(s);
    return out;
}

WForm wform_scale(const WForm& x, const Scalar& s) {
    WForm out = x;
    for (auto& f : out)
        for (auto& c : f.coords) c *= s;
    return out;
}

WForm wform_sub(const WForm& x, const WForm& y) { return wform_add(x, wform_scale(y, Scalar(-1))); }

bool wform_is_zero(const WForm& x) {
    for (const auto& f : x)
        if (!f.is_zero()) return false;
    return true;
}

int wform_level(const WForm& x) {
    int l = -1;
    for (const auto& f : x) l = std::max(l, f.level());
    return l;
}

WForm embed_section(const Bundle& b, const Calculus& c, const Section& s) {
    WForm out;
    for (const auto& x : b.im(s)) out.push_back(c.function(x));
    return out;
}

WForm apply_idempotent(const Bundle& b, const Calculus& c, const WForm& psi) {
    const CoeffMatrix& e = b.idempotent_matrix();
    const int n = psi.empty() ? 0 : psi[0].degree;
    WForm out = wform_zero(b, c, n);
    for (std::size_t g = 0; g < b.dim_w(); ++g)
        for (std::size_t a = 0; a < b.dim_w(); ++a)
            if (!e[g][a].is_zero() && !psi[a].is_zero()) out[g] = c.add(out[g], c.left_mult(e[g][a], psi[a]));
    return out;
}

bool in_image(const Bundle& b, const Calculus& c, const WForm& psi) { return apply_idempotent(b, c, psi) == psi; }

WForm wform_d(const Calculus& c, const WForm& psi) {
    WForm out;
    for (const auto& f : psi) out.push_back(c.d(f));
    return out;
}

WForm wform_right(const Calculus& c, const WForm& psi, const FormElement& w) {
    WForm out;
    for (const auto& f : psi) out.push_back(c.wedge(f, w));
    return out;
}

WForm wform_left(const Calculus& c, const CoeffElement& f, const WForm& psi) {
    WForm out;
    for (const auto& x : psi) out.push_back(c.left_mult(f, x));
    return out;
}

WForm partial(const Bundle& b, const Calculus& c, const Section& s) {
    return apply_idempotent(b, c, wform_d(c, embed_section(b, c, s)));
}

WForm partial_explicit(const Bundle& b, const Calculus& c, const std::vector<CoeffElement>& a) {
    const std::size_t d = b.dim_w();
    if (a.size() != d) throw std::invalid_argument("partial_explicit: one coefficient per generator");
    const Completion& comp = b.completion();
    const int bound = c.level_bound();
    // S(t_{delta alpha}) a_alpha summed over alpha.
    std::vector<CoeffElement> sa(d);
    for (std::size_t delta = 0; delta < d; ++delta)
        for (std::size_t alpha = 0; alpha < d; ++alpha)
            if (!b.st(delta, alpha).is_zero() && !a[alpha].is_zero())
                sa[delta] += multiply(b.st(delta, alpha), a[alpha], bound);
    WForm out = wform_zero(b, c, 1);
    const auto gens = b.generators();
    for (std::size_t beta = 0; beta < d; ++beta) {
        CoeffElement g;
        for (std::size_t j = 0; j < b.fiber().dim(); ++j)
            for (std::size_t gamma = 0; gamma < d; ++gamma) {
                const Scalar& em = comp.emb(gamma, j);
                if (em.is_zero() || b.t(beta, gamma).is_zero()) continue;
                for (std::size_t delta = 0; delta < d; ++delta) {
                    const Scalar& pr = comp.proj(j, delta);
                    if (pr.is_zero() || sa[delta].is_zero()) continue;
                    g += multiply(b.t(beta, gamma), sa[delta], bound) * (em * pr);
                }
            }
        if (g.is_zero()) continue;
        const FormElement dg = c.d0(g);
        const WForm zeta = embed_section(b, c, gens[beta]);
        for (std::size_t r = 0; r < d; ++r)
            if (!zeta[r].is_zero()) out[r] = c.add(out[r], c.left_mult(zeta[r].coords[0], dg));
    }
    return out;
}

WForm nabla0(const Bundle& b, const Calculus& c, const WForm& psi) {
    return apply_idempotent(b, c, wform_d(c, psi));
}

WForm nabla0_chain(const Bundle& b, const Calculus& c, const WForm& psi) {
    const int n = psi.empty() ? 0 : psi[0].degree;
    WForm out = wform_zero(b, c, n + 1);
    const auto gens = b.generators();
    for (std::size_t a = 0; a < b.dim_w(); ++a) {
        if (psi[a].is_zero()) continue;
        const WForm dz = partial(b, c, gens[a]);
        out = wform_add(out, wform_right(c, dz, psi[a]));
        const WForm zeta = embed_section(b, c, gens[a]);
        const FormElement dpsi = c.d(psi[a]);
        for (std::size_t r = 0; r < b.dim_w(); ++r)
            if (!zeta[r].is_zero()) out[r] = c.add(out[r], c.left_mult(zeta[r].coords[0], dpsi));
    }
    return out;
}

SectionFormMap form_matrix_map(const Bundle& b, const Calculus& c, const std::vector<std::vector<FormElement>>& m) {
    return [&b, &c, m](const Section& s) {
        const WForm x = embed_section(b, c, s);
        WForm out = wform_zero(b, c, 1);
        for (std::size_t g = 0; g < b.dim_w(); ++g)
            for (std::size_t a = 0; a < b.dim_w(); ++a)
                if (!m[g][a].is_zero() && !x[a].is_zero()) out[g] = c.add(out[g], c.right_mult(m[g][a], x[a].coords[0]));
        return apply_idempotent(b, c, out);
    };
}

WForm ConnectionMap::apply(const Bundle& b, const Calculus& c, const WForm& psi) const {
    WForm out = nabla0(b, c, psi);
    for (std::size_t a = 0; a < perturbation.size(); ++a)
        if (!psi[a].is_zero()) out = wform_add(out, wform_right(c, perturbation[a], psi[a]));
    return out;
}

ConnectionMap base_connection() { return {}; }

ConnectionMap make_connection(const Bundle& b, const Calculus& c, const SectionFormMap& a, int cert_level) {
    const std::size_t d = b.dim_w();
    const auto gens = b.generators();
    ConnectionMap out;
    for (std::size_t alpha = 0; alpha < d; ++alpha) {
        WForm col = a(gens[alpha]);
        if (col.size() != d || (!col.empty() && col[0].degree != 1))
            throw NotLinear("A(zeta_" + std::to_string(alpha) + ") is not a one-form valued section");
        if (!in_image(b, c, col)) throw NotLinear("A(zeta_" + std::to_string(alpha) + ") is not fixed by e");
        out.perturbation.push_back(std::move(col));
    }
    const auto basis = invariants(ThetaChoice{}, cert_level).elements;
    for (std::size_t alpha = 0; alpha < d; ++alpha)
        for (const auto& g : basis) {
            const WForm lhs = a(b.wp(alpha, g));
            WForm rhs;
            for (const auto& f : out.perturbation[alpha]) rhs.push_back(c.right_mult(f, g));
            if (lhs != rhs) {
                std::ostringstream os;
                os << "A(zeta_" << alpha << " g) != A(zeta_" << alpha << ") g for g = " << g.to_string();
                throw NotLinear(os.str());
            }
        }
    return out;
}

bool difference_is_linear(const Bundle& b, const Calculus& c, const ConnectionMap& d1, const ConnectionMap& d2,
                          int cert_level) {
    const auto gens = b.generators();
    const auto basis = invariants(ThetaChoice{}, cert_level).elements;
    for (std::size_t alpha = 0; alpha < b.dim_w(); ++alpha) {
        const WForm z = embed_section(b, c, gens[alpha]);
        const WForm base = wform_sub(d1.apply(b, c, z), d2.apply(b, c, z));
        for (const auto& g : basis) {
            const WForm zg = embed_section(b, c, b.wp(alpha, g));
            const WForm lhs = wform_sub(d1.apply(b, c, zg), d2.apply(b, c, zg));
            WForm rhs;
            for (const auto& f : base) rhs.push_back(c.right_mult(f, g));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

WForm CurvatureMap::extend(const Calculus& c, const WForm& psi) const {
    const int n = psi.empty() ? 0 : psi[0].degree;
    WForm out(psi.size(), c.zero(n + 2));
    for (std::size_t a = 0; a < psi.size(); ++a) {
        if (psi[a].is_zero()) continue;
        out = wform_add(out, wform_right(c, columns[a], psi[a]));
    }
    return out;
}

bool CurvatureMap::is_zero() const {
    for (const auto& col : columns)
        if (!wform_is_zero(col)) return false;
    return true;
}

CurvatureMap curvature(const Bundle& b, const Calculus& c, const ConnectionMap& d) {
    CurvatureMap f;
    for (const auto& z : b.generators()) {
        const WForm psi = embed_section(b, c, z);
        f.columns.push_back(d.apply(b, c, d.apply(b, c, psi)));
    }
    return f;
}

bool bianchi(const Bundle& b, const Calculus& c, const ConnectionMap& d, const CurvatureMap& f) {
    const auto gens = b.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
        const WForm z = embed_section(b, c, gens[a]);
        if (d.apply(b, c, f.columns[a]) != f.extend(c, d.apply(b, c, z))) return false;
    }
    return true;
}

TensoredSectionSpace tensored_space(const Bundle& b, const Calculus& c, const RestrictedCalculus& r, int degree) {
    TensoredSectionSpace out;
    out.window = r.window;
    out.degree = degree;
    out.idempotent_fixed = true;
    const auto gens = b.generators();
    for (const auto& z : gens) {
        const WForm zeta = embed_section(b, c, z);
        for (const auto& w : r.spans.at(static_cast<std::size_t>(degree))) {
            WForm psi;
            for (const auto& x : zeta) psi.push_back(c.left_mult(x.coords[0], w));
            if (wform_is_zero(psi)) continue;
            out.idempotent_fixed = out.idempotent_fixed && in_image(b, c, psi);
            out.elements.push_back(std::move(psi));
        }
    }
    return out;
}

}  // namespace qb
