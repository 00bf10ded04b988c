#include "qbundle/bundle.hpp"

#include <cstdlib>
#include <map>

namespace qb {

LModule LModule::from_weights(const std::vector<int>& weights) {
    std::vector<int> e;
    for (int m : weights) e.push_back(2 * m);
    return from_k_exponents(std::move(e));
}

LModule LModule::from_k_exponents(std::vector<int> exponents) {
    if (exponents.empty()) throw std::invalid_argument("fiber module must be nonzero");
    LModule v;
    v.exps_ = std::move(exponents);
    return v;
}

bool LModule::integral() const {
    for (int e : exps_)
        if (e % 2 != 0) return false;
    return true;
}

std::vector<int> LModule::weights() const {
    if (!integral()) throw std::invalid_argument("fiber module has a non-integral weight");
    std::vector<int> w;
    for (int e : exps_) w.push_back(e / 2);
    return w;
}

int level_of(const std::vector<CoeffElement>& v) {
    int l = -1;
    for (const auto& c : v) l = std::max(l, c.level());
    return l;
}

bool is_zero(const std::vector<CoeffElement>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<CoeffElement> add(const std::vector<CoeffElement>& a, const std::vector<CoeffElement>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
    std::vector<CoeffElement> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

std::vector<CoeffElement> scale(const std::vector<CoeffElement>& a, const Scalar& s) {
    std::vector<CoeffElement> r = a;
    for (auto& c : r) c *= s;
    return r;
}

std::vector<CoeffElement> right_multiply(const std::vector<CoeffElement>& v, const CoeffElement& a, int level_bound) {
    std::vector<CoeffElement> r;
    r.reserve(v.size());
    for (const auto& c : v) r.push_back(multiply(c, a, level_bound));
    return r;
}

std::vector<CoeffElement> left_multiply(const CoeffElement& a, const std::vector<CoeffElement>& v, int level_bound) {
    std::vector<CoeffElement> r;
    r.reserve(v.size());
    for (const auto& c : v) r.push_back(multiply(a, c, level_bound));
    return r;
}

CoeffMatrix matmul(const CoeffMatrix& a, const CoeffMatrix& b, int level_bound) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
    CoeffMatrix out(n, std::vector<CoeffElement>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[k][j].is_zero()) out[i][j] += multiply(a[i][k], b[k][j], level_bound);
        }
    return out;
}

WVector apply(const CoeffMatrix& m, const WVector& v, int level_bound) {
    WVector out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += multiply(m[i][j], v[j], level_bound);
    return out;
}

Completion complete(const LModule& v) {
    const auto weights = v.weights();
    Completion c;
    std::size_t dim = 0;
    Module w;
    for (std::size_t r = 0; r < weights.size(); ++r) {
        const int n = std::abs(weights[r]);
        c.highest.push_back(n);
        c.offset.push_back(dim);
        w = r == 0 ? irrep(n) : direct_sum(w, irrep(n));
        dim += static_cast<std::size_t>(n) + 1;
    }
    c.w = std::move(w);
    c.emb = Matrix(dim, v.dim());
    c.proj = Matrix(v.dim(), dim);
    for (std::size_t r = 0; r < weights.size(); ++r) {
        // Index of the weight-m vector in irrep(|m|): top for m >= 0, bottom otherwise.
        const std::size_t j = weights[r] >= 0 ? 0 : static_cast<std::size_t>(c.highest[r]);
        c.emb(c.offset[r] + j, r) = 1;
        c.proj(r, c.offset[r] + j) = 1;
    }
    return c;
}

bool satisfies_constraint(const LModule& v, const Section& s) {
    if (s.size() != v.dim()) return false;
    for (std::size_t r = 0; r < s.size(); ++r) {
        const Scalar expected = Scalar::u_pow(-v.k_exponents()[r]);
        if (!(circle(UEAElement::k(), s[r]) == s[r] * expected)) return false;
        if (!(circle(UEAElement::k(-1), s[r]) == s[r] * expected.inverse())) return false;
    }
    return true;
}

namespace {

// Sections supported on one basis vector of V whose right index ranges over
// the common kernel of the given matrices on irrep(n).
void append_blocks(std::vector<Section>& out, std::size_t dim_v, std::size_t r, int n,
                   const std::vector<Matrix>& conditions) {
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    std::vector<Vector> rows;
    for (const auto& m : conditions)
        for (std::size_t i = 0; i < d; ++i) rows.push_back(m.row(i));
    const auto ker = kernel(Matrix::from_rows(rows, d));
    for (int i = 0; i <= n; ++i)
        for (const auto& c : ker) {
            Section s(dim_v);
            for (std::size_t j = 0; j < d; ++j) s[r].add_term({n, i, static_cast<int>(j)}, c[j]);
            out.push_back(std::move(s));
        }
}

Matrix k_condition(int n, int exponent, int power) {
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    return irrep(n).k_power(power) - Matrix::identity(d) * Scalar::u_pow(-power * exponent);
}

// Row index per (component, coefficient index) over a set of vectors.
struct Flattener {
    std::map<std::pair<std::size_t, CoeffIndex>, std::size_t> pos;

    void index(const std::vector<CoeffElement>& v) {
        for (std::size_t r = 0; r < v.size(); ++r)
            for (const auto& [idx, c] : v[r].terms()) pos.emplace(std::pair{r, idx}, 0);
    }
    void finish() {
        std::size_t i = 0;
        for (auto& [k, p] : pos) p = i++;
    }
    Matrix columns(const std::vector<std::vector<CoeffElement>>& vs) const {
        Matrix m(pos.size(), vs.size());
        for (std::size_t c = 0; c < vs.size(); ++c)
            for (std::size_t r = 0; r < vs[c].size(); ++r)
                for (const auto& [idx, v] : vs[c][r].terms()) m(pos.at({r, idx}), c) = v;
        return m;
    }
};

Matrix flatten_columns(const std::vector<std::vector<CoeffElement>>& vs, const std::vector<CoeffElement>* extra = nullptr) {
    Flattener fl;
    for (const auto& v : vs) fl.index(v);
    if (extra) fl.index(*extra);
    fl.finish();
    if (!extra) return fl.columns(vs);
    std::vector<std::vector<CoeffElement>> all = vs;
    all.push_back(*extra);
    return fl.columns(all);
}

}  // namespace

std::vector<Section> sections_basis(const LModule& v, int level) {
    std::vector<Section> out;
    for (int n = 0; n <= level; ++n)
        for (std::size_t r = 0; r < v.dim(); ++r)
            append_blocks(out, v.dim(), r, n,
                          {k_condition(n, v.k_exponents()[r], 1), k_condition(n, v.k_exponents()[r], -1)});
    return out;
}

Bundle::Bundle(LModule v, int level_bound) : v_(std::move(v)), c_(complete(v_)), bound_(level_bound) {
    const std::size_t d = c_.w.dim();
    t_.assign(d, std::vector<CoeffElement>(d));
    st_.assign(d, std::vector<CoeffElement>(d));
    for (std::size_t r = 0; r < c_.highest.size(); ++r) {
        const int n = c_.highest[r];
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                const std::size_t b = c_.offset[r] + static_cast<std::size_t>(i);
                const std::size_t a = c_.offset[r] + static_cast<std::size_t>(j);
                t_[b][a] = CoeffElement::t(n, i, j);
                st_[b][a] = antipode(t_[b][a]);
            }
    }
    const Matrix q = c_.emb * c_.proj;
    CoeffMatrix qt(d, std::vector<CoeffElement>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!q(i, j).is_zero()) qt[i][j] = CoeffElement(q(i, j));
    e_ = matmul(matmul(t_, qt, bound_), st_, bound_);
}

int Bundle::w_level() const {
    int l = 0;
    for (int n : c_.highest) l = std::max(l, n);
    return l;
}

Section Bundle::wp(const WVector& x) const {
    if (x.size() != dim_w()) throw std::invalid_argument("wp: wrong dimension");
    Section out(v_.dim());
    for (std::size_t i = 0; i < v_.dim(); ++i)
        for (std::size_t beta = 0; beta < dim_w(); ++beta) {
            const Scalar& p = c_.proj(i, beta);
            if (p.is_zero()) continue;
            for (std::size_t alpha = 0; alpha < dim_w(); ++alpha)
                if (!st_[beta][alpha].is_zero() && !x[alpha].is_zero())
                    out[i] += multiply(st_[beta][alpha], x[alpha], bound_) * p;
        }
    return out;
}

Section Bundle::wp(std::size_t alpha, const CoeffElement& a) const {
    WVector x(dim_w());
    x.at(alpha) = a;
    return wp(x);
}

WVector Bundle::im(const Section& s) const {
    if (s.size() != v_.dim()) throw std::invalid_argument("im: wrong dimension");
    WVector out(dim_w());
    for (std::size_t beta = 0; beta < dim_w(); ++beta)
        for (std::size_t gamma = 0; gamma < dim_w(); ++gamma) {
            if (t_[beta][gamma].is_zero()) continue;
            for (std::size_t i = 0; i < v_.dim(); ++i)
                if (!c_.emb(gamma, i).is_zero() && !s[i].is_zero())
                    out[beta] += multiply(t_[beta][gamma], s[i], bound_) * c_.emb(gamma, i);
        }
    return out;
}

std::vector<Section> Bundle::generators() const {
    std::vector<Section> out;
    for (std::size_t a = 0; a < dim_w(); ++a) out.push_back(wp(a, CoeffElement::unit()));
    return out;
}

WVector Bundle::apply_idempotent(const WVector& x) const { return apply(e_, x, bound_); }

BundleIdempotent idempotent(const LModule& v, int level, int level_bound) {
    Bundle b(v, level_bound);
    BundleIdempotent out;
    out.level = level;
    out.matched_level = level + b.w_level();
    out.matrix = b.idempotent_matrix();
    out.matrix_idempotent = matmul(out.matrix, out.matrix, level_bound) == out.matrix;

    const InvariantBasis eq = invariants(ThetaChoice{}, level);
    std::vector<WVector> images;
    bool window = true;
    for (std::size_t a = 0; a < b.dim_w(); ++a)
        for (const auto& g : eq.elements) {
            WVector x(b.dim_w());
            x[a] = g;
            WVector ex = b.apply_idempotent(x);
            window = window && b.apply_idempotent(ex) == ex;
            images.push_back(std::move(ex));
        }
    out.window_idempotent = window;
    out.rank = images.empty() ? 0 : rank(flatten_columns(images));
    out.sections_dim = sections_basis(v, out.matched_level).size();
    return out;
}

std::vector<CoeffElement> generation_coefficients(const Bundle& b, const Section& s, int level) {
    const InvariantBasis eq = invariants(ThetaChoice{}, level);
    const auto gens = b.generators();
    std::vector<std::vector<CoeffElement>> cols;
    for (const auto& z : gens)
        for (const auto& g : eq.elements) cols.push_back(right_multiply(z, g, b.level_bound()));
    Matrix m = flatten_columns(cols, &s);
    Matrix lhs(m.rows(), cols.size());
    Vector rhs(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) lhs(r, c) = m(r, c);
        rhs[r] = m(r, cols.size());
    }
    const Vector x = solve(lhs, rhs);
    std::vector<CoeffElement> out(gens.size());
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t k = 0; k < eq.elements.size(); ++k)
            out[a] += eq.elements[k] * x[a * eq.elements.size() + k];
    return out;
}

std::vector<Section> holomorphic_sections(const LModule& v, int level) {
    if (v.dim() != 1) throw std::invalid_argument("holomorphic sections need a one-dimensional fiber");
    std::vector<Section> out;
    const int exponent = v.k_exponents()[0];
    for (int n = 0; n <= level; ++n)
        append_blocks(out, 1, 0, n, {k_condition(n, exponent, 1), k_condition(n, exponent, -1), irrep(n).e()});
    return out;
}

DotModule dot_action(const std::vector<Section>& basis) {
    const std::size_t d = basis.size();
    DotModule out{Matrix(d, d), Matrix(d, d), Matrix(d, d)};
    if (d == 0) return out;
    Flattener fl;
    for (const auto& s : basis) fl.index(s);
    fl.finish();
    const Matrix b = fl.columns(basis);
    auto act = [&](const UEAElement& x, Matrix& m) {
        for (std::size_t c = 0; c < d; ++c) {
            Section img;
            for (const auto& comp : basis[c]) img.push_back(dot(x, comp));
            Vector rhs(b.rows());
            for (std::size_t r = 0; r < img.size(); ++r)
                for (const auto& [idx, v] : img[r].terms()) rhs[fl.pos.at({r, idx})] = v;
            const Vector col = solve(b, rhs);
            for (std::size_t r = 0; r < d; ++r) m(r, c) = col[r];
        }
    };
    act(UEAElement::e(), out.e);
    act(UEAElement::f(), out.f);
    act(UEAElement::k(), out.k);
    return out;
}

bool is_irreducible(const DotModule& m) {
    const std::size_t d = m.e.rows();
    if (d == 0) return false;
    const auto top = kernel(m.e);
    if (top.size() != 1) return false;
    std::vector<Vector> string{top[0]};
    for (std::size_t j = 1; j < d; ++j) string.push_back(m.f * string.back());
    if (rank(Matrix::from_columns(string, d)) != d) return false;
    // Commutant: A g = g A for g in {e, f, k}, unknowns A(r, c) at index r * d + c.
    std::vector<Vector> rows;
    for (const Matrix* g : {&m.e, &m.f, &m.k})
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                Vector row(d * d);
                for (std::size_t k = 0; k < d; ++k) {
                    row[r * d + k] += (*g)(k, c);
                    row[k * d + c] -= (*g)(r, k);
                }
                rows.push_back(std::move(row));
            }
    return kernel(Matrix::from_rows(rows, d * d)).size() == 1;
}

}  // namespace qb
