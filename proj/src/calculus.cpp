#include "qbundle/calculus.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qb {

namespace {

// Coordinates of y in the span of xs, comparing PBW coefficients.
Vector uea_coordinates(const std::vector<UEAElement>& xs, const UEAElement& y) {
    std::map<Pbw, std::size_t> pos;
    for (const auto& x : xs)
        for (const auto& [m, c] : x.terms()) pos.emplace(m, 0);
    for (const auto& [m, c] : y.terms()) pos.emplace(m, 0);
    std::size_t i = 0;
    for (auto& [m, p] : pos) p = i++;
    Matrix a(pos.size(), xs.size());
    Vector b(pos.size());
    for (std::size_t c = 0; c < xs.size(); ++c)
        for (const auto& [m, v] : xs[c].terms()) a(pos[m], c) = v;
    for (const auto& [m, v] : y.terms()) b[pos[m]] = v;
    return solve(a, b);
}

std::size_t uea_rank(const std::vector<UEAElement>& xs) {
    std::map<Pbw, std::size_t> pos;
    for (const auto& x : xs)
        for (const auto& [m, c] : x.terms()) pos.emplace(m, pos.size());
    if (pos.empty()) return 0;
    Matrix a(pos.size(), xs.size());
    for (std::size_t c = 0; c < xs.size(); ++c)
        for (const auto& [m, v] : xs[c].terms()) a(pos.at(m), c) = v;
    return rank(a);
}

std::vector<int> decode_word(std::size_t index, int n, std::size_t K) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int p = n - 1; p >= 0; --p) {
        w[static_cast<std::size_t>(p)] = static_cast<int>(index % K);
        index /= K;
    }
    return w;
}

// Flattened coordinates of forms of a common degree, one row per (slot, coefficient index).
Matrix flatten(const std::vector<FormElement>& forms, std::size_t extra = 0,
               const std::vector<FormElement>* more = nullptr) {
    std::map<std::pair<std::size_t, CoeffIndex>, std::size_t> rows;
    auto scan = [&](const FormElement& f) {
        for (std::size_t s = 0; s < f.coords.size(); ++s)
            for (const auto& [t, c] : f.coords[s].terms()) rows.emplace(std::make_pair(s, t), rows.size());
    };
    for (const auto& f : forms) scan(f);
    if (more)
        for (const auto& f : *more) scan(f);
    Matrix m(rows.size(), forms.size() + extra);
    auto fill = [&](const FormElement& f, std::size_t col) {
        for (std::size_t s = 0; s < f.coords.size(); ++s)
            for (const auto& [t, c] : f.coords[s].terms()) m(rows.at({s, t}), col) = c;
    };
    for (std::size_t i = 0; i < forms.size(); ++i) fill(forms[i], i);
    if (more)
        for (std::size_t i = 0; i < more->size(); ++i) fill((*more)[i], forms.size() + i);
    return m;
}

std::vector<FormElement> independent_subset(const std::vector<FormElement>& forms) {
    std::vector<FormElement> nonzero;
    for (const auto& f : forms)
        if (!f.is_zero()) nonzero.push_back(f);
    if (nonzero.empty()) return {};
    const Echelon e = rref(flatten(nonzero));
    std::vector<FormElement> out;
    for (std::size_t p : e.pivots) out.push_back(nonzero[p]);
    return out;
}

}  // namespace

AxiomReport check_axioms(const CalculusData& c) {
    AxiomReport r;
    auto fail = [&](bool& flag, const std::string& what) {
        if (flag && r.failure.empty()) r.failure = what;
        flag = false;
    };
    for (std::size_t a = 0; a < c.K; ++a) {
        if (!counit(c.X[a]).is_zero()) fail(r.counit_x, "eps(X_" + std::to_string(a) + ") != 0");
        TensorUEA rhs = TensorUEA::simple(UEAElement::one(), c.X[a]);
        for (std::size_t b = 0; b < c.K; ++b) rhs += TensorUEA::simple(c.X[b], c.F[b][a]);
        if (!(coproduct(c.X[a]) == rhs)) fail(r.coproduct_x, "Delta(X_" + std::to_string(a) + ")");
        for (std::size_t b = 0; b < c.K; ++b) {
            if (counit(c.F[a][b]) != Scalar(a == b ? 1 : 0))
                fail(r.counit_f, "eps(F_" + std::to_string(a) + "," + std::to_string(b) + ")");
            TensorUEA rf;
            for (std::size_t m = 0; m < c.K; ++m) rf += TensorUEA::simple(c.F[a][m], c.F[m][b]);
            if (!(coproduct(c.F[a][b]) == rf))
                fail(r.coproduct_f, "Delta(F_" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    return r;
}

CalculusData from_rep(const Module& wc) {
    CalculusData c;
    c.source = wc;
    const std::size_t d = wc.dim();
    c.K = d * d;
    const UEAMatrix l21 = r21_matrix_second_leg(wc);
    const UEAMatrix l12 = r_matrix_second_leg(wc);
    const UEAMatrix m = multiply(l21, l12);
    c.M.resize(c.K);
    c.X.resize(c.K);
    c.F.assign(c.K, std::vector<UEAElement>(c.K));
    c.theta.assign(c.K, Scalar(0));
    for (std::size_t r = 0; r < d; ++r) {
        c.theta[r * d + r] = Scalar(1);
        for (std::size_t s = 0; s < d; ++s) {
            c.M[r * d + s] = m[r][s];
            c.X[r * d + s] = m[r][s] - UEAElement(Scalar(r == s ? 1 : 0));
        }
    }
    for (std::size_t t = 0; t < d; ++t)
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s < d; ++s) c.F[t * d + p][r * d + s] = l21[r][t] * l12[p][s];

    const AxiomReport report = check_axioms(c);
    if (!report.all()) throw AxiomViolation(report.failure);

    c.nondegenerate = uea_rank(c.X) == c.K;
    if (!c.nondegenerate) return c;

    std::vector<Matrix> gens;
    for (const UEAElement& g : {UEAElement::e(), UEAElement::f(), UEAElement::k()}) {
        Matrix p(c.K, c.K);
        const auto legs = coproduct(g).pairs();
        for (std::size_t dd = 0; dd < c.K; ++dd) {
            UEAElement ad;
            for (const auto& [a, b] : legs) ad += antipode(a) * c.X[dd] * b;
            const Vector co = uea_coordinates(c.X, ad);
            for (std::size_t b = 0; b < c.K; ++b) p(dd, b) = co[b];
        }
        gens.push_back(std::move(p));
    }
    c.gamma = Module::from_generators(gens[0], gens[1], gens[2]);
    return c;
}

Matrix braiding_matrix(const CalculusData& c) {
    const std::size_t K = c.K;
    Matrix s(K * K, K * K);
    for (std::size_t a = 0; a < K; ++a)
        for (std::size_t l = 0; l < K; ++l) {
            const Matrix pf = c.gamma.act(c.F[a][l]);
            for (std::size_t e = 0; e < K; ++e)
                for (std::size_t b = 0; b < K; ++b) s(e * K + l, a * K + b) = pf(e, b);
        }
    return s;
}

Matrix r_braiding_matrix(const CalculusData& c) {
    return flip(c.K, c.K) * universal_R(c.gamma, c.gamma);
}

BraidingSplit split_braiding(const Matrix& sigma) {
    const std::size_t n = sigma.rows();
    BraidingSplit out;
    out.sigma = sigma;
    std::vector<Vector> basis;
    std::vector<Scalar> values;
    std::vector<bool> positive;
    const Matrix id = Matrix::identity(n);
    for (int sign : {1, -1})
        for (int k = -24; k <= 24 && basis.size() < n; ++k) {
            const Scalar lambda = Scalar::u_pow(k) * Scalar(sign);
            auto ker = kernel(sigma - id * lambda);
            if (ker.empty()) continue;
            for (const auto& v : ker) {
                basis.push_back(v);
                values.push_back(lambda);
                positive.push_back(sign > 0);
                if (sign > 0) out.kernel_minus.push_back(v);
            }
            out.eigenspaces.push_back({lambda, std::move(ker)});
        }
    if (basis.size() != n) {
        std::ostringstream os;
        os << "braiding not split by eigenvalues +-u^k: found " << basis.size() << " of " << n;
        throw SplitError(os.str());
    }
    const Matrix b = Matrix::from_columns(basis, n);
    const Matrix binv = inverse(b);
    Matrix dp(n, n), dm(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (positive[i])
            dp(i, i) = values[i];
        else
            dm(i, i) = -values[i];
    }
    out.plus = b * dp * binv;
    out.minus = b * dm * binv;
    return out;
}

BraidingSplit braiding(const CalculusData& c) {
    if (!c.nondegenerate) throw DomainError("degenerate calculus has no coaction module");
    return split_braiding(braiding_matrix(c));
}

// ---------------------------------------------------------------------------

ExteriorAlgebra::ExteriorAlgebra(std::size_t K, std::vector<Vector> relations)
    : K_(K), relations_(std::move(relations)) {}

const ExteriorAlgebra::Degree& ExteriorAlgebra::degree(int n) const {
    std::lock_guard lock(mu_);
    const std::size_t need = static_cast<std::size_t>(n) + 1;
    while (degrees_.size() < need) {
        const int m = static_cast<int>(degrees_.size());
        auto deg = std::make_unique<Degree>();
        if (m == 0) {
            deg->words = {{}};
            deg->normal = Matrix::identity(1);
        } else if (m == 1) {
            for (std::size_t a = 0; a < K_; ++a) deg->words.push_back({static_cast<int>(a)});
            deg->normal = Matrix::identity(K_);
        } else {
            const Degree& prev = *degrees_[static_cast<std::size_t>(m - 1)];
            const Degree& prev2 = *degrees_[static_cast<std::size_t>(m - 2)];
            const std::size_t qp = prev.words.size();
            const std::size_t cols = qp * K_;
            std::vector<Vector> rows;
            for (std::size_t t = 0; t < prev2.words.size(); ++t)
                for (const Vector& kappa : relations_) {
                    Vector row(cols);
                    bool any = false;
                    for (std::size_t a = 0; a < K_; ++a)
                        for (std::size_t s = 0; s < qp; ++s) {
                            const Scalar& nv = prev.normal(s, t * K_ + a);
                            if (nv.is_zero()) continue;
                            for (std::size_t b = 0; b < K_; ++b) {
                                const Scalar& kv = kappa[a * K_ + b];
                                if (kv.is_zero()) continue;
                                row[s * K_ + b] += nv * kv;
                                any = true;
                            }
                        }
                    if (any) rows.push_back(std::move(row));
                }
            std::vector<std::size_t> pivots;
            Matrix reduced;
            if (!rows.empty() && cols > 0) {
                Echelon e = rref(Matrix::from_rows(rows, cols));
                pivots = std::move(e.pivots);
                reduced = std::move(e.reduced);
            }
            std::vector<bool> is_pivot(cols, false);
            for (std::size_t p : pivots) is_pivot[p] = true;
            std::vector<std::size_t> free;
            for (std::size_t col = 0; col < cols; ++col)
                if (!is_pivot[col]) free.push_back(col);
            deg->normal = Matrix(free.size(), cols);
            for (std::size_t fi = 0; fi < free.size(); ++fi) {
                const std::size_t col = free[fi];
                deg->normal(fi, col) = Scalar(1);
                for (std::size_t r = 0; r < pivots.size(); ++r) {
                    const Scalar& v = reduced(r, col);
                    if (!v.is_zero()) deg->normal(fi, pivots[r]) = -v;
                }
                std::vector<int> w = prev.words[col / K_];
                w.push_back(static_cast<int>(col % K_));
                deg->words.push_back(std::move(w));
            }
        }
        degrees_.push_back(std::move(deg));
    }
    return *degrees_[static_cast<std::size_t>(n)];
}

std::size_t ExteriorAlgebra::dim(int n) const { return degree(n).words.size(); }

const std::vector<std::vector<int>>& ExteriorAlgebra::words(int n) const { return degree(n).words; }

Vector ExteriorAlgebra::reduce_word(const std::vector<int>& word) const {
    {
        std::lock_guard lock(mu_);
        auto it = word_cache_.find(word);
        if (it != word_cache_.end()) return it->second;
    }
    Vector v{Scalar(1)};
    for (std::size_t p = 0; p < word.size(); ++p) {
        const Degree& deg = degree(static_cast<int>(p) + 1);
        const std::size_t a = static_cast<std::size_t>(word[p]);
        Vector next(deg.words.size());
        for (std::size_t s = 0; s < v.size(); ++s) {
            if (v[s].is_zero()) continue;
            for (std::size_t r = 0; r < next.size(); ++r) {
                const Scalar& nv = deg.normal(r, s * K_ + a);
                if (!nv.is_zero()) next[r] += v[s] * nv;
            }
        }
        v = std::move(next);
    }
    std::lock_guard lock(mu_);
    word_cache_.emplace(word, v);
    return v;
}

Vector ExteriorAlgebra::reduce_tensor(int n, const Vector& coords) const {
    Vector out(dim(n));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        const Vector r = reduce_word(decode_word(i, n, K_));
        for (std::size_t s = 0; s < r.size(); ++s)
            if (!r[s].is_zero()) out[s] += coords[i] * r[s];
    }
    return out;
}

// ---------------------------------------------------------------------------

bool FormElement::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const CoeffElement& c) { return c.is_zero(); });
}

int FormElement::level() const {
    int l = -1;
    for (const auto& c : coords) l = std::max(l, c.level());
    return l;
}

Calculus::Calculus(CalculusData data, int level_bound) : data_(std::move(data)), bound_(level_bound) {
    if (!data_.nondegenerate) throw DomainError("degenerate calculus: tangent functionals are dependent");
    split_ = braiding(data_);
    algebra_ = std::make_unique<ExteriorAlgebra>(data_.K, split_.kernel_minus);
}

FormElement Calculus::zero(int n) const {
    return FormElement{n, true, std::vector<CoeffElement>(algebra_->dim(n))};
}

FormElement Calculus::function(const CoeffElement& a) const { return FormElement{0, true, {a}}; }

FormElement Calculus::add(const FormElement& a, const FormElement& b) const {
    if (a.degree != b.degree || a.reduced != b.reduced || a.coords.size() != b.coords.size())
        throw std::invalid_argument("adding forms of different shapes");
    FormElement out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

FormElement Calculus::scale(const FormElement& a, const Scalar& s) const {
    FormElement out = a;
    for (auto& c : out.coords) c *= s;
    return out;
}

FormElement Calculus::reduce_mod_J(const FormElement& w) const {
    if (w.reduced) return w;
    FormElement out = zero(w.degree);
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
        if (w.coords[i].is_zero()) continue;
        const Vector r = algebra_->reduce_word(decode_word(i, w.degree, data_.K));
        for (std::size_t s = 0; s < r.size(); ++s)
            if (!r[s].is_zero()) out.coords[s] += w.coords[i] * r[s];
    }
    return out;
}

FormElement Calculus::d0(const CoeffElement& a) const {
    FormElement out = zero(1);
    for (std::size_t c = 0; c < data_.K; ++c) out.coords[c] = qb::circle(data_.X[c], a);
    return out;
}

FormElement Calculus::left_mult(const CoeffElement& a, const FormElement& w) const {
    FormElement out = w;
    for (auto& c : out.coords)
        if (!c.is_zero()) c = multiply(a, c, bound_);
    return out;
}

CoeffElement Calculus::circle_f(std::size_t a, std::size_t c, const CoeffElement& g) const {
    CoeffElement out;
    for (const auto& [t, v] : g.terms()) {
        const Matrix* m;
        {
            std::lock_guard lock(mu_);
            auto key = std::make_tuple(t.n, a, c);
            auto it = f_blocks_.find(key);
            if (it == f_blocks_.end()) it = f_blocks_.emplace(key, irrep(t.n).act(data_.F[a][c])).first;
            m = &it->second;
        }
        for (int j = 0; j <= t.n; ++j) {
            const Scalar& x = (*m)(static_cast<std::size_t>(j), static_cast<std::size_t>(t.j));
            if (!x.is_zero()) out.add_term({t.n, t.i, j}, v * x);
        }
    }
    return out;
}

FormElement Calculus::right_mult(const FormElement& w, const CoeffElement& b) const {
    if (!w.reduced) return right_mult(reduce_mod_J(w), b);
    FormElement out = zero(w.degree);
    const auto& words = algebra_->words(w.degree);
    for (std::size_t S = 0; S < w.coords.size(); ++S) {
        if (w.coords[S].is_zero()) continue;
        const std::vector<int>& word = words[S];
        std::map<std::vector<int>, CoeffElement> state{{{}, b}};
        for (std::size_t p = word.size(); p-- > 0;) {
            std::map<std::vector<int>, CoeffElement> next;
            for (const auto& [suffix, g] : state)
                for (std::size_t c = 0; c < data_.K; ++c) {
                    CoeffElement h = circle_f(static_cast<std::size_t>(word[p]), c, g);
                    if (h.is_zero()) continue;
                    std::vector<int> key;
                    key.reserve(suffix.size() + 1);
                    key.push_back(static_cast<int>(c));
                    key.insert(key.end(), suffix.begin(), suffix.end());
                    next[key] += h;
                }
            state = std::move(next);
        }
        for (const auto& [cw, g] : state) {
            if (g.is_zero()) continue;
            const CoeffElement prod = multiply(w.coords[S], g, bound_);
            const Vector r = algebra_->reduce_word(cw);
            for (std::size_t s = 0; s < r.size(); ++s)
                if (!r[s].is_zero()) out.coords[s] += prod * r[s];
        }
    }
    return out;
}

FormElement Calculus::wedge(const FormElement& a, const FormElement& b) const {
    const FormElement ra = reduce_mod_J(a), rb = reduce_mod_J(b);
    const int n = ra.degree + rb.degree;
    FormElement out = zero(n);
    const auto& wa = algebra_->words(ra.degree);
    const auto& wb = algebra_->words(rb.degree);
    for (std::size_t T = 0; T < rb.coords.size(); ++T) {
        if (rb.coords[T].is_zero()) continue;
        const FormElement moved = right_mult(ra, rb.coords[T]);
        for (std::size_t C = 0; C < moved.coords.size(); ++C) {
            if (moved.coords[C].is_zero()) continue;
            std::vector<int> word = wa[C];
            word.insert(word.end(), wb[T].begin(), wb[T].end());
            const Vector r = algebra_->reduce_word(word);
            for (std::size_t s = 0; s < r.size(); ++s)
                if (!r[s].is_zero()) out.coords[s] += moved.coords[C] * r[s];
        }
    }
    return out;
}

FormElement Calculus::basis_form(int n, std::size_t index) const {
    FormElement out = zero(n);
    out.coords.at(index) = CoeffElement::unit();
    return out;
}

FormElement Calculus::theta() const {
    FormElement out = zero(1);
    for (std::size_t a = 0; a < data_.K; ++a)
        if (!data_.theta[a].is_zero()) out.coords[a] = CoeffElement(data_.theta[a]);
    return out;
}

FormElement Calculus::d(const FormElement& w) const {
    const FormElement rw = reduce_mod_J(w);
    const FormElement th = theta();
    FormElement left = wedge(th, rw);
    const FormElement right = wedge(rw, th);
    return rw.degree % 2 == 0 ? add(left, scale(right, Scalar(-1))) : add(left, right);
}

FormElement Calculus::dot(const UEAElement& x, const FormElement& w) const {
    FormElement out = w;
    for (auto& c : out.coords)
        if (!c.is_zero()) c = qb::dot(x, c);
    return out;
}

Vector Calculus::act_on_word(const UEAElement& x, const std::vector<int>& word) const {
    // Coefficients over the words of the same length, of gamma^(x)n(x) applied to the word.
    std::function<std::map<std::vector<int>, Scalar>(const UEAElement&, std::size_t)> rec =
        [&](const UEAElement& y, std::size_t pos) {
            std::map<std::vector<int>, Scalar> out;
            if (pos == word.size()) {
                Scalar e = counit(y);
                if (!e.is_zero()) out.emplace(std::vector<int>{}, e);
                return out;
            }
            for (const auto& [y1, y2] : coproduct(y).pairs()) {
                const Matrix m = data_.gamma.act(y1);
                const std::size_t col = static_cast<std::size_t>(word[pos]);
                std::map<std::vector<int>, Scalar> tail;
                bool have_tail = false;
                for (std::size_t e = 0; e < data_.K; ++e) {
                    if (m(e, col).is_zero()) continue;
                    if (!have_tail) {
                        tail = rec(y2, pos + 1);
                        have_tail = true;
                    }
                    for (const auto& [suffix, c] : tail) {
                        std::vector<int> key{static_cast<int>(e)};
                        key.insert(key.end(), suffix.begin(), suffix.end());
                        out[key] += m(e, col) * c;
                    }
                }
            }
            return out;
        };
    Vector res(algebra_->dim(static_cast<int>(word.size())));
    for (const auto& [w, c] : rec(x, 0)) {
        if (c.is_zero()) continue;
        const Vector r = algebra_->reduce_word(w);
        for (std::size_t s = 0; s < r.size(); ++s)
            if (!r[s].is_zero()) res[s] += c * r[s];
    }
    return res;
}

FormElement Calculus::circle(const UEAElement& p, const FormElement& w) const {
    const FormElement rw = reduce_mod_J(w);
    FormElement out = zero(rw.degree);
    const auto& words = algebra_->words(rw.degree);
    for (const auto& [p1, p2] : coproduct(p).pairs())
        for (std::size_t S = 0; S < rw.coords.size(); ++S) {
            if (rw.coords[S].is_zero()) continue;
            const CoeffElement g = qb::circle(p1, rw.coords[S]);
            if (g.is_zero()) continue;
            const Vector v = act_on_word(p2, words[S]);
            for (std::size_t s = 0; s < v.size(); ++s)
                if (!v[s].is_zero()) out.coords[s] += g * v[s];
        }
    return out;
}

// ---------------------------------------------------------------------------

std::size_t form_rank(const std::vector<FormElement>& forms) {
    if (forms.empty()) return 0;
    return rank(flatten(forms));
}

bool span_contains(const std::vector<FormElement>& span, const std::vector<FormElement>& sub) {
    std::vector<FormElement> nz;
    for (const auto& f : sub)
        if (!f.is_zero()) nz.push_back(f);
    if (nz.empty()) return true;
    if (span.empty()) return false;
    const Matrix both = flatten(span, nz.size(), &nz);
    Matrix only(both.rows(), span.size());
    for (std::size_t r = 0; r < both.rows(); ++r)
        for (std::size_t c = 0; c < span.size(); ++c) only(r, c) = both(r, c);
    return rank(only) == rank(both);
}

RestrictedCalculus restrict(const Calculus& c, const ThetaChoice& theta, int window, int max_degree) {
    theta.validate();
    const InvariantBasis basis = invariants(theta, window);
    RestrictedCalculus out;
    out.window = window;
    std::vector<FormElement> diffs;
    for (const auto& b : basis.elements) diffs.push_back(c.d0(b));
    diffs = independent_subset(diffs);

    std::vector<FormElement> products;  // span of db_1 ... db_n
    for (int n = 0; n <= max_degree; ++n) {
        if (n == 0) {
            products = {c.function(CoeffElement::unit())};
        } else {
            std::vector<FormElement> next;
            for (const auto& p : products)
                for (const auto& db : diffs) next.push_back(c.wedge(p, db));
            products = independent_subset(next);
        }
        std::vector<FormElement> span;
        for (const auto& a : basis.elements)
            for (const auto& p : products) span.push_back(c.left_mult(a, p));
        span = independent_subset(span);
        out.dims.push_back(span.size());
        out.spans.push_back(std::move(span));
    }
    for (int n = 0; n < max_degree; ++n) {
        std::vector<FormElement> image;
        for (const auto& w : out.spans[static_cast<std::size_t>(n)]) image.push_back(c.d(w));
        out.closed.push_back(span_contains(out.spans[static_cast<std::size_t>(n) + 1], image));
    }
    return out;
}

FormElement circle_on_restricted(const Calculus& c, const RestrictedCalculus& r, const UEAElement& p,
                                 const FormElement& w) {
    const FormElement rw = c.reduce_mod_J(w);
    const std::size_t n = static_cast<std::size_t>(rw.degree);
    if (n >= r.spans.size() || !span_contains(r.spans[n], {rw}))
        throw DomainError("form outside the restricted calculus");
    return c.circle(p, rw);
}

}  // namespace qb
