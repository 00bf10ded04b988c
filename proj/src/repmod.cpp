#include "qbundle/repmod.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace qb {

namespace {

Scalar cartan_denominator_inv() {
    static const Scalar v = (Scalar::q() - Scalar::q().inverse()).inverse();
    return v;
}

Matrix power(const Matrix& m, int n) {
    Matrix r = Matrix::identity(m.rows());
    for (int i = 0; i < n; ++i) r = r * m;
    return r;
}

}  // namespace

Module Module::from_generators(Matrix e, Matrix f, Matrix k) {
    const std::size_t n = k.rows();
    if (k.cols() != n || e.rows() != n || e.cols() != n || f.rows() != n || f.cols() != n)
        throw std::invalid_argument("generator matrices must be square of equal size");
    if (!k.is_diagonal()) throw std::invalid_argument("k must act diagonally (weight basis)");
    Module m;
    m.weights_.resize(n);
    m.kinv_ = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Scalar& d = k(i, i);
        if (d.is_zero()) throw std::invalid_argument("k is not invertible");
        const int s = d.shift();
        if (s % 2 != 0 || d != Scalar::u_pow(s)) throw std::invalid_argument("k eigenvalue is not of the form u^(2m)");
        m.weights_[i] = s / 2;
        m.kinv_(i, i) = Scalar::u_pow(-s);
    }
    m.e_ = std::move(e);
    m.f_ = std::move(f);
    m.k_ = std::move(k);
    if (!m.satisfies_relations()) throw std::invalid_argument("generator matrices violate the defining relations");
    return m;
}

Matrix Module::k_power(int b) const {
    Matrix r(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) r(i, i) = Scalar::u_pow(2 * weights_[i] * b);
    return r;
}

Matrix Module::act(const Pbw& m) const {
    return power(f_, m.f) * k_power(m.k) * power(e_, m.e);
}

Matrix Module::act(const UEAElement& x) const {
    Matrix r(dim(), dim());
    std::map<int, Matrix> epow, fpow;
    auto cached = [](std::map<int, Matrix>& cache, const Matrix& g, int n) -> const Matrix& {
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, power(g, n)).first;
        return it->second;
    };
    for (const auto& [m, c] : x.terms()) {
        Matrix term = cached(fpow, f_, m.f) * k_power(m.k) * cached(epow, e_, m.e);
        r += term * c;
    }
    return r;
}

bool Module::satisfies_relations() const {
    const Scalar q = Scalar::q();
    if (!(k_ * kinv_ == Matrix::identity(dim()))) return false;
    if (!(k_ * e_ == e_ * k_ * q)) return false;
    if (!(k_ * f_ == f_ * k_ * q.inverse())) return false;
    return e_ * f_ - f_ * e_ == (k_power(2) - k_power(-2)) * cartan_denominator_inv();
}

const Module& irrep(int n) {
    if (n < 0) throw std::invalid_argument("irrep: negative highest weight");
    static std::mutex mu;
    static std::map<int, Module> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    Matrix e(d, d), f(d, d), k(d, d);
    for (int j = 0; j <= n; ++j) {
        k(j, j) = Scalar::u_pow(2 * (n - 2 * j));
        if (j > 0) e(j - 1, j) = qint(j);
        if (j < n) f(j + 1, j) = qint(n - j);
    }
    return cache.emplace(n, Module::from_generators(std::move(e), std::move(f), std::move(k))).first->second;
}

Module tensor(const Module& a, const Module& b) {
    Matrix e = kron(a.e(), b.k()) + kron(a.kinv(), b.e());
    Matrix f = kron(a.f(), b.k()) + kron(a.kinv(), b.f());
    return Module::from_generators(std::move(e), std::move(f), kron(a.k(), b.k()));
}

Module direct_sum(const Module& a, const Module& b) {
    return Module::from_generators(direct_sum(a.e(), b.e()), direct_sum(a.f(), b.f()), direct_sum(a.k(), b.k()));
}

bool ModuleMap::intertwines() const {
    return matrix * source.e() == target.e() * matrix && matrix * source.f() == target.f() * matrix &&
           matrix * source.k() == target.k() * matrix;
}

std::vector<Component> decompose(const Module& w) {
    const std::size_t n = w.dim();
    std::map<int, std::vector<std::size_t>, std::greater<>> spaces;
    for (std::size_t i = 0; i < n; ++i) spaces[w.weights()[i]].push_back(i);

    struct Chain {
        int highest;
        std::vector<Vector> vectors;
    };
    std::vector<Chain> chains;
    for (const auto& [m, idx] : spaces) {
        if (m < 0) break;
        Matrix restricted(n, idx.size());
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) restricted(r, c) = w.e()(r, idx[c]);
        for (const auto& coeffs : kernel(restricted)) {
            Chain ch{m, {}};
            Vector v(n);
            for (std::size_t c = 0; c < idx.size(); ++c) v[idx[c]] = coeffs[c];
            ch.vectors.push_back(v);
            for (int j = 0; j < m; ++j) {
                v = w.f() * v;
                const Scalar scale = qint(m - j).inverse();
                for (auto& x : v) x *= scale;
                if (is_zero(v)) throw DecompositionError("f-string terminated early");
                ch.vectors.push_back(v);
            }
            if (!is_zero(w.f() * v)) throw DecompositionError("f does not annihilate the lowest vector");
            chains.push_back(std::move(ch));
        }
    }

    std::size_t total = 0;
    for (const auto& ch : chains) total += ch.vectors.size();
    if (total != n) throw DecompositionError("highest-weight vectors do not span the module");

    // Invert the change of basis one weight space at a time.
    std::vector<Matrix> proj;
    for (const auto& ch : chains) proj.emplace_back(ch.vectors.size(), n);
    for (const auto& [mu, idx] : spaces) {
        std::vector<std::pair<std::size_t, std::size_t>> cols;
        for (std::size_t c = 0; c < chains.size(); ++c) {
            const int j2 = chains[c].highest - mu;
            if (j2 >= 0 && j2 % 2 == 0 && j2 / 2 <= chains[c].highest) cols.emplace_back(c, j2 / 2);
        }
        if (cols.size() != idx.size()) throw DecompositionError("weight multiplicities do not match");
        Matrix block(idx.size(), idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                block(r, c) = chains[cols[c].first].vectors[cols[c].second][idx[r]];
        Matrix inv;
        try {
            inv = inverse(block);
        } catch (const NoSolution&) {
            throw DecompositionError("change of basis is singular");
        }
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < idx.size(); ++r) proj[cols[c].first](cols[c].second, idx[r]) = inv(c, r);
    }

    std::vector<Component> out;
    for (std::size_t c = 0; c < chains.size(); ++c) {
        const Module& v = irrep(chains[c].highest);
        Component comp;
        comp.highest = chains[c].highest;
        comp.embedding = {v, w, Matrix::from_columns(chains[c].vectors, n)};
        comp.projection = {w, v, std::move(proj[c])};
        out.push_back(std::move(comp));
    }
    return out;
}

Scalar r_coefficient(int n) {
    const Scalar q = Scalar::q();
    return (q - q.inverse()).pow(n) * q.pow(n * (n - 1) / 2) / qfactorial(n);
}

Matrix universal_R(const Module& w1, const Module& w2) {
    const std::size_t d1 = w1.dim(), d2 = w2.dim();
    const Matrix big_e = w1.e() * w1.k();
    const Matrix big_f = w2.kinv() * w2.f();
    Matrix sum(d1 * d2, d1 * d2);
    Matrix pe = Matrix::identity(d1), pf = Matrix::identity(d2);
    for (std::size_t n = 0; n < std::min(d1, d2); ++n) {
        if (n > 0) {
            pe = pe * big_e;
            pf = pf * big_f;
        }
        sum += kron(pe, pf) * r_coefficient(static_cast<int>(n));
    }
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j) {
            const Scalar c = Scalar::u_pow(2 * w1.weights()[i] * w2.weights()[j]);
            const std::size_t r = i * d2 + j;
            for (std::size_t col = 0; col < sum.cols(); ++col)
                if (!sum(r, col).is_zero()) sum(r, col) *= c;
        }
    return sum;
}

Matrix flip(std::size_t dim1, std::size_t dim2) {
    Matrix p(dim1 * dim2, dim1 * dim2);
    for (std::size_t i = 0; i < dim1; ++i)
        for (std::size_t j = 0; j < dim2; ++j) p(j * dim1 + i, i * dim2 + j) = 1;
    return p;
}

namespace {

// sum_n c_n k^{m_r} x^n [Y^n]_{rs} with x in U and Y acting on w.
UEAMatrix one_leg(const Module& w, const UEAElement& x, const Matrix& y) {
    const std::size_t d = w.dim();
    UEAMatrix out(d, std::vector<UEAElement>(d));
    UEAElement px = UEAElement::one();
    Matrix py = Matrix::identity(d);
    for (std::size_t n = 0; n < d; ++n) {
        if (n > 0) {
            px = px * x;
            py = py * y;
        }
        const Scalar c = r_coefficient(static_cast<int>(n));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t s = 0; s < d; ++s)
                if (!py(r, s).is_zero()) out[r][s] += UEAElement::k(w.weights()[r]) * px * (c * py(r, s));
    }
    return out;
}

}  // namespace

UEAMatrix r_matrix_second_leg(const Module& w) {
    return one_leg(w, UEAElement::e() * UEAElement::k(), w.kinv() * w.f());
}

UEAMatrix r21_matrix_second_leg(const Module& w) {
    return one_leg(w, UEAElement::k(-1) * UEAElement::f(), w.e() * w.k());
}

UEAMatrix multiply(const UEAMatrix& a, const UEAMatrix& b) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
    UEAMatrix out(n, std::vector<UEAElement>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

}  // namespace qb
