#include "qbundle/coeff.hpp"

#include <json.hpp>

#include <mutex>
#include <sstream>
#include <tuple>

namespace qb {

LevelOverflow::LevelOverflow(int required_level, int level_bound)
    : std::runtime_error("level " + std::to_string(required_level) + " exceeds bound " + std::to_string(level_bound)),
      required(required_level),
      bound(level_bound) {}

namespace {

const Scalar& cached_qint(int n) {
    static const std::vector<Scalar> table = [] {
        std::vector<Scalar> t;
        for (int i = 0; i <= 64; ++i) t.push_back(qint(i));
        return t;
    }();
    if (n < 0 || n > 64) throw std::out_of_range("q-integer table");
    return table[static_cast<std::size_t>(n)];
}

void check_index(const CoeffIndex& idx) {
    if (idx.n < 0 || idx.i < 0 || idx.j < 0 || idx.i > idx.n || idx.j > idx.n)
        throw std::invalid_argument("invalid matrix coefficient index");
}

}  // namespace

CoeffElement::CoeffElement(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(CoeffIndex{0, 0, 0}, c);
}

CoeffElement CoeffElement::t(int n, int i, int j, const Scalar& c) {
    CoeffElement r;
    r.add_term({n, i, j}, c);
    return r;
}

Scalar CoeffElement::coeff(const CoeffIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Scalar() : it->second;
}

int CoeffElement::level() const { return terms_.empty() ? -1 : terms_.rbegin()->first.n; }

CoeffElement CoeffElement::block(int n) const {
    CoeffElement r;
    for (auto it = terms_.lower_bound({n, 0, 0}); it != terms_.end() && it->first.n == n; ++it) r.terms_.insert(*it);
    return r;
}

void CoeffElement::add_term(const CoeffIndex& idx, const Scalar& c) {
    check_index(idx);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CoeffElement CoeffElement::operator-() const {
    CoeffElement r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

CoeffElement& CoeffElement::operator+=(const CoeffElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

CoeffElement& CoeffElement::operator-=(const CoeffElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

CoeffElement& CoeffElement::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

CoeffElement operator*(const CoeffElement& a, const CoeffElement& b) { return multiply(a, b); }

std::string CoeffElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "] t" << k.n << "(" << k.i << "," << k.j << ")";
    }
    return os.str();
}

Scalar pairing(const CoeffIndex& t, const Pbw& m) {
    const int jp = t.j - m.e;  // index after e^c
    if (jp < 0 || jp + m.f > t.n || t.i != jp + m.f) return Scalar();
    Scalar r = Scalar::u_pow(2 * (t.n - 2 * jp) * m.k);
    for (int s = 0; s < m.e; ++s) r *= cached_qint(t.j - s);
    for (int s = 0; s < m.f; ++s) r *= cached_qint(t.n - jp - s);
    return r;
}

Scalar eval(const CoeffElement& f, const UEAElement& x) {
    Scalar r;
    for (const auto& [t, c] : f.terms())
        for (const auto& [m, d] : x.terms()) {
            Scalar p = pairing(t, m);
            if (!p.is_zero()) r += c * d * p;
        }
    return r;
}

namespace {

// Cached product of two basis coefficients, re-expanded through the
// decomposition of irrep(n) (x) irrep(m).
const CoeffElement& basis_product(const CoeffIndex& a, const CoeffIndex& b) {
    using Key = std::pair<CoeffIndex, CoeffIndex>;
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Component>> decompositions;
    static std::map<Key, CoeffElement> products;

    std::lock_guard<std::mutex> lock(mu);
    auto found = products.find({a, b});
    if (found != products.end()) return found->second;

    auto dit = decompositions.find({a.n, b.n});
    if (dit == decompositions.end())
        dit = decompositions.emplace(std::pair{a.n, b.n}, decompose(tensor(irrep(a.n), irrep(b.n)))).first;

    const std::size_t d2 = static_cast<std::size_t>(b.n) + 1;
    const std::size_t row = static_cast<std::size_t>(a.i) * d2 + static_cast<std::size_t>(b.i);
    const std::size_t col = static_cast<std::size_t>(a.j) * d2 + static_cast<std::size_t>(b.j);
    CoeffElement out;
    for (const auto& comp : dit->second) {
        const Matrix& emb = comp.embedding.matrix;
        const Matrix& proj = comp.projection.matrix;
        for (std::size_t p = 0; p < emb.cols(); ++p) {
            if (emb(row, p).is_zero()) continue;
            for (std::size_t q = 0; q < proj.rows(); ++q) {
                if (proj(q, col).is_zero()) continue;
                out.add_term({comp.highest, static_cast<int>(p), static_cast<int>(q)}, emb(row, p) * proj(q, col));
            }
        }
    }
    return products.emplace(Key{a, b}, std::move(out)).first->second;
}

}  // namespace

CoeffElement multiply(const CoeffElement& f, const CoeffElement& g, int level_bound) {
    CoeffElement out;
    for (const auto& [a, c] : f.terms())
        for (const auto& [b, d] : g.terms()) {
            const Scalar cd = c * d;
            if (a.n == 0) {
                out.add_term(b, cd);
            } else if (b.n == 0) {
                out.add_term(a, cd);
            } else {
                for (const auto& [idx, e] : basis_product(a, b).terms()) out.add_term(idx, cd * e);
            }
        }
    if (out.level() > level_bound) throw LevelOverflow(out.level(), level_bound);
    return out;
}

CoeffTensor coproduct(const CoeffElement& f) {
    CoeffTensor out;
    for (const auto& [t, c] : f.terms())
        for (int k = 0; k <= t.n; ++k) out.emplace_back(CoeffElement::t(t.n, t.i, k, c), CoeffElement::t(t.n, k, t.j));
    return out;
}

Scalar counit(const CoeffElement& f) {
    Scalar r;
    for (const auto& [t, c] : f.terms())
        if (t.i == t.j) r += c;
    return r;
}

namespace {

// Matrix on the level-n block of the functional transform f -> f o phi,
// where phi is a linear map on U_q given on monomials.
Matrix transform_block(int n, UEAElement (*phi)(const UEAElement&)) {
    const PairingTable& table = PairingTable::get(n);
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    std::vector<UEAElement> images;
    images.reserve(table.monomials().size());
    for (const auto& m : table.monomials()) images.push_back(phi(UEAElement::monomial(m)));
    Matrix out(d * d, d * d);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const CoeffElement t = CoeffElement::t(n, i, j);
            std::vector<Scalar> values;
            values.reserve(images.size());
            for (const auto& x : images) values.push_back(eval(t, x));
            const CoeffElement r = table.solve(values);
            for (const auto& [idx, c] : r.terms()) {
                if (idx.n != n) throw std::logic_error("transform left the Peter-Weyl block");
                out(static_cast<std::size_t>(idx.i) * d + static_cast<std::size_t>(idx.j),
                    static_cast<std::size_t>(i) * d + static_cast<std::size_t>(j)) = c;
            }
        }
    return out;
}

UEAElement star_after_antipode(const UEAElement& x) { return star(antipode(x)); }

const Matrix& cached_block(int n, bool is_star) {
    static std::mutex mu;
    static std::map<std::pair<int, bool>, Matrix> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, is_star});
        if (it != cache.end()) return it->second;
    }
    Matrix m = transform_block(n, is_star ? star_after_antipode : static_cast<UEAElement (*)(const UEAElement&)>(antipode));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::pair{n, is_star}, std::move(m)).first->second;
}

CoeffElement apply_blocks(const CoeffElement& f, bool is_star) {
    CoeffElement out;
    for (const auto& [t, c] : f.terms()) {
        const Matrix& m = cached_block(t.n, is_star);
        const std::size_t d = static_cast<std::size_t>(t.n) + 1;
        const std::size_t col = static_cast<std::size_t>(t.i) * d + static_cast<std::size_t>(t.j);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!m(r, col).is_zero())
                out.add_term({t.n, static_cast<int>(r / d), static_cast<int>(r % d)}, c * m(r, col));
    }
    return out;
}

// Representation matrix entries of x on irrep(n), computed from the pairing.
Matrix block_action(int n, const UEAElement& x) {
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    Matrix out(d, d);
    for (const auto& [m, c] : x.terms())
        for (int j = 0; j <= n; ++j) {
            const int i = j - m.e + m.f;
            if (i < 0 || i > n) continue;
            Scalar p = pairing({n, i, j}, m);
            if (!p.is_zero()) out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += c * p;
        }
    return out;
}

}  // namespace

const Matrix& antipode_block(int n) { return cached_block(n, false); }
const Matrix& star_block(int n) { return cached_block(n, true); }

CoeffElement antipode(const CoeffElement& f) { return apply_blocks(f, false); }
CoeffElement star(const CoeffElement& f) { return apply_blocks(f, true); }

CoeffElement circle(const UEAElement& x, const CoeffElement& f) {
    CoeffElement out;
    std::map<int, Matrix> actions;
    for (const auto& [t, c] : f.terms()) {
        auto it = actions.find(t.n);
        if (it == actions.end()) it = actions.emplace(t.n, block_action(t.n, x)).first;
        for (int j = 0; j <= t.n; ++j) {
            const Scalar& a = it->second(static_cast<std::size_t>(j), static_cast<std::size_t>(t.j));
            if (!a.is_zero()) out.add_term({t.n, t.i, j}, c * a);
        }
    }
    return out;
}

CoeffElement dot(const UEAElement& x, const CoeffElement& f) {
    const UEAElement sx = antipode_inv(x);
    CoeffElement out;
    std::map<int, Matrix> actions;
    for (const auto& [t, c] : f.terms()) {
        auto it = actions.find(t.n);
        if (it == actions.end()) it = actions.emplace(t.n, block_action(t.n, sx)).first;
        for (int i = 0; i <= t.n; ++i) {
            const Scalar& a = it->second(static_cast<std::size_t>(t.i), static_cast<std::size_t>(i));
            if (!a.is_zero()) out.add_term({t.n, i, t.j}, c * a);
        }
    }
    return out;
}

Scalar haar(const CoeffElement& f) { return f.coeff({0, 0, 0}); }

Scalar haar_norm_sq(const CoeffElement& f, int level_bound) { return haar(multiply(star(f), f, level_bound)); }

PairingTable::PairingTable(int level) : level_(level) {
    if (level < 0) throw std::invalid_argument("negative level");
    for (int n = 0; n <= level; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) basis_.push_back({n, i, j});
    // f^a k^b e^c with a, c <= level and b in [0, level]: for fixed (a, c) the
    // powers of k separate the at most level+1 distinct weights.
    for (int a = 0; a <= level; ++a)
        for (int c = 0; c <= level; ++c)
            for (int b = 0; b <= level; ++b) monomials_.push_back({a, b, c});

    for (int s = -level; s <= level; ++s) {
        Block blk;
        blk.shift = s;
        for (std::size_t col = 0; col < basis_.size(); ++col)
            if (basis_[col].i - basis_[col].j == s) blk.columns.push_back(col);
        for (std::size_t row = 0; row < monomials_.size(); ++row)
            if (monomials_[row].f - monomials_[row].e == s) blk.rows.push_back(row);
        blk.values = Matrix(blk.rows.size(), blk.columns.size());
        for (std::size_t r = 0; r < blk.rows.size(); ++r)
            for (std::size_t c = 0; c < blk.columns.size(); ++c)
                blk.values(r, c) = pairing(basis_[blk.columns[c]], monomials_[blk.rows[r]]);
        blk.rank = rank(blk.values);
        blocks_.push_back(std::move(blk));
    }
}

bool PairingTable::full_column_rank() const {
    for (const auto& b : blocks_)
        if (b.rank != b.columns.size()) return false;
    return true;
}

CoeffElement PairingTable::solve(const std::vector<Scalar>& values) const {
    if (values.size() != monomials_.size()) throw std::invalid_argument("pairing solve: wrong number of values");
    CoeffElement out;
    for (const auto& b : blocks_) {
        Vector rhs;
        rhs.reserve(b.rows.size());
        bool all_zero = true;
        for (auto r : b.rows) {
            rhs.push_back(values[r]);
            all_zero = all_zero && values[r].is_zero();
        }
        if (all_zero) continue;
        Vector x = qb::solve(b.values, rhs);
        for (std::size_t c = 0; c < b.columns.size(); ++c) out.add_term(basis_[b.columns[c]], x[c]);
    }
    return out;
}

const PairingTable& PairingTable::get(int level) {
    static std::mutex mu;
    static std::map<int, PairingTable> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(level);
        if (it != cache.end()) return it->second;
    }
    PairingTable t(level);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(level, std::move(t)).first->second;
}

std::string to_json(const CoeffElement& f) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [t, c] : f.terms()) j.push_back({t.n, t.i, t.j, c.to_string()});
    return j.dump();
}

CoeffElement coeff_from_json(const std::string& text) {
    CoeffElement out;
    for (const auto& e : nlohmann::json::parse(text))
        out.add_term({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()}, Scalar::parse(e.at(3).get<std::string>()));
    return out;
}

}  // namespace qb
