#include "qbundle/uea.hpp"

#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qb {

UEAElement::UEAElement(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(Pbw{}, c);
}

UEAElement UEAElement::monomial(const Pbw& m, const Scalar& c) {
    UEAElement x;
    x.add_term(m, c);
    return x;
}

Scalar UEAElement::coeff(const Pbw& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

int UEAElement::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void UEAElement::add_term(const Pbw& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

UEAElement UEAElement::operator-() const {
    UEAElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

UEAElement& UEAElement::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

namespace {

// e^c f^a in normal form, memoized. The cache is only ever filled with
// fully computed values, so concurrent readers observe a pure function.
std::mutex g_ef_mutex;
std::map<std::pair<int, int>, UEAElement> g_ef_cache;

UEAElement times_e_right(const UEAElement& x) {
    UEAElement r;
    for (const auto& [m, c] : x.terms()) r.add_term({m.f, m.k, m.e + 1}, c);
    return r;
}

// x * k^s : moving k^s left through e^z gives q^(-s z).
UEAElement times_k_right(const UEAElement& x, int s) {
    UEAElement r;
    for (const auto& [m, c] : x.terms()) r.add_term({m.f, m.k + s, m.e}, c * Scalar::u_pow(-4 * s * m.e));
    return r;
}

UEAElement e_power_f_power(int c, int a) {
    if (c == 0 || a == 0) return UEAElement::monomial({a, 0, c});
    {
        std::lock_guard<std::mutex> lock(g_ef_mutex);
        auto it = g_ef_cache.find({c, a});
        if (it != g_ef_cache.end()) return it->second;
    }
    // e f^a = f^a e + f^(a-1) (A k^2 - B k^-2) / (q - q^-1),
    // A = sum_j q^(-2j), B = sum_j q^(2j), j = 0..a-1.
    Scalar A, B;
    for (int j = 0; j < a; ++j) {
        A += Scalar::u_pow(-8 * j);
        B += Scalar::u_pow(8 * j);
    }
    const Scalar inv = (Scalar::q() - Scalar::u_pow(-4)).inverse();
    UEAElement result = times_e_right(e_power_f_power(c - 1, a));
    UEAElement lower = e_power_f_power(c - 1, a - 1);
    result += times_k_right(lower, 2) * (A * inv);
    result -= times_k_right(lower, -2) * (B * inv);
    std::lock_guard<std::mutex> lock(g_ef_mutex);
    g_ef_cache.emplace(std::make_pair(c, a), result);
    return result;
}

}  // namespace

UEAElement multiply_monomials(const Pbw& x, const Pbw& y) {
    // f^a k^b (e^c f^a') k^b' e^c'
    UEAElement mid = e_power_f_power(x.e, y.f);
    UEAElement r;
    for (const auto& [m, c] : mid.terms()) {
        const int exponent = -4 * (x.k * m.f + y.k * m.e);
        r.add_term({x.f + m.f, x.k + m.k + y.k, m.e + y.e}, c * Scalar::u_pow(exponent));
    }
    return r;
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) {
    UEAElement r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Scalar c = ca * cb;
            if (ma.e == 0 || mb.f == 0) {
                r.add_term({ma.f + mb.f, ma.k + mb.k, ma.e + mb.e}, c * Scalar::u_pow(-4 * ma.k * mb.f - 4 * mb.k * ma.e));
                continue;
            }
            const UEAElement prod = multiply_monomials(ma, mb);
            for (const auto& [m, cm] : prod.terms_) r.add_term(m, cm * c);
        }
    return r;
}

UEAElement UEAElement::pow(int n) const {
    if (n < 0) throw std::invalid_argument("UEAElement::pow: negative exponent");
    UEAElement r = one();
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

std::string UEAElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "] f^" << m.f << " k^" << m.k << " e^" << m.e;
    }
    return os.str();
}

UEAElement UEAElement::parse(const std::string& text) {
    UEAElement x;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("UEAElement::parse: " + what + " in \"" + text + "\"");
    };
    skip();
    if (text.substr(pos) == "0") return x;
    while (pos < text.size()) {
        skip();
        Scalar sign(1);
        if (text[pos] == '-') {
            sign = Scalar(-1);
            ++pos;
            skip();
        }
        if (pos >= text.size() || text[pos] != '[') fail("expected '['");
        std::size_t close = text.find(']', pos);
        if (close == std::string::npos) fail("unterminated coefficient");
        Scalar c = Scalar::parse(text.substr(pos + 1, close - pos - 1)) * sign;
        pos = close + 1;
        Pbw m;
        for (;;) {
            skip();
            if (pos >= text.size() || text[pos] == '+' || text[pos] == '-') break;
            char g = text[pos];
            if (g != 'f' && g != 'k' && g != 'e') fail("unexpected generator");
            ++pos;
            int exponent = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t used = 0;
                exponent = std::stoi(text.substr(pos), &used);
                pos += used;
            }
            (g == 'f' ? m.f : g == 'k' ? m.k : m.e) = exponent;
        }
        if (m.f < 0 || m.e < 0) fail("negative e/f exponent");
        x.add_term(m, c);
        skip();
        if (pos < text.size() && text[pos] == '+') ++pos;
    }
    return x;
}

TensorUEA TensorUEA::simple(const UEAElement& a, const UEAElement& b) {
    TensorUEA t;
    t.add(a, b);
    return t;
}

std::vector<std::pair<UEAElement, UEAElement>> TensorUEA::pairs() const {
    std::vector<std::pair<UEAElement, UEAElement>> out;
    for (const auto& [m, r] : terms_) out.emplace_back(UEAElement::monomial(m), r);
    return out;
}

void TensorUEA::add_term(const Pbw& left, const UEAElement& right) {
    if (right.is_zero()) return;
    auto [it, inserted] = terms_.emplace(left, right);
    if (inserted) return;
    it->second += right;
    if (it->second.is_zero()) terms_.erase(it);
}

void TensorUEA::add(const UEAElement& a, const UEAElement& b) {
    if (b.is_zero()) return;
    for (const auto& [m, c] : a.terms()) add_term(m, b * c);
}

TensorUEA& TensorUEA::operator+=(const TensorUEA& o) {
    for (const auto& [m, r] : o.terms_) add_term(m, r);
    return *this;
}

TensorUEA& TensorUEA::operator-=(const TensorUEA& o) {
    for (const auto& [m, r] : o.terms_) add_term(m, -r);
    return *this;
}

TensorUEA& TensorUEA::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, r] : terms_) r *= s;
    return *this;
}

TensorUEA operator*(const TensorUEA& a, const TensorUEA& b) {
    TensorUEA r;
    for (const auto& [ma, ra] : a.terms_)
        for (const auto& [mb, rb] : b.terms_) {
            UEAElement right = ra * rb;
            if (right.is_zero()) continue;
            const UEAElement prod = multiply_monomials(ma, mb);
            for (const auto& [m, c] : prod.terms()) r.add_term(m, right * c);
        }
    return r;
}

TensorUEA TensorUEA::flipped() const {
    TensorUEA r;
    for (const auto& [m, right] : terms_) r.add(right, UEAElement::monomial(m));
    return r;
}

UEAElement TensorUEA::multiply_legs() const {
    UEAElement r;
    for (const auto& [m, right] : terms_) r += UEAElement::monomial(m) * right;
    return r;
}

void Tensor3UEA::add(const UEAElement& a, const UEAElement& b, const UEAElement& c) {
    if (c.is_zero()) return;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            auto key = std::make_pair(ma, mb);
            UEAElement v = c * (ca * cb);
            auto [it, inserted] = terms_.emplace(key, v);
            if (inserted) continue;
            it->second += v;
            if (it->second.is_zero()) terms_.erase(it);
        }
}

namespace {

TensorUEA delta_generator_power(const TensorUEA& gen, int n, std::map<int, TensorUEA>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    TensorUEA r = n == 0 ? TensorUEA::simple(UEAElement::one(), UEAElement::one())
                         : delta_generator_power(gen, n - 1, cache) * gen;
    cache.emplace(n, r);
    return r;
}

std::mutex g_delta_mutex;
std::map<Pbw, TensorUEA> g_delta_cache;

TensorUEA coproduct_monomial(const Pbw& m) {
    {
        std::lock_guard<std::mutex> lock(g_delta_mutex);
        auto it = g_delta_cache.find(m);
        if (it != g_delta_cache.end()) return it->second;
    }
    const auto k = UEAElement::k(), kinv = UEAElement::k(-1);
    const TensorUEA de = TensorUEA::simple(UEAElement::e(), k) + TensorUEA::simple(kinv, UEAElement::e());
    const TensorUEA df = TensorUEA::simple(UEAElement::f(), k) + TensorUEA::simple(kinv, UEAElement::f());
    std::map<int, TensorUEA> ce, cf;
    TensorUEA dk = TensorUEA::simple(UEAElement::k(m.k), UEAElement::k(m.k));
    TensorUEA r = delta_generator_power(df, m.f, cf) * dk * delta_generator_power(de, m.e, ce);
    std::lock_guard<std::mutex> lock(g_delta_mutex);
    g_delta_cache.emplace(m, r);
    return r;
}

}  // namespace

TensorUEA coproduct(const UEAElement& x) {
    TensorUEA r;
    for (const auto& [m, c] : x.terms()) {
        TensorUEA t = coproduct_monomial(m);
        t *= c;
        r += t;
    }
    return r;
}

Scalar counit(const UEAElement& x) {
    Scalar s;
    for (const auto& [m, c] : x.terms())
        if (m.f == 0 && m.e == 0) s += c;
    return s;
}

namespace {

// Anti-automorphism determined by its values on e, f and k.
UEAElement apply_anti(const UEAElement& x, const UEAElement& img_e, const UEAElement& img_f, int k_sign) {
    UEAElement r;
    for (const auto& [m, c] : x.terms()) {
        UEAElement t = img_e.pow(m.e) * UEAElement::k(k_sign * m.k) * img_f.pow(m.f);
        r += t * c;
    }
    return r;
}

}  // namespace

UEAElement antipode(const UEAElement& x) {
    return apply_anti(x, UEAElement::e() * -Scalar::q(), UEAElement::f() * -Scalar::u_pow(-4), -1);
}

UEAElement antipode_inv(const UEAElement& x) {
    return apply_anti(x, UEAElement::e() * -Scalar::u_pow(-4), UEAElement::f() * -Scalar::q(), -1);
}

UEAElement star(const UEAElement& x) {
    // (f^a k^b e^c)* = f^c k^b e^a, already in normal form.
    UEAElement r;
    for (const auto& [m, c] : x.terms()) r.add_term({m.e, m.k, m.f}, c);
    return r;
}

Tensor3UEA coproduct_left(const TensorUEA& t) {
    Tensor3UEA r;
    for (const auto& [m, right] : t.terms())
        for (const auto& [a, b] : coproduct(UEAElement::monomial(m)).pairs()) r.add(a, b, right);
    return r;
}

Tensor3UEA coproduct_right(const TensorUEA& t) {
    Tensor3UEA r;
    for (const auto& [m, right] : t.terms())
        for (const auto& [b, c] : coproduct(right).pairs()) r.add(UEAElement::monomial(m), b, c);
    return r;
}

TensorUEA map_legs(const TensorUEA& t, UEAElement (*left)(const UEAElement&),
                   UEAElement (*right)(const UEAElement&)) {
    TensorUEA r;
    for (const auto& [a, b] : t.pairs()) r.add(left ? left(a) : a, right ? right(b) : b);
    return r;
}

std::vector<Pbw> pbw_monomials(int degree) {
    std::vector<Pbw> out;
    for (int a = 0; a <= degree; ++a)
        for (int c = 0; a + c <= degree; ++c)
            for (int b = -(degree - a - c); b <= degree - a - c; ++b) out.push_back({a, b, c});
    return out;
}

}  // namespace qb
