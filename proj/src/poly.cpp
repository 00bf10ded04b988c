#include "qbundle/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qb {

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(long c) {
    if (c != 0) c_.emplace_back(c);
}

Poly Poly::constant(const mpz_class& c) {
    Poly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

Poly Poly::monomial(const mpz_class& c, int k) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, mpz_class(0));
    p.c_.back() = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

int Poly::low_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

Poly Poly::shifted_down(int k) const {
    if (k == 0 || c_.empty()) return *this;
    Poly p;
    p.c_.assign(c_.begin() + k, c_.end());
    return p;
}

Poly Poly::shifted_up(int k) const {
    if (k == 0 || c_.empty()) return *this;
    Poly p;
    p.c_.assign(static_cast<std::size_t>(k), mpz_class(0));
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive_part() const {
    if (c_.empty()) return *this;
    mpz_class g = content();
    if (lc() < 0) g = -g;
    if (g == 1) return *this;
    return div_exact(g);
}

std::size_t Poly::size_hint() const {
    std::size_t s = 0;
    for (const auto& c : c_) s += mpz_sizeinbase(c.get_mpz_t(), 2);
    return s;
}

mpz_class Poly::max_norm() const {
    mpz_class m = 0;
    for (const auto& c : c_) {
        mpz_class a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

mpz_class Poly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * x + mpq_class(*it);
    }
    r.canonicalize();
    return r;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const mpz_class& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    r.trim();
    return r;
}

Poly Poly::div_exact(const mpz_class& c) const {
    Poly p = *this;
    for (auto& x : p.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return p;
}

bool Poly::divides_by(const Poly& b, Poly* quotient) const {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    if (is_zero()) {
        if (quotient) *quotient = Poly();
        return true;
    }
    if (degree() < b.degree()) return false;
    std::vector<mpz_class> rem = c_;
    const int db = b.degree();
    std::vector<mpz_class> q(static_cast<std::size_t>(degree() - db + 1));
    mpz_class r;
    for (int k = degree(); k >= db; --k) {
        mpz_class& top = rem[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t())) return false;
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
        const int shift = k - db;
        for (int j = 0; j <= db; ++j) {
            const auto& bc = b.c_[static_cast<std::size_t>(j)];
            if (bc == 0) continue;
            mpz_submul(rem[static_cast<std::size_t>(shift + j)].get_mpz_t(), t.get_mpz_t(),
                       bc.get_mpz_t());
        }
        q[static_cast<std::size_t>(shift)] = std::move(t);
    }
    for (int k = 0; k < db; ++k)
        if (rem[static_cast<std::size_t>(k)] != 0) return false;
    if (quotient) *quotient = Poly(std::move(q));
    return true;
}

Poly Poly::div_exact(const Poly& b) const {
    Poly q;
    if (!divides_by(b, &q)) throw std::logic_error("Poly::div_exact: inexact division");
    return q;
}

Poly Poly::pseudo_rem(const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("Poly: pseudo-remainder by zero");
    Poly r = *this;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        mpz_class rl = r.lc();
        r *= b.lc();
        Poly t = b.shifted_up(shift);
        t *= rl;
        r -= t;
    }
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

namespace {

Poly gcd_prs(Poly a, Poly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = a.pseudo_rem(b);
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive_part();
    }
    return a.primitive_part();
}

// Heuristic gcd: evaluate at a large integer, take the integer gcd and read
// the candidate back off its balanced digits. Fails over to the PRS route.
bool gcd_heuristic(const Poly& a, const Poly& b, Poly* out) {
    mpz_class na = a.max_norm(), nb = b.max_norm();
    mpz_class xi = 2 * std::min(na, nb) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        mpz_class va = a.eval(xi), vb = b.eval(xi);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
        std::vector<mpz_class> digits;
        mpz_class half = xi / 2;
        while (g != 0) {
            mpz_class d;
            mpz_fdiv_r(d.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
            if (d > half) d -= xi;
            digits.push_back(d);
            g -= d;
            mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
        }
        Poly cand = Poly(std::move(digits)).primitive_part();
        if (!cand.is_zero() && a.divides_by(cand, nullptr) && b.divides_by(cand, nullptr)) {
            *out = cand;
            return true;
        }
        xi = xi * 73794 / 27011;
    }
    return false;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive_part() * (b.is_zero() ? mpz_class(0) : b.content());
    if (b.is_zero()) return a.primitive_part() * a.content();
    mpz_class ca = a.content(), cb = b.content(), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.is_constant() || b.is_constant()) return Poly::constant(cg);
    Poly pa = a.primitive_part(), pb = b.primitive_part();
    if (pa == pb) return pa * cg;
    Poly g;
    if (!gcd_heuristic(pa, pb, &g)) g = gcd_prs(pa, pb);
    return g * cg;
}

}  // namespace qb
