#include "qbundle/scalar.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace qb {

Scalar::Scalar(long c) : num_(c), den_(1) {}

Scalar::Scalar(const mpz_class& c) : num_(Poly::constant(c)), den_(1) {}

Scalar::Scalar(const mpq_class& c) : num_(Poly::constant(c.get_num())), den_(Poly::constant(c.get_den())) {
    normalize();
}

Scalar Scalar::u() { return laurent(1, 1); }

Scalar Scalar::u_pow(int k) { return laurent(1, k); }

Scalar Scalar::laurent(const mpz_class& c, int k) {
    Scalar s;
    if (c == 0) return s;
    s.num_ = Poly::constant(c);
    s.shift_ = k;
    return s;
}

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
    Scalar s;
    s.num_ = num;
    s.den_ = den;
    s.normalize();
    return s;
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = Poly(1);
        return;
    }
    int kn = num_.low_order();
    if (kn) {
        num_ = num_.shifted_down(kn);
        shift_ += kn;
    }
    int kd = den_.low_order();
    if (kd) {
        den_ = den_.shifted_down(kd);
        shift_ -= kd;
    }
    if (!den_.is_one()) {
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.div_exact(g);
            den_ = den_.div_exact(g);
        }
        if (den_.lc() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
}

mpq_class Scalar::eval_at(const mpq_class& u0) const {
    if (is_zero()) return 0;
    if (u0 == 0) {
        if (shift_ < 0) throw PoleError("Scalar::eval_at: pole at u = 0");
        if (shift_ > 0) return 0;
    }
    mpq_class d = den_.eval(u0);
    if (d == 0) throw PoleError("Scalar::eval_at: denominator vanishes at u = " + u0.get_str());
    mpq_class r = num_.eval(u0) / d;
    if (shift_ != 0) {
        mpq_class p = 1;
        mpq_class base = shift_ > 0 ? u0 : mpq_class(1) / u0;
        for (int i = 0; i < std::abs(shift_); ++i) p *= base;
        r *= p;
    }
    r.canonicalize();
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    Scalar s;
    s.shift_ = -shift_;
    s.num_ = den_;
    s.den_ = num_;
    if (s.den_.lc() < 0) {
        s.num_ = -s.num_;
        s.den_ = -s.den_;
    }
    return s;
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int s = std::min(shift_, o.shift_);
    Poly a = num_.shifted_up(shift_ - s);
    Poly b = o.num_.shifted_up(o.shift_ - s);
    if (den_.is_one() && o.den_.is_one()) {
        num_ = a + b;
        shift_ = s;
        if (num_.is_zero()) {
            shift_ = 0;
            return *this;
        }
        int k = num_.low_order();
        if (k) {
            num_ = num_.shifted_down(k);
            shift_ += k;
        }
        return *this;
    }
    if (den_ == o.den_) {
        num_ = a + b;
        shift_ = s;
        normalize();
        return *this;
    }
    Poly g = gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = a * o.den_ + b * den_;
        den_ = den_ * o.den_;
        shift_ = s;
        if (num_.is_zero()) {
            *this = Scalar();
            return *this;
        }
        int k = num_.low_order();
        if (k) {
            num_ = num_.shifted_down(k);
            shift_ += k;
        }
        return *this;
    }
    Poly d1g = den_.div_exact(g), d2g = o.den_.div_exact(g);
    num_ = a * d2g + b * d1g;
    den_ = den_ * d2g;
    shift_ = s;
    if (num_.is_zero()) {
        *this = Scalar();
        return *this;
    }
    int k = num_.low_order();
    if (k) {
        num_ = num_.shifted_down(k);
        shift_ += k;
    }
    Poly h = gcd(num_, g);
    if (!h.is_one()) {
        num_ = num_.div_exact(h);
        den_ = den_.div_exact(h);
    }
    if (den_.lc() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    shift_ += o.shift_;
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // Cross cancellation keeps the result reduced without a full gcd.
    Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
    if (!d2.is_one()) {
        Poly g = gcd(n1, d2);
        if (!g.is_one()) {
            n1 = n1.div_exact(g);
            d2 = d2.div_exact(g);
        }
    }
    if (!d1.is_one()) {
        Poly g = gcd(n2, d1);
        if (!g.is_one()) {
            n2 = n2.div_exact(g);
            d1 = d1.div_exact(g);
        }
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    if (den_.lc() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    Poly n = num_, d = den_;
    if (shift_ > 0) n = n.shifted_up(shift_);
    if (shift_ < 0) d = d.shifted_up(-shift_);
    if (d.is_one()) return n.to_string();
    std::ostringstream os;
    os << "(" << n.to_string() << ")/(" << d.to_string() << ")";
    return os.str();
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Scalar parse() {
        Scalar r = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing characters");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("Scalar::parse: " + what + " at offset " + std::to_string(pos_) +
                                    " in \"" + s_ + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar r = term();
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }
    Scalar term() {
        Scalar r = factor();
        for (;;) {
            if (eat('*'))
                r *= factor();
            else if (eat('/'))
                r /= factor();
            else
                return r;
        }
    }
    Scalar factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Scalar b = base();
        if (eat('^')) {
            bool neg = eat('-');
            if (!neg) eat('+');
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            int e = std::stoi(s_.substr(start, pos_ - start));
            b = b.pow(neg ? -e : e);
        }
        return b;
    }
    Scalar base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'u') {
            ++pos_;
            return Scalar::u();
        }
        if (c == 'q') {
            ++pos_;
            return Scalar::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar(mpz_class(s_.substr(start, pos_ - start)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return Parser(text).parse(); }

Scalar qint(int n) {
    if (n == 0) return Scalar();
    if (n < 0) return -qint(-n);
    // (q^n - q^-n)/(q - q^-1) = sum_{j=0}^{n-1} q^{n-1-2j}, a Laurent polynomial in u.
    std::vector<mpz_class> c(static_cast<std::size_t>(8 * (n - 1) + 1), mpz_class(0));
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(8 * j)] = 1;
    return Scalar::u_pow(-4 * (n - 1)) * Scalar::fraction(Poly(std::move(c)), Poly(1));
}

Scalar qfactorial(int n) {
    Scalar r(1);
    for (int i = 2; i <= n; ++i) r *= qint(i);
    return r;
}

}  // namespace qb
