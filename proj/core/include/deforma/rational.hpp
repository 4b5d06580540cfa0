#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace deforma {

/// Exact rational number, always stored reduced with a positive denominator.
/// Backed by GMP's mpq layer; arithmetic never rounds.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return v_.get_str(); }

    /// Parses "p" or "p/q". Returns nothing on malformed input or q = 0.
    static std::optional<Rational> parse(const std::string& s) {
        if (s.empty()) return std::nullopt;
        auto digits_ok = [](const std::string& t, bool allow_sign) {
            if (t.empty()) return false;
            std::size_t i = 0;
            if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            if (!digits_ok(s, true)) return std::nullopt;
            Rational r;
            r.v_ = mpq_class(s);
            r.v_.canonicalize();
            return r;
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!digits_ok(num, true) || !digits_ok(den, false)) return std::nullopt;
        mpz_class d(den);
        if (d == 0) return std::nullopt;
        Rational r;
        r.v_ = mpq_class(mpz_class(num), d);
        r.v_.canonicalize();
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

  private:
    mpq_class v_;
};

using Vec = std::vector<Rational>;

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec& add_scaled(Vec& v, const Rational& c, const Vec& w) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
    return v;
}

} // namespace deforma
