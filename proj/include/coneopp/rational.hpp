// Exact rational scalar for the cone-geometry layer. All geometry in this
// library is integer/rational arithmetic; overflow is detected and reported
// rather than wrapped.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace coneopp {

namespace detail {

using int128 = __int128;

inline std::int64_t checked_narrow(int128 v, const char* what) {
    if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
        throw std::overflow_error(std::string("rational overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

inline int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

// Normalized fraction: lowest terms, positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(detail::int128(a.num_) * b.den_ + detail::int128(b.num_) * a.den_,
                       detail::int128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(detail::int128(a.num_) * b.den_ - detail::int128(b.num_) * a.den_,
                       detail::int128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(detail::int128(a.num_) * b.num_, detail::int128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128(detail::int128(a.num_) * b.den_, detail::int128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = detail::checked_narrow(-detail::int128(num_), "negation");
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return detail::int128(a.num_) * b.den_ < detail::int128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Largest integer <= value.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        std::int64_t r = num_ % den_;
        if (r != 0 && num_ < 0) --q;
        return q;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p", "p/q", optional leading minus on either part.
    static Rational parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty rational string");
        auto slash = s.find('/');
        try {
            std::size_t used = 0;
            if (slash == std::string::npos) {
                std::int64_t n = std::stoll(s, &used);
                if (used != s.size()) throw std::invalid_argument("trailing characters");
                return Rational(n);
            }
            std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
            std::int64_t n = std::stoll(ns, &used);
            if (used != ns.size()) throw std::invalid_argument("trailing characters");
            std::int64_t d = std::stoll(ds, &used);
            if (used != ds.size()) throw std::invalid_argument("trailing characters");
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed rational string: '" + s + "'");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("rational string out of range: '" + s + "'");
        }
    }

private:
    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        *this = from128(n, d);
    }

    static Rational from128(detail::int128 n, detail::int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        detail::int128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = detail::checked_narrow(n, "normalization");
        r.den_ = detail::checked_narrow(d, "normalization");
        return r;
    }

    std::int64_t num_;
    std::int64_t den_; // > 0
};

} // namespace coneopp
