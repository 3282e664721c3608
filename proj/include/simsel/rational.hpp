#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace simsel {

/// Exact fraction over 64-bit integers, always stored in lowest terms with a
/// positive denominator. Overflow is reported rather than wrapped.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Parses "3", "-2", "0.25", "7/4".
    static Rational parse(std::string_view text) {
        auto fail = [&] { throw std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
        if (text.empty()) fail();
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            Rational n = parse_integer(text.substr(0, slash), fail);
            Rational d = parse_integer(text.substr(slash + 1), fail);
            if (d.num_ == 0) fail();
            return n / d;
        }
        auto dot = text.find('.');
        if (dot == std::string_view::npos) return parse_integer(text, fail);
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 17) fail();
        for (char c : frac)
            if (c < '0' || c > '9') fail();
        bool negative = !whole.empty() && whole.front() == '-';
        Rational w = (whole.empty() || whole == "-") ? Rational(0) : parse_integer(whole, fail);
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rational f(parse_integer(frac, fail).num_, scale);
        return negative ? w - f : w + f;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Finite decimal expansion when one exists ("0.25"), else "n/d".
    std::string decimal_str() const {
        if (den_ == 1) return std::to_string(num_);
        std::int64_t scale = 1;
        int digits = 0;
        while (scale % den_ != 0) {
            if (++digits > 18) return str();
            scale *= 10;
        }
        __int128 scaled = static_cast<__int128>(num_) * (scale / den_);
        bool negative = scaled < 0;
        if (negative) scaled = -scaled;
        auto whole = static_cast<std::int64_t>(scaled / scale);
        std::string frac = std::to_string(static_cast<std::int64_t>(scaled % scale));
        frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
        while (frac.back() == '0') frac.pop_back();
        return (negative ? "-" : "") + std::to_string(whole) + "." + frac;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
        return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num_, b.den_); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    template <class Fail>
    static Rational parse_integer(std::string_view s, Fail&& fail) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) fail();
        return Rational(v);
    }

    static Rational from_wide(__int128 num, __int128 den) {
        if (den < 0) { num = -num; den = -den; }
        __int128 a = num < 0 ? -num : num, b = den;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi) throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    void assign(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        *this = from_wide(num, den);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Clause or term weight. Exact whenever every input was rational; the
/// TF-IDF kernel is the only source of inexact (double) values.
class Weight {
public:
    Weight() = default;
    Weight(Rational q) : exact_(q), approx_(q.to_double()) {}  // NOLINT(implicit)
    static Weight real(double x) {
        Weight w;
        w.is_exact_ = false;
        w.approx_ = x;
        return w;
    }

    bool is_exact() const { return is_exact_; }
    const Rational& exact() const { return exact_; }
    double to_double() const { return approx_; }

    friend Weight operator+(const Weight& a, const Weight& b) {
        if (a.is_exact_ && b.is_exact_) return Weight(a.exact_ + b.exact_);
        return real(a.approx_ + b.approx_);
    }
    Weight& operator+=(const Weight& o) { return *this = *this + o; }
    friend Weight operator*(const Weight& a, const Rational& k) {
        if (a.is_exact_) return Weight(a.exact_ * k);
        return real(a.approx_ * k.to_double());
    }

    friend bool operator==(const Weight& a, const Weight& b) {
        if (a.is_exact_ && b.is_exact_) return a.exact_ == b.exact_;
        return a.approx_ == b.approx_;
    }
    friend std::partial_ordering operator<=>(const Weight& a, const Weight& b) {
        if (a.is_exact_ && b.is_exact_) return a.exact_ <=> b.exact_;
        return a.approx_ <=> b.approx_;
    }

    std::string str() const;

private:
    Rational exact_{};
    double approx_ = 0.0;
    bool is_exact_ = true;
};

inline std::string Weight::str() const {
    if (is_exact_) return exact_.str();
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, approx_);
    return std::string(buf, ptr);
}

inline Weight max(const Weight& a, const Weight& b) { return (b > a) ? b : a; }

}  // namespace simsel
