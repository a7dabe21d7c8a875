#pragma once

// Exact rationals. Values that fit in 64-bit numerator/denominator stay on a
// fast path; anything larger is promoted to a GMP rational and demoted again
// whenever the reduced result fits.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncdup {

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) { // NOLINT(google-explicit-constructor)
        if (n == std::numeric_limits<long long>::min()) promote_from(mpq_class(mpz_class(std::to_string(n))));
    }
    Rational(int n) : Rational(static_cast<long long>(n)) {} // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d) { assign_small(static_cast<__int128>(n), static_cast<__int128>(d)); }

    explicit Rational(const mpq_class& q) { assign_big(q); }

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text or zero denominator.
    static Rational parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        auto valid_int = [](std::string_view s) {
            if (s.empty()) return false;
            std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        auto slash = text.find('/');
        std::string_view ns = text.substr(0, slash);
        std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (!valid_int(ns) || !valid_int(ds) || ds[0] == '-' || ds[0] == '+')
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        std::string nstr(ns[0] == '+' ? ns.substr(1) : ns);
        mpz_class n(nstr), d{std::string(ds)};
        if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(q);
    }

    bool is_small() const { return !big_; }
    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

    mpq_class to_mpq() const {
        if (big_) return *big_;
        mpq_class q(mpz_class(std::to_string(num_)), mpz_class(std::to_string(den_)));
        return q;
    }

    std::string to_string() const {
        if (big_) {
            if (big_->get_den() == 1) return big_->get_num().get_str();
            return big_->get_num().get_str() + "/" + big_->get_den().get_str();
        }
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    int sign() const {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }

    Rational operator-() const {
        if (!big_) return Rational(-num_, den_, raw_tag{});
        return Rational(mpq_class(-*big_));
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) return from_i128(static_cast<__int128>(a.num_) + b.num_, 1);
            __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
            __int128 d = static_cast<__int128>(a.den_) * b.den_;
            return from_i128(n, d);
        }
        return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.num_ == 0 || b.num_ == 0) return Rational();
            long long g1 = std::gcd(a.num_, b.den_);
            long long g2 = std::gcd(b.num_, a.den_);
            __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
            __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
            return from_reduced_i128(n, d);
        }
        return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return a * b.inverse();
    }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        if (!big_) return num_ > 0 ? Rational(den_, num_, raw_tag{}) : Rational(-den_, -num_, raw_tag{});
        return Rational(mpq_class(1 / *big_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        // Both representations are canonical: a value that fits is always small.
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_)
            return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
        return a.to_mpq() < b.to_mpq();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    struct raw_tag {};
    Rational(long long n, long long d, raw_tag) : num_(n), den_(d) {}

    static constexpr __int128 kMax = std::numeric_limits<long long>::max();

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static mpz_class to_mpz(__int128 v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
        mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
        mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    }

    static Rational from_i128(__int128 n, __int128 d) {
        Rational r;
        r.assign_small(n, d);
        return r;
    }

    static Rational from_reduced_i128(__int128 n, __int128 d) {
        if (n <= kMax && n >= -kMax && d <= kMax) return Rational(static_cast<long long>(n), static_cast<long long>(d), raw_tag{});
        mpq_class q(to_mpz(n), to_mpz(d));
        return Rational(q);
    }

    void assign_small(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
        if (n <= kMax && n >= -kMax && d <= kMax) {
            num_ = static_cast<long long>(n);
            den_ = static_cast<long long>(d);
            big_.reset();
        } else {
            mpq_class q(to_mpz(n), to_mpz(d));
            assign_big(q);
        }
    }

    void assign_big(const mpq_class& q) {
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
            q.get_num() != std::numeric_limits<long>::min()) {
            num_ = q.get_num().get_si();
            den_ = q.get_den().get_si();
            big_.reset();
        } else {
            num_ = 0;
            den_ = 1;
            big_ = std::make_shared<const mpq_class>(q);
        }
    }

    void promote_from(const mpq_class& q) { assign_big(q); }

    long long num_ = 0;
    long long den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

} // namespace ncdup
