#pragma once

// Exact rationals: int64 numerator/denominator with a GMP fallback once a
// value no longer fits.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tyv {

class Rational {
public:
    Rational() = default;
    Rational(long long n) : n_(n) { if (n == kMin) promote_(); }
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q) { set_big_(q); }
    static Rational parse(const std::string& s);

    Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }
    int sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }
    bool is_small() const { return !big_; }

    mpq_class to_mpq() const { return big_ ? *big_ : mpq_class(mpz_from_(n_), mpz_from_(d_)); }
    std::string num_str() const { return big_ ? big_->get_num().get_str() : std::to_string(n_); }
    std::string den_str() const { return big_ ? big_->get_den().get_str() : std::to_string(d_); }
    std::string str() const {
        if (is_integer()) return num_str();
        return num_str() + "/" + den_str();
    }
    // Only meaningful for small values.
    long long small_num() const { return n_; }
    long long small_den() const { return d_; }

    Rational operator-() const {
        if (big_) return Rational(-*big_);
        Rational r;
        r.n_ = -n_;
        r.d_ = d_;
        return r;
    }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o) { return *this *= o.inverse(); }
    Rational inverse() const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // a normalized big value never fits in int64
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            __int128 l = static_cast<__int128>(a.n_) * b.d_;
            __int128 r = static_cast<__int128>(b.n_) * a.d_;
            return l <=> r;
        }
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c <=> 0;
    }

    std::size_t hash() const {
        if (big_) return std::hash<std::string>()(big_->get_str());
        return std::hash<long long>()(n_) * 1000003u ^ std::hash<long long>()(d_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    static constexpr long long kMin = std::numeric_limits<long long>::min();

    static mpz_class mpz_from_(long long v) {
        mpz_class z;
        if (v >= 0) {
            mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(v));
        } else {
            mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(-(v + 1)) + 1ul);
            mpz_neg(z.get_mpz_t(), z.get_mpz_t());
        }
        return z;
    }
    static bool fits_(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != mpz_from_(kMin); }

    void promote_() {
        big_ = std::make_unique<mpq_class>(mpz_from_(n_), mpz_from_(d_));
        big_->canonicalize();
    }
    void set_big_(mpq_class q) {
        q.canonicalize();
        if (fits_(q.get_num()) && fits_(q.get_den())) {
            n_ = q.get_num().get_si();
            d_ = q.get_den().get_si();
            big_.reset();
        } else {
            big_ = std::make_unique<mpq_class>(std::move(q));
        }
    }
    void set_small_(long long n, long long d) {
        if (n == kMin || d == kMin) {
            set_big_(mpq_class(mpz_from_(n), mpz_from_(d)));
            return;
        }
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        n_ = n;
        d_ = d;
        big_.reset();
    }

    long long n_ = 0;
    long long d_ = 1;
    std::unique_ptr<mpq_class> big_;
};

inline Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    set_small_(n, d);
}

inline Rational Rational::parse(const std::string& s) {
    mpq_class q(s, 10);
    Rational r;
    r.set_big_(q);
    return r;
}

inline Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational");
    if (big_) return Rational(1 / *big_);
    Rational r;
    if (n_ < 0) {
        r.set_small_(-d_, -n_);
    } else {
        r.n_ = d_;
        r.d_ = n_;
    }
    return r;
}

inline Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        long long num;
        if (d_ == o.d_) {
            if (!__builtin_add_overflow(n_, o.n_, &num)) {
                set_small_(num, d_);
                return *this;
            }
        } else {
            long long g = std::gcd(d_, o.d_);
            long long a, b, den;
            if (!__builtin_mul_overflow(n_, o.d_ / g, &a) && !__builtin_mul_overflow(o.n_, d_ / g, &b) &&
                !__builtin_add_overflow(a, b, &num) && !__builtin_mul_overflow(d_, o.d_ / g, &den)) {
                set_small_(num, den);
                return *this;
            }
        }
    }
    set_big_(to_mpq() + o.to_mpq());
    return *this;
}

inline Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (n_ == 0 || o.n_ == 0) {
            n_ = 0;
            d_ = 1;
            return *this;
        }
        long long g1 = std::gcd(n_, o.d_);
        long long g2 = std::gcd(o.n_, d_);
        long long num, den;
        if (!__builtin_mul_overflow(n_ / g1, o.n_ / g2, &num) && !__builtin_mul_overflow(d_ / g2, o.d_ / g1, &den) &&
            num != kMin) {
            n_ = num;
            d_ = den;
            return *this;
        }
    }
    set_big_(to_mpq() * o.to_mpq());
    return *this;
}

}  // namespace tyv

template <>
struct std::hash<tyv::Rational> {
    std::size_t operator()(const tyv::Rational& q) const { return q.hash(); }
};
