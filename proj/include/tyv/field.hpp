#pragma once

// The coefficient field K = Q(sqrt2, sqrt3), stored over the basis
// {1, sqrt2, sqrt3, sqrt6}.

#include "tyv/rational.hpp"

#include <array>
#include <optional>
#include <string>

namespace tyv {

class K {
public:
    K() = default;
    K(long long n) { c_[0] = Rational(n); }
    K(const Rational& q) { c_[0] = q; }
    K(Rational a, Rational b, Rational c, Rational d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static K sqrt2() { return K(0, 1, 0, 0); }
    static K sqrt3() { return K(0, 0, 1, 0); }
    static K sqrt6() { return K(0, 0, 0, 1); }

    /// Square root of a positive rational, if it lies in K.
    static std::optional<K> sqrt_of(const Rational& q);

    const Rational& operator[](int i) const { return c_[i]; }
    bool is_zero() const { return c_[0].is_zero() && is_rational(); }
    bool is_one() const { return c_[0].is_one() && is_rational(); }
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

    K operator-() const { return K(-c_[0], -c_[1], -c_[2], -c_[3]); }
    K& operator+=(const K& o) {
        for (int i = 0; i < 4; ++i)
            if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
        return *this;
    }
    K& operator-=(const K& o) {
        for (int i = 0; i < 4; ++i)
            if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
        return *this;
    }
    K& operator*=(const K& o);
    K& operator*=(const Rational& q) {
        for (auto& x : c_)
            if (!x.is_zero()) x *= q;
        return *this;
    }
    K& operator/=(const K& o) { return *this *= o.inverse(); }
    K inverse() const;

    friend K operator+(K a, const K& b) { return a += b; }
    friend K operator-(K a, const K& b) { return a -= b; }
    friend K operator*(K a, const K& b) { return a *= b; }
    friend K operator/(K a, const K& b) { return a /= b; }
    friend bool operator==(const K& a, const K& b) { return a.c_ == b.c_; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const K& x) { return os << x.str(); }

private:
    // flips the sign of sqrt2 (and sqrt6)
    K conj2_() const { return K(c_[0], -c_[1], c_[2], -c_[3]); }
    K conj3_() const { return K(c_[0], c_[1], -c_[2], -c_[3]); }

    std::array<Rational, 4> c_{};
};

inline K& K::operator*=(const K& o) {
    if (o.is_rational()) return *this *= o.c_[0];
    if (is_rational()) {
        Rational q = c_[0];
        *this = o;
        return *this *= q;
    }
    const auto& a = c_;
    const auto& b = o.c_;
    // 1, r2, r3, r6 with r2*r2=2, r3*r3=3, r6*r6=6, r2*r3=r6, r2*r6=2r3, r3*r6=3r2
    Rational e0 = a[0] * b[0] + Rational(2) * a[1] * b[1] + Rational(3) * a[2] * b[2] + Rational(6) * a[3] * b[3];
    Rational e1 = a[0] * b[1] + a[1] * b[0] + Rational(3) * (a[2] * b[3] + a[3] * b[2]);
    Rational e2 = a[0] * b[2] + a[2] * b[0] + Rational(2) * (a[1] * b[3] + a[3] * b[1]);
    Rational e3 = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
    c_ = {std::move(e0), std::move(e1), std::move(e2), std::move(e3)};
    return *this;
}

inline K K::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in K");
    if (is_rational()) return K(c_[0].inverse());
    // x * conj2(x) lies in Q(sqrt3); multiply by its sqrt3-conjugate to land in Q.
    K y = *this * conj2_();
    K z = y * y.conj3_();
    return conj2_() * y.conj3_() * K(z.c_[0].inverse());
}

inline std::optional<K> K::sqrt_of(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    if (q.is_zero()) return K();
    const int radicals[4] = {1, 2, 3, 6};
    for (int i = 0; i < 4; ++i) {
        // sqrt(q) = sqrt(q/m) * sqrt(m) with q/m a perfect square
        mpq_class t = q.to_mpq() / radicals[i];
        mpz_class num = t.get_num(), den = t.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) continue;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        K out;
        out.c_[i] = Rational(mpq_class(rn, rd));
        return out;
    }
    return std::nullopt;
}

inline std::string K::str() const {
    static const char* names[4] = {"", "sqrt2", "sqrt3", "sqrt6"};
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) continue;
        std::string t = c_[i].str();
        bool neg = t[0] == '-';
        if (neg) t.erase(0, 1);
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        if (i == 0) s += t;
        else if (t == "1") s += names[i];
        else s += t + "*" + names[i];
    }
    return s.empty() ? "0" : s;
}

}  // namespace tyv
