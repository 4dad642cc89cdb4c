#pragma once

// Truncated series sum_{k=0}^{N} c_k u^{-k} with coefficients in a possibly
// noncommutative ring. Results carry the smaller of the operand precisions.

#include "tyv/pbw.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tyv {

template <class T>
struct SeriesRing;

template <>
struct SeriesRing<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static Rational inverse(const Rational& x) { return x.inverse(); }
    static Rational scale(const Rational& x, const Rational& q) { return x * q; }
};

template <>
struct SeriesRing<K> {
    static K zero(const K&) { return K(); }
    static K one(const K&) { return K(1); }
    static K inverse(const K& x) { return x.inverse(); }
    static K scale(const K& x, const Rational& q) { return x * K(q); }
};

template <class C>
struct SeriesRing<Element<C>> {
    static Element<C> zero(const Element<C>& x) { return x.algebra()->zero(); }
    static Element<C> one(const Element<C>& x) { return x.algebra()->one(); }
    static Element<C> inverse(const Element<C>& x) {
        if (x.size() != 1 || !x.terms().begin()->first.empty())
            throw std::domain_error("series inverse needs a scalar leading coefficient");
        return x.algebra()->scalar(C(1) / x.terms().begin()->second);
    }
    static Element<C> scale(const Element<C>& x, const Rational& q) { return x * C(q); }
};

template <class T>
class TruncatedSeries {
public:
    using Ring = SeriesRing<T>;

    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series needs at least c_0");
    }
    /// 1 + 0 u^{-1} + ... to the given order, with the ring taken from `proto`.
    static TruncatedSeries constant(const T& value, int order) {
        std::vector<T> c(order + 1, Ring::zero(value));
        c[0] = value;
        return TruncatedSeries(std::move(c));
    }
    template <class Fn>
    static TruncatedSeries from(int order, Fn&& coeff) {
        std::vector<T> c;
        for (int k = 0; k <= order; ++k) c.push_back(coeff(k));
        return TruncatedSeries(std::move(c));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int k) const { return c_.at(k); }
    T& operator[](int k) { return c_.at(k); }
    const std::vector<T>& coefficients() const { return c_; }

    TruncatedSeries truncate(int n) const {
        if (n > order()) throw std::invalid_argument("cannot extend a truncated series");
        return TruncatedSeries(std::vector<T>(c_.begin(), c_.begin() + n + 1));
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        c_.resize(std::min(c_.size(), o.c_.size()), Ring::zero(c_[0]));
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        c_.resize(std::min(c_.size(), o.c_.size()), Ring::zero(c_[0]));
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& x : r.c_) x = Ring::scale(x, Rational(-1));
        return r;
    }
    TruncatedSeries scaled(const Rational& q) const {
        TruncatedSeries r = *this;
        for (auto& x : r.c_) x = Ring::scale(x, q);
        return r;
    }

    /// Cauchy product, keeping the order of factors.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order(), b.order());
        std::vector<T> c(n + 1, Ring::zero(a.c_[0]));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return TruncatedSeries(std::move(c));
    }

    /// Two-sided inverse; c_0 must be an invertible scalar.
    TruncatedSeries invert() const {
        T s = Ring::inverse(c_[0]);
        std::vector<T> b(c_.size(), Ring::zero(c_[0]));
        b[0] = s;
        for (std::size_t k = 1; k < c_.size(); ++k) {
            T acc = Ring::zero(c_[0]);
            for (std::size_t j = 1; j <= k; ++j) acc = acc + c_[j] * b[k - j];
            b[k] = Ring::scale(s * acc, Rational(-1));
        }
        return TruncatedSeries(std::move(b));
    }

    /// f(-u)
    TruncatedSeries negate_arg() const {
        TruncatedSeries r = *this;
        for (std::size_t k = 1; k < c_.size(); k += 2) r.c_[k] = Ring::scale(r.c_[k], Rational(-1));
        return r;
    }

    /// f(u + a), re-expanded in u^{-1}.
    TruncatedSeries shift_arg(const Rational& a) const {
        std::vector<T> r(c_.size(), Ring::zero(c_[0]));
        r[0] = c_[0];
        // (u+a)^{-k} = sum_j (-1)^j binom(k+j-1, j) a^j u^{-k-j}
        for (int k = 1; k <= order(); ++k) {
            Rational coef(1), apow(1);
            for (int j = 0; k + j <= order(); ++j) {
                if (j > 0) {
                    coef = coef * Rational(k + j - 1) / Rational(j);
                    apow = apow * a;
                }
                Rational f = coef * apow;
                if (j % 2) f = -f;
                if (!f.is_zero()) r[k + j] = r[k + j] + Ring::scale(c_[k], f);
            }
        }
        return TruncatedSeries(std::move(r));
    }

    /// u * f(u) - c_0 u, i.e. the series sum_k c_{k+1} u^{-k}; loses one order.
    TruncatedSeries times_u_drop_pole() const {
        std::vector<T> r(c_.begin() + 1, c_.end());
        if (r.empty()) throw std::invalid_argument("series too short");
        return TruncatedSeries(std::move(r));
    }

private:
    std::vector<T> c_;
};

/// Expansion of Xi(u + d/2) Xi^-(u - d/2) / (Xi(u - d/2) Xi^-(u + d/2)) with
/// Xi(u) = prod (u - a_k) and Xi^-(u) = (-1)^deg Xi(-u) = prod (u + a_k).
inline TruncatedSeries<K> iweight_eigenvalue(const std::vector<K>& roots, const Rational& d, int order) {
    auto linear = [&](const K& c) {  // (u - c)/u = 1 - c u^{-1}
        std::vector<K> v(order + 1, K());
        v[0] = K(1);
        if (order >= 1) v[1] = -c;
        return TruncatedSeries<K>(std::move(v));
    };
    K half(d / Rational(2));
    TruncatedSeries<K> num = TruncatedSeries<K>::constant(K(1), order);
    TruncatedSeries<K> den = num;
    for (const K& a : roots) {
        num = num * linear(a - half) * linear(half - a);
        den = den * linear(a + half) * linear(-a - half);
    }
    return num * den.invert();
}

}  // namespace tyv
