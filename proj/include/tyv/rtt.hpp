#pragma once

// The RTT Yangian of gl2: generators t_ij^(r), 1 <= r <= M, ordered by
// (r, i, j), with the closed commutator
//   [t_ij^(r), t_kl^(s)] = sum_{a=1}^{min(r,s)} t_kj^(a-1) t_il^(r+s-a) - t_kj^(r+s-a) t_il^(a-1),
// t^(0) = identity. The twisted S-matrix s_ij(u) = t_1i(-u) t_1j(u) + t_2i(-u) t_2j(u)
// and Gauss decompositions of both matrices live here too.

#include "tyv/pbw.hpp"
#include "tyv/series.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace tyv {

using Q = Rational;
using QElem = Element<Q>;
using QSeries = TruncatedSeries<QElem>;

class RttRule : public CommutatorRule<Q> {
public:
    explicit RttRule(int M) : M_(M) {}

    static Gen id(int i, int j, int r) { return static_cast<Gen>((r - 1) * 4 + (i - 1) * 2 + (j - 1)); }
    static int row(Gen g) { return (g % 4) / 2 + 1; }
    static int col(Gen g) { return g % 2 + 1; }
    static int level(Gen g) { return g / 4 + 1; }

    /// t_ij^(r) with t^(0) = delta_ij.
    QElem t(const Algebra<Q>& alg, int i, int j, int r) const {
        if (r == 0) return i == j ? alg.one() : alg.zero();
        if (r < 0) return alg.zero();
        if (r > M_) throw BudgetExceeded("RTT level " + std::to_string(r) + " exceeds budget " + std::to_string(M_));
        return alg.gen(id(i, j, r));
    }

    QElem bracket(const Algebra<Q>& alg, Gen a, Gen b) const override {
        int i = row(a), j = col(a), r = level(a);
        int k = row(b), l = col(b), s = level(b);
        QElem out = alg.zero();
        for (int p = 1; p <= std::min(r, s); ++p) {
            out += t(alg, k, j, p - 1) * t(alg, i, l, r + s - p);
            out -= t(alg, k, j, r + s - p) * t(alg, i, l, p - 1);
        }
        return out;
    }

    int budget() const { return M_; }

private:
    int M_;
};

template <class T>
struct Gauss {
    TruncatedSeries<T> D1, D2, E, F;
};

/// D1 = a11, E = D1^{-1} a12, F = a21 D1^{-1}, D2 = a22 - F D1 E.
template <class T>
Gauss<T> gauss_decompose(const TruncatedSeries<T>& a11, const TruncatedSeries<T>& a12, const TruncatedSeries<T>& a21,
                         const TruncatedSeries<T>& a22) {
    Gauss<T> g;
    g.D1 = a11;
    TruncatedSeries<T> inv = a11.invert();
    g.E = inv * a12;
    g.F = a21 * inv;
    g.D2 = a22 - g.F * g.D1 * g.E;
    return g;
}

class RttGl2 {
public:
    /// Generators up to level M; series accessors up to order N <= M.
    RttGl2(int M) : M_(M) {
        auto rule = std::make_unique<RttRule>(M);
        rule_ = rule.get();
        std::vector<GeneratorInfo> gens;
        for (int r = 1; r <= M; ++r)
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j) {
                    int w = (i == 2 && j == 1) ? 1 : (i == 1 && j == 2) ? -1 : 0;
                    gens.push_back({"t" + std::to_string(i) + std::to_string(j) + "^" + std::to_string(r), r - 1, {w}});
                }
        alg_ = std::make_shared<Algebra<Q>>(std::move(gens), std::move(rule));
    }

    int budget() const { return M_; }
    const Algebra<Q>& algebra() const { return *alg_; }
    std::shared_ptr<const Algebra<Q>> algebra_ptr() const { return alg_; }
    const RttRule& rule() const { return *rule_; }

    QElem t(int i, int j, int r) const { return rule_->t(*alg_, i, j, r); }
    QSeries t_series(int i, int j, int order) const {
        return QSeries::from(order, [&](int r) { return t(i, j, r); });
    }
    /// weight in units of alpha: t21 counts +1, t12 counts -1
    int weight(const Word& w) const {
        int n = 0;
        for (Gen g : w) {
            int i = RttRule::row(g), j = RttRule::col(g);
            n += (i == 2 && j == 1) - (i == 1 && j == 2);
        }
        return n;
    }

    /// A product of generator words kept as an unnormalized formal sum, for
    /// comparing quadratic expressions without using the commutator rule.
    using Formal = std::map<Word, Q>;
    Formal formal_t(int i, int j, int r) const {
        Formal f;
        if (r == 0) {
            if (i == j) f[Word()] = Q(1);
        } else if (r > 0) {
            f[Word(1, RttRule::id(i, j, r))] = Q(1);
        }
        return f;
    }
    static Formal formal_mul(const Formal& a, const Formal& b) {
        Formal out;
        for (const auto& [w1, c1] : a)
            for (const auto& [w2, c2] : b) {
                Q& v = out[w1 + w2];
                v += c1 * c2;
            }
        return clean(std::move(out));
    }
    static Formal formal_add(Formal a, const Formal& b, const Q& c) {
        for (const auto& [w, v] : b) a[w] += v * c;
        return clean(std::move(a));
    }
    static Formal clean(Formal f) {
        for (auto it = f.begin(); it != f.end();) {
            if (it->second.is_zero()) it = f.erase(it);
            else ++it;
        }
        return f;
    }
    QElem evaluate(const Formal& f) const {
        QElem out = alg_->zero();
        for (const auto& [w, c] : f) out += alg_->word(w) * c;
        return out;
    }

    /// The closed form of [t_ij^(r), t_kl^(s)] as a formal quadratic expression.
    Formal closed_form(int i, int j, int r, int k, int l, int s) const {
        Formal out;
        for (int p = 1; p <= std::min(r, s); ++p) {
            out = formal_add(out, formal_mul(formal_t(k, j, p - 1), formal_t(i, l, r + s - p)), Q(1));
            out = formal_add(out, formal_mul(formal_t(k, j, r + s - p), formal_t(i, l, p - 1)), Q(-1));
        }
        return out;
    }
    /// The same commutator obtained by unrolling the coefficient recursion
    /// [t^(r+1), t^(s)] = [t^(r), t^(s+1)] + t_kj^(r) t_il^(s) - t_kj^(s) t_il^(r)
    /// down to [t^(0), .] = 0.
    Formal brute_force(int i, int j, int r, int k, int l, int s) const {
        Formal out;
        for (int m = 0; m + 1 <= r; ++m) {
            int a = r - 1 - m, b = s + m;  // [t^(a+1), t^(b)] contributes t_kj^(a) t_il^(b) - t_kj^(b) t_il^(a)
            out = formal_add(out, formal_mul(formal_t(k, j, a), formal_t(i, l, b)), Q(1));
            out = formal_add(out, formal_mul(formal_t(k, j, b), formal_t(i, l, a)), Q(-1));
        }
        return out;
    }

private:
    int M_;
    const RttRule* rule_;
    std::shared_ptr<Algebra<Q>> alg_;
};

/// Series data of one RTT engine at a fixed order N: Gauss decompositions of
/// T(u) and S(u), determinants, and the Drinfeld currents under the half shift.
class RttSeries {
public:
    RttSeries(std::shared_ptr<const RttGl2> rtt, int N) : rtt_(rtt), N_(N) {
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) t_[i - 1][j - 1] = rtt->t_series(i, j, N);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                s_[i - 1][j - 1] = t(1, i).negate_arg() * t(1, j) + t(2, i).negate_arg() * t(2, j);
        G_ = gauss_decompose(t(1, 1), t(1, 2), t(2, 1), t(2, 2));
        g_ = gauss_decompose(s(1, 1), s(1, 2), s(2, 1), s(2, 2));
        Q mhalf(-1, 2);
        xp_ = G_.F.shift_arg(mhalf);
        xm_ = G_.E.shift_arg(mhalf);
        xi_ = G_.D1.shift_arg(mhalf).invert() * G_.D2.shift_arg(mhalf);
        b_ = g_.F.shift_arg(mhalf);
        h_ = g_.D1.shift_arg(mhalf).invert() * g_.D2.shift_arg(mhalf);
    }

    const RttGl2& rtt() const { return *rtt_; }
    int order() const { return N_; }

    const QSeries& t(int i, int j) const { return t_[i - 1][j - 1]; }
    const QSeries& s(int i, int j) const { return s_[i - 1][j - 1]; }
    const Gauss<QElem>& T() const { return G_; }
    const Gauss<QElem>& S() const { return g_; }

    /// t11(u) t22(u-1) - t21(u) t12(u-1)
    QSeries qdet() const { return t(1, 1) * t(2, 2).shift_arg(Q(-1)) - t(2, 1) * t(1, 2).shift_arg(Q(-1)); }
    /// s11(-u) s22(u-1) - s12(-u) s12(u-1)
    QSeries sdet() const {
        return s(1, 1).negate_arg() * s(2, 2).shift_arg(Q(-1)) - s(1, 2).negate_arg() * s(1, 2).shift_arg(Q(-1));
    }

    /// x^+(u) = F(u - 1/2), x^-(u) = E(u - 1/2), xi(u) = D1(u - 1/2)^{-1} D2(u - 1/2)
    const QSeries& xp_series() const { return xp_; }
    const QSeries& xm_series() const { return xm_; }
    const QSeries& xi_series() const { return xi_; }
    /// b(u) = f(u - 1/2), h(u) = d1(u - 1/2)^{-1} d2(u - 1/2)
    const QSeries& b_series() const { return b_; }
    const QSeries& h_series() const { return h_; }

private:
    std::shared_ptr<const RttGl2> rtt_;
    int N_;
    std::array<std::array<QSeries, 2>, 2> t_, s_;
    Gauss<QElem> G_, g_;
    QSeries xp_, xm_, xi_, b_, h_;
};

/// Delta(t_ij(u)) = sum_a t_ia(u) (x) t_aj(u) on the tensor square.
class RttCoproduct {
public:
    explicit RttCoproduct(std::shared_ptr<const RttGl2> rtt) : rtt_(rtt), ts_(rtt->algebra_ptr()) {}

    const TensorSquare<Q>& tensor() const { return ts_; }

    const QElem& gen(Gen g) const {
        std::lock_guard lock(mu_);
        auto it = memo_.find(g);
        if (it != memo_.end()) return it->second;
        int i = RttRule::row(g), j = RttRule::col(g), r = RttRule::level(g);
        QElem v = ts_.algebra().zero();
        for (int a = 1; a <= 2; ++a)
            for (int p = 0; p <= r; ++p) v += ts_.tensor(rtt_->t(i, a, p), rtt_->t(a, j, r - p));
        return memo_.emplace(g, std::move(v)).first->second;
    }
    QElem apply(const QElem& x) const {
        return apply_hom(x, ts_.algebra(), [&](Gen g) { return gen(g); },
                         std::function<Q(const Q&)>([](const Q& c) { return c; }));
    }
    QSeries apply(const QSeries& f) const {
        return QSeries::from(f.order(), [&](int k) { return apply(f[k]); });
    }
    /// sum_{i+j=k} a_i (x) b_j
    QSeries tensor(const QSeries& a, const QSeries& b) const {
        int n = std::min(a.order(), b.order());
        return QSeries::from(n, [&](int k) {
            QElem v = ts_.algebra().zero();
            for (int i = 0; i <= k; ++i) v += ts_.tensor(a[i], b[k - i]);
            return v;
        });
    }

private:
    std::shared_ptr<const RttGl2> rtt_;
    TensorSquare<Q> ts_;
    mutable std::mutex mu_;
    mutable std::map<Gen, QElem> memo_;
};

}  // namespace tyv
