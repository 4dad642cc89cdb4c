#pragma once

// The Yangian of sl2 in Drinfeld generators x_r^-, xi_r, x_r^+ (r <= R),
// ordered x^- < xi < x^+ and by r within each family, with (a,a) = 2.
// Brackets are forced by the defining relations; every recursion step
// lowers the total index of the unresolved bracket.

#include "tyv/pbw.hpp"
#include "tyv/series.hpp"

#include <deque>
#include <map>
#include <optional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace tyv {

using Q = Rational;
using QElem = Element<Q>;
using QSeries = TruncatedSeries<QElem>;

enum class DFam { Minus = 0, Xi = 1, Plus = 2 };

class DrinfeldRule : public CommutatorRule<Q> {
public:
    explicit DrinfeldRule(int R) : R_(R) {}

    Gen id(DFam f, int r) const {
        if (r < 0 || r > R_) throw BudgetExceeded("Drinfeld index " + std::to_string(r) + " exceeds budget " + std::to_string(R_));
        return static_cast<Gen>(static_cast<int>(f) * (R_ + 1) + r);
    }
    DFam fam(Gen g) const { return static_cast<DFam>(g / (R_ + 1)); }
    int idx(Gen g) const { return g % (R_ + 1); }

    QElem bracket(const Algebra<Q>& alg, Gen a, Gen b) const override {
        DFam fa = fam(a), fb = fam(b);
        int r = idx(a), s = idx(b);
        if (fa == DFam::Plus && fb == DFam::Minus) return alg.gen(id(DFam::Xi, r + s));
        if (fa == DFam::Xi && fb == DFam::Minus) return xi_x(alg, r, s, -1);
        if (fa == DFam::Plus && fb == DFam::Xi) return -xi_x(alg, s, r, +1);
        if (fa == DFam::Xi) return alg.zero();
        return x_x(alg, r, s, fa == DFam::Plus ? +1 : -1);
    }

private:
    // [xi_r, x_s^e]:  [xi_0, x_s] = 2e x_s,  [xi_{r}, x_s] = [xi_{r-1}, x_{s+1}] + e {xi_{r-1}, x_s}
    QElem xi_x(const Algebra<Q>& alg, int r, int s, int e) const {
        DFam xf = e > 0 ? DFam::Plus : DFam::Minus;
        if (r == 0) return alg.gen(id(xf, s)) * Q(2 * e);
        QElem out = alg.bracket(id(DFam::Xi, r - 1), id(xf, s + 1));
        out += anticommutator(alg.gen(id(DFam::Xi, r - 1)), alg.gen(id(xf, s))) * Q(e);
        return out;
    }
    // [x_r^e, x_s^e] for r > s:  [x_r, x_s] = [x_{r-1}, x_{s+1}] + e {x_{r-1}, x_s},
    // closed by [x_c, x_c] = 0 and [x_{s+1}, x_s] = e x_s^2.
    QElem x_x(const Algebra<Q>& alg, int r, int s, int e) const {
        DFam xf = e > 0 ? DFam::Plus : DFam::Minus;
        QElem xs = alg.gen(id(xf, s));
        if (r == s + 1) return xs * xs * Q(e);
        QElem out = anticommutator(alg.gen(id(xf, r - 1)), xs) * Q(e);
        if (r - 1 != s + 1) out += alg.bracket(id(xf, r - 1), id(xf, s + 1));
        return out;
    }

    int R_;
};

class DrinfeldSl2 {
public:
    explicit DrinfeldSl2(int R) : R_(R) {
        auto rule = std::make_unique<DrinfeldRule>(R);
        rule_ = rule.get();
        std::vector<GeneratorInfo> gens;
        const char* names[3] = {"x-", "xi", "x+"};
        for (int f = 0; f < 3; ++f)
            for (int r = 0; r <= R; ++r) gens.push_back({std::string(names[f]) + std::to_string(r), r, {f - 1}});
        alg_ = std::make_shared<Algebra<Q>>(std::move(gens), std::move(rule));
    }

    int budget() const { return R_; }
    const Algebra<Q>& algebra() const { return *alg_; }
    std::shared_ptr<const Algebra<Q>> algebra_ptr() const { return alg_; }
    const DrinfeldRule& rule() const { return *rule_; }

    QElem xp(int r) const { return alg_->gen(rule_->id(DFam::Plus, r)); }
    QElem xm(int r) const { return alg_->gen(rule_->id(DFam::Minus, r)); }
    QElem xi(int r) const { return alg_->gen(rule_->id(DFam::Xi, r)); }
    QElem one() const { return alg_->one(); }
    QElem zero() const { return alg_->zero(); }

    /// xi(u) = 1 + sum xi_r u^{-r-1}, x^+-(u) = sum x_r u^{-r-1}
    TruncatedSeries<QElem> xi_series(int order) const {
        return TruncatedSeries<QElem>::from(order, [&](int k) { return k == 0 ? one() : xi(k - 1); });
    }
    TruncatedSeries<QElem> xp_series(int order) const {
        return TruncatedSeries<QElem>::from(order, [&](int k) { return k == 0 ? zero() : xp(k - 1); });
    }
    TruncatedSeries<QElem> xm_series(int order) const {
        return TruncatedSeries<QElem>::from(order, [&](int k) { return k == 0 ? zero() : xm(k - 1); });
    }

    int count(const Word& w, DFam f) const {
        int n = 0;
        for (Gen g : w) n += rule_->fam(g) == f;
        return n;
    }
    /// weight in units of alpha
    int weight(const Word& w) const { return count(w, DFam::Plus) - count(w, DFam::Minus); }

    /// Anti-involution xi_r -> xi_r, x_r^+- -> x_r^-+.
    QElem tau(const QElem& x) const {
        QElem out = zero();
        for (const auto& [w, c] : x.terms()) {
            QElem t = alg_->scalar(c);
            for (auto it = w.rbegin(); it != w.rend(); ++it) t = alg_->multiply_gen(t, tau_gen(*it));
            out += t;
        }
        return out;
    }
    Gen tau_gen(Gen g) const {
        DFam f = rule_->fam(g);
        int r = rule_->idx(g);
        if (f == DFam::Xi) return g;
        return rule_->id(f == DFam::Plus ? DFam::Minus : DFam::Plus, r);
    }

private:
    int R_;
    const DrinfeldRule* rule_;
    std::shared_ptr<Algebra<Q>> alg_;
};

/// The coproduct on generators: primitive on xi_0 and x_0^+-, the degree-one
/// formulas, then x_{r+1}^+- = +-1/2 [xi~_1, x_r^+-] and xi_n = [x_1^+, x_{n-1}^-].
class DrinfeldCoproduct {
public:
    explicit DrinfeldCoproduct(std::shared_ptr<const DrinfeldSl2> y) : y_(y), ts_(y->algebra_ptr()) {}

    const TensorSquare<Q>& tensor() const { return ts_; }
    const DrinfeldSl2& yangian() const { return *y_; }

    const QElem& gen(DFam f, int r) const {
        std::lock_guard lock(mu_);
        auto key = std::make_pair(static_cast<int>(f), r);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        QElem v = compute_(f, r);
        return memo_.emplace(key, std::move(v)).first->second;
    }
    QElem apply(const QElem& x) const {
        const DrinfeldRule& rule = y_->rule();
        return apply_hom(x, ts_.algebra(), [&](Gen g) { return gen(rule.fam(g), rule.idx(g)); },
                         std::function<Q(const Q&)>([](const Q& c) { return c; }));
    }

private:
    QElem prim_(const QElem& x) const { return ts_.left(x) + ts_.right(x); }
    QElem compute_(DFam f, int r) const {
        const DrinfeldSl2& y = *y_;
        if (r == 0) {
            return prim_(f == DFam::Xi ? y.xi(0) : f == DFam::Plus ? y.xp(0) : y.xm(0));
        }
        if (f == DFam::Xi && r == 1) {
            // xi_1 (x) 1 + 1 (x) xi_1 + xi_0 (x) xi_0 - 2 x_0^- (x) x_0^+
            return prim_(y.xi(1)) + ts_.tensor(y.xi(0), y.xi(0)) - ts_.tensor(y.xm(0), y.xp(0)) * Q(2);
        }
        if (f == DFam::Xi) return commutator(gen_unlocked_(DFam::Plus, 1), gen_unlocked_(DFam::Minus, r - 1));
        if (r == 1) {
            if (f == DFam::Plus)  // x_1^+ (x) 1 + 1 (x) x_1^+ + xi_0 (x) x_0^+ - x_0^- (x) [x_0^+, x_0^+]
                return prim_(y.xp(1)) + ts_.tensor(y.xi(0), y.xp(0));
            return prim_(y.xm(1)) + ts_.tensor(y.xm(0), y.xi(0));
        }
        QElem d0 = gen_unlocked_(DFam::Xi, 0);
        QElem xt = gen_unlocked_(DFam::Xi, 1) - d0 * d0 * Q(1, 2);
        QElem prev = gen_unlocked_(f, r - 1);
        return commutator(xt, prev) * Q(f == DFam::Plus ? 1 : -1, 2);
    }
    // recursion while the memo lock is held by the caller
    const QElem& gen_unlocked_(DFam f, int r) const {
        auto key = std::make_pair(static_cast<int>(f), r);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        QElem v = compute_(f, r);
        return memo_.emplace(key, std::move(v)).first->second;
    }

    std::shared_ptr<const DrinfeldSl2> y_;
    TensorSquare<Q> ts_;
    mutable std::recursive_mutex mu_;
    mutable std::map<std::pair<int, int>, QElem> memo_;
};

/// b_r and h_{2k+1} of the twisted Yangian inside Y(sl2):
/// b_0 = x_0^+ - x_0^-, h_1 = 2 xi_1 - xi_0^2 + 2 (x_0^+)^2, b_{r+1} = 1/4 [h_1, b_r],
/// h_k = [b_0, b_k] + sum_{r+s=k-1} b_r b_s.
class TwistedSl2 {
public:
    explicit TwistedSl2(std::shared_ptr<const DrinfeldSl2> y) : y_(y) {}

    const DrinfeldSl2& yangian() const { return *y_; }

    const QElem& b(int r) const {
        std::lock_guard lock(mu_);
        return b_unlocked_(r);
    }
    /// h_k for k >= -1; h_{-1} = 1, even k gives 0 by definition.
    QElem h(int k) const {
        if (k == -1) return y_->one();
        if (k < -1 || k % 2 == 0) return y_->zero();
        std::lock_guard lock(mu_);
        return h_raw_unlocked_(k);
    }
    /// [b_0, b_k] + sum b_r b_s for any k >= 1, including even k where it should vanish.
    QElem h_raw(int k) const {
        std::lock_guard lock(mu_);
        return h_raw_unlocked_(k);
    }

    /// b(u) = sum b_r u^{-r-1};  h(u) = 1 + sum h_{2r+1} u^{-2r-2}
    TruncatedSeries<QElem> b_series(int order) const {
        return TruncatedSeries<QElem>::from(order, [&](int k) { return k == 0 ? y_->zero() : b(k - 1); });
    }
    TruncatedSeries<QElem> h_series(int order) const {
        return TruncatedSeries<QElem>::from(order, [&](int k) { return k == 0 ? y_->one() : h(k - 1); });
    }

private:
    const QElem& b_unlocked_(int r) const {
        while (static_cast<int>(b_.size()) <= r) {
            int n = static_cast<int>(b_.size());
            if (n == 0) {
                b_.push_back(y_->xp(0) - y_->xm(0));
            } else {
                if (!h1_) h1_ = y_->xi(1) * Q(2) - y_->xi(0) * y_->xi(0) + y_->xp(0) * y_->xp(0) * Q(2);
                b_.push_back(commutator(*h1_, b_[n - 1]) * Q(1, 4));
            }
        }
        return b_[r];
    }
    QElem h_raw_unlocked_(int k) const {
        auto it = h_.find(k);
        if (it != h_.end()) return it->second;
        QElem v = commutator(b_unlocked_(0), b_unlocked_(k));
        for (int r = 0; r <= k - 1; ++r) v += b_unlocked_(r) * b_unlocked_(k - 1 - r);
        return h_.emplace(k, std::move(v)).first->second;
    }

    std::shared_ptr<const DrinfeldSl2> y_;
    mutable std::recursive_mutex mu_;
    mutable std::deque<QElem> b_;
    mutable std::optional<QElem> h1_;
    mutable std::map<int, QElem> h_;
};

/// Delta(b_r) and Delta(h_k) via Delta(b_{r+1}) = 1/4 [Delta(h_1), Delta(b_r)].
class TwistedCoproduct {
public:
    TwistedCoproduct(std::shared_ptr<const TwistedSl2> tw, std::shared_ptr<const DrinfeldCoproduct> dc)
        : tw_(tw), dc_(dc) {}

    const DrinfeldCoproduct& coproduct() const { return *dc_; }

    const QElem& b(int r) const {
        std::lock_guard lock(mu_);
        while (static_cast<int>(b_.size()) <= r) {
            int n = static_cast<int>(b_.size());
            if (n == 0) {
                b_.push_back(dc_->apply(tw_->b(0)));
            } else {
                if (!h1_) h1_ = dc_->apply(tw_->h(1));
                b_.push_back(commutator(*h1_, b_[n - 1]) * Q(1, 4));
            }
        }
        return b_[r];
    }
    QElem h(int k) const {
        const auto& ts = dc_->tensor();
        if (k == -1) return ts.algebra().one();
        if (k < -1 || k % 2 == 0) return ts.algebra().zero();
        {
            std::lock_guard lock(mu_);
            auto it = h_.find(k);
            if (it != h_.end()) return it->second;
        }
        QElem v = commutator(b(0), b(k));
        for (int r = 0; r <= k - 1; ++r) v += b(r) * b(k - 1 - r);
        std::lock_guard lock(mu_);
        return h_.emplace(k, std::move(v)).first->second;
    }

private:
    std::shared_ptr<const TwistedSl2> tw_;
    std::shared_ptr<const DrinfeldCoproduct> dc_;
    mutable std::recursive_mutex mu_;
    mutable std::deque<QElem> b_;
    mutable std::optional<QElem> h1_;
    mutable std::map<int, QElem> h_;
};

}  // namespace tyv
