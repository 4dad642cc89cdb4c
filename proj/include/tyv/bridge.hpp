#pragma once

// RTT-side checks and the bridge to the Drinfeld engine: x^+(u) = F(u - 1/2),
// x^-(u) = E(u - 1/2), xi(u) = D1(u - 1/2)^{-1} D2(u - 1/2), and for the
// twisted side b(u) = f(u - 1/2), h(u) = d1(u - 1/2)^{-1} d2(u - 1/2).

#include "tyv/check.hpp"
#include "tyv/rank_one.hpp"
#include "tyv/rtt.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace tyv {

/// The RTT engine seen through the bridge, as a rank-one model.
class RttModel {
public:
    explicit RttModel(int N)
        : rtt_(std::make_shared<const RttGl2>(2 * N + 2)),
          s_(std::make_shared<const RttSeries>(rtt_, N)),
          dc_(std::make_shared<const RttCoproduct>(rtt_)) {}

    const RttGl2& rtt() const { return *rtt_; }
    std::shared_ptr<const RttGl2> rtt_ptr() const { return rtt_; }
    const RttSeries& series() const { return *s_; }
    const RttCoproduct& coproduct() const { return *dc_; }

    const Algebra<Q>& algebra() const { return rtt_->algebra(); }
    int top() const { return s_->order() - 1; }
    QElem xp(int r) const { return s_->xp_series()[r + 1]; }
    QElem xm(int r) const { return s_->xm_series()[r + 1]; }
    QElem xi(int r) const { return s_->xi_series()[r + 1]; }
    QElem b(int r) const { return s_->b_series()[r + 1]; }
    QElem h(int k) const {
        if (k == -1) return algebra().one();
        if (k < -1 || k % 2 == 0) return algebra().zero();
        return s_->h_series()[k + 1];
    }
    QElem h_raw(int k) const { return k == -1 ? algebra().one() : k < -1 ? algebra().zero() : s_->h_series()[k + 1]; }
    int weight(const Word& w) const { return rtt_->weight(w); }

    const TensorSquare<Q>& ts() const { return dc_->tensor(); }
    QElem delta_b(int r) const { return delta_("b", r, [&] { return b(r); }); }
    QElem delta_h(int k) const { return delta_("h", k, [&] { return h(k); }); }

private:
    template <class Fn>
    QElem delta_(const std::string& tag, int k, Fn&& value) const {
        {
            std::lock_guard lock(mu_);
            auto it = memo_.find({tag, k});
            if (it != memo_.end()) return it->second;
        }
        QElem v = dc_->apply(value());
        std::lock_guard lock(mu_);
        return memo_.emplace(std::make_pair(tag, k), std::move(v)).first->second;
    }

    std::shared_ptr<const RttGl2> rtt_;
    std::shared_ptr<const RttSeries> s_;
    std::shared_ptr<const RttCoproduct> dc_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<std::string, int>, QElem> memo_;
};

namespace rttc {

inline std::string idx4(int i, int j, int k, int l) {
    return "t" + std::to_string(i) + std::to_string(j) + ",t" + std::to_string(k) + std::to_string(l);
}

}  // namespace rttc

/// Closed commutator against the unrolled recursion, formally and in normal form.
inline Outcome rtt_closed_form(const RttGl2& rtt, int D) {
    Tally t;
    const Algebra<Q>& alg = rtt.algebra();
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    for (int r = 1; r <= D; ++r)
                        for (int s = 1; s <= D; ++s) {
                            std::string lbl = rttc::idx4(i, j, k, l) + "," + r1::rs(r, s);
                            auto closed = rtt.closed_form(i, j, r, k, l, s);
                            auto brute = rtt.brute_force(i, j, r, k, l, s);
                            t.expect(closed == brute, "formal mismatch at " + lbl);
                            const QElem& br = alg.bracket(RttRule::id(i, j, r), RttRule::id(k, l, s));
                            t.expect_equal(br, rtt.evaluate(brute), lbl);
                        }
    // the coefficient recursion itself, read off the RTT relation
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    for (int r = 0; r + 1 <= D; ++r)
                        for (int s = 0; s + 1 <= D; ++s) {
                            QElem lhs = commutator(rtt.t(i, j, r + 1), rtt.t(k, l, s)) - commutator(rtt.t(i, j, r), rtt.t(k, l, s + 1));
                            QElem rhs = rtt.t(k, j, r) * rtt.t(i, l, s) - rtt.t(k, j, s) * rtt.t(i, l, r);
                            t.expect_equal(lhs, rhs, "recursion," + rttc::idx4(i, j, k, l) + "," + r1::rs(r, s));
                        }
    t.expect_equal(commutator(rtt.t(1, 2, 1), rtt.t(2, 1, 1)), rtt.t(1, 1, 1) - rtt.t(2, 2, 1), "[t12,t21]");
    t.expect_zero(commutator(rtt.t(1, 1, 1), rtt.t(2, 2, 1)), "[t11,t22]");
    return t.outcome();
}

/// Jacobi identity on generator triples of level <= D.
inline Outcome rtt_jacobi(const RttGl2& rtt, int D) {
    Tally t;
    std::vector<QElem> g;
    for (int r = 1; r <= D; ++r)
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) g.push_back(rtt.t(i, j, r));
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b)
            for (std::size_t c = b + 1; c < g.size(); ++c) {
                QElem j = commutator(g[a], commutator(g[b], g[c])) + commutator(g[b], commutator(g[c], g[a])) +
                          commutator(g[c], commutator(g[a], g[b]));
                t.expect_zero(j, "triple " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
            }
    return t.outcome();
}

inline void expect_series_equal(Tally& t, const QSeries& a, const QSeries& b, const std::string& label) {
    r1::expect_series_zero(t, a - b, label);
}

inline Outcome gauss_reconstruction(const RttSeries& S) {
    Tally t;
    for (bool twisted : {false, true}) {
        const Gauss<QElem>& g = twisted ? S.S() : S.T();
        auto m = [&](int i, int j) -> const QSeries& { return twisted ? S.s(i, j) : S.t(i, j); };
        std::string p = twisted ? "s" : "t";
        expect_series_equal(t, g.D1, m(1, 1), p + "11");
        expect_series_equal(t, g.D1 * g.E, m(1, 2), p + "12");
        expect_series_equal(t, g.F * g.D1, m(2, 1), p + "21");
        expect_series_equal(t, g.D2 + g.F * g.D1 * g.E, m(2, 2), p + "22");
    }
    t.expect_equal(S.T().F[1], S.t(2, 1)[1], "F^(1) = t21^(1)");
    return t.outcome();
}

inline Outcome qdet_identity(const RttSeries& S) {
    Tally t;
    expect_series_equal(t, S.qdet(), S.T().D1 * S.T().D2.shift_arg(Q(-1)), "");
    return t.outcome();
}

inline Outcome qdet_central(const RttSeries& S) {
    Tally t;
    QSeries q = S.qdet();
    for (int k = 1; k <= S.order(); ++k)
        for (int r = 1; r <= S.order(); ++r)
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j)
                    t.expect_zero(commutator(q[k], S.rtt().t(i, j, r)), "qdet^(" + std::to_string(k) + ") vs t" + std::to_string(i) +
                                                                            std::to_string(j) + "^(" + std::to_string(r) + ")");
    return t.outcome();
}

/// (u^2 - v^2)[s_ij(u), s_kl(v)] = (u+v)(s_kj(u)s_il(v) - s_kj(v)s_il(u))
///   - (u-v)(s_ik(u)s_jl(v) - s_ki(v)s_lj(u)) + s_ki(u)s_jl(v) - s_ki(v)s_jl(u),
/// compared at every u^-a v^-b with a, b >= -2.
inline Outcome quaternary(const RttSeries& S) {
    Tally t;
    const int N = S.order();
    const Algebra<Q>& alg = S.rtt().algebra();
    auto s = [&](int i, int j, int p) { return p < 0 ? alg.zero() : S.s(i, j)[p]; };
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    auto c = [&](int p, int q) { return commutator(s(i, j, p), s(k, l, q)); };
                    auto X = [&](int p, int q) { return s(k, j, p) * s(i, l, q) - s(k, j, q) * s(i, l, p); };
                    auto Y = [&](int p, int q) { return s(i, k, p) * s(j, l, q) - s(k, i, q) * s(l, j, p); };
                    auto Z = [&](int p, int q) { return s(k, i, p) * s(j, l, q) - s(k, i, q) * s(j, l, p); };
                    for (int a = -2; a + 2 <= N; ++a)
                        for (int b = -2; b + 2 <= N; ++b) {
                            QElem lhs = c(a + 2, b) - c(a, b + 2);
                            QElem rhs = X(a + 1, b) + X(a, b + 1) - Y(a + 1, b) + Y(a, b + 1) + Z(a, b);
                            t.expect_equal(lhs, rhs, rttc::idx4(i, j, k, l) + ",a=" + std::to_string(a) + ",b=" + std::to_string(b));
                        }
                }
    return t.outcome();
}

/// s_ji(-u) = s_ij(u) + (s_ij(u) - s_ij(-u)) / 2u, i.e.
/// (-1)^m s_ji^(m) = s_ij^(m) + [m-1 odd] s_ij^(m-1).
inline Outcome symmetry(const RttSeries& S) {
    Tally t;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int m = 1; m <= S.order(); ++m) {
                QElem lhs = S.s(j, i)[m] * Q(m % 2 ? -1 : 1);
                QElem rhs = S.s(i, j)[m];
                if ((m - 1) % 2 == 1) rhs += S.s(i, j)[m - 1];
                t.expect_equal(lhs, rhs, "s" + std::to_string(i) + std::to_string(j) + "^(" + std::to_string(m) + ")");
            }
    return t.outcome();
}

inline Outcome smatrix_examples(const RttSeries& S) {
    Tally t;
    t.expect_zero(S.s(1, 1)[1], "s11^(1)");
    t.expect_equal(S.S().E[1], -S.S().F[1], "e^(1) = -f^(1)");
    return t.outcome();
}

inline Outcome sdet_identities(const RttSeries& S) {
    Tally t;
    QSeries sd = S.sdet();
    QSeries q = S.qdet();
    expect_series_equal(t, sd, S.S().D1 * S.S().D2.shift_arg(Q(-1)), "d1(u)d2(u-1)");
    expect_series_equal(t, sd, q * q.negate_arg().shift_arg(Q(-1)), "qdet(u)qdet(-u+1)");
    return t.outcome();
}

inline Outcome sdet_even(const RttSeries& S) {
    Tally t;
    QSeries e = S.sdet().shift_arg(Q(1, 2));
    for (int k = 1; k <= e.order(); k += 2) t.expect_zero(e[k], r1::coef(k));
    return t.outcome();
}

inline Outcome sdet_central(const RttSeries& S) {
    Tally t;
    QSeries sd = S.sdet();
    for (int k = 1; k <= S.order(); ++k)
        for (int r = 1; r <= S.order(); ++r)
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j)
                    t.expect_zero(commutator(sd[k], S.s(i, j)[r]), "sdet^(" + std::to_string(k) + ") vs s" + std::to_string(i) +
                                                                       std::to_string(j) + "^(" + std::to_string(r) + ")");
    return t.outcome();
}

/// Delta respects the commutator rule on generators of level <= D.
inline Outcome rtt_coproduct_hom(const RttModel& m, int D) {
    Tally t;
    const RttGl2& rtt = m.rtt();
    const RttCoproduct& dc = m.coproduct();
    std::vector<Gen> g;
    for (int r = 1; r <= D; ++r)
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) g.push_back(RttRule::id(i, j, r));
    for (Gen a : g)
        for (Gen b : g) {
            if (a <= b) continue;
            t.expect_equal(commutator(dc.gen(a), dc.gen(b)), dc.apply(rtt.algebra().bracket(a, b)),
                           rtt.algebra().info(a).name + "," + rtt.algebra().info(b).name);
        }
    return t.outcome();
}

inline Outcome grouplike(const RttModel& m, bool sklyanin) {
    Tally t;
    const RttCoproduct& dc = m.coproduct();
    QSeries d = sklyanin ? m.series().sdet() : m.series().qdet();
    expect_series_equal(t, dc.apply(d), dc.tensor(d, d), "");
    return t.outcome();
}

/// Delta(s_ij(u)) = sum_{a,b} s_ab(u) (x) t_ai(-u) t_bj(u)
inline Outcome s_coproduct(const RttModel& m) {
    Tally t;
    const RttSeries& S = m.series();
    const RttCoproduct& dc = m.coproduct();
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            QSeries rhs = dc.tensor(S.s(1, 1), S.t(1, i).negate_arg() * S.t(1, j));
            for (int a = 1; a <= 2; ++a)
                for (int b = 1; b <= 2; ++b) {
                    if (a == 1 && b == 1) continue;
                    rhs += dc.tensor(S.s(a, b), S.t(a, i).negate_arg() * S.t(b, j));
                }
            expect_series_equal(t, dc.apply(S.s(i, j)), rhs, "s" + std::to_string(i) + std::to_string(j));
        }
    return t.outcome();
}

/// f(u - 1/2) = e(-u - 1/2)
inline Outcome bridge_fe(const RttSeries& S) {
    Tally t;
    expect_series_equal(t, S.S().F.shift_arg(Q(-1, 2)), S.S().E.negate_arg().shift_arg(Q(1, 2)), "");
    return t.outcome();
}

/// The coefficient displays leading from the R-matrix side to b_0 and h_1.
inline Outcome bridge_coefficients(const RttModel& m) {
    Tally t;
    const RttSeries& S = m.series();
    const RttGl2& rtt = m.rtt();
    const Gauss<QElem>& G = S.T();
    const Gauss<QElem>& g = S.S();
    QElem D11 = G.D1[1], D12 = G.D1[2], D21 = G.D2[1], D22 = G.D2[2], E1 = G.E[1], F1 = G.F[1];
    QElem EF = commutator(E1, F1);

    t.expect_equal(g.F[1], S.s(2, 1)[1], "b10app: f^(1) = s21^(1)");
    t.expect_equal(S.s(2, 1)[1], rtt.t(2, 1, 1) - rtt.t(1, 2, 1), "b10app: s21^(1) = t21^(1) - t12^(1)");
    t.expect_equal(rtt.t(2, 1, 1) - rtt.t(1, 2, 1), F1 - E1, "b10app: = F^(1) - E^(1)");
    t.expect_equal(m.b(0), m.xp(0) - m.xm(0), "b10app: b_0 = x_0^+ - x_0^-");

    t.expect_equal(m.xi(0), D21 - D11, "app1: xi_0");
    t.expect_equal(m.xi(1), D22 - D12 + D11 * D11 + D21 * Q(1, 2) - D11 * Q(1, 2) - D11 * D21, "app1: xi_1");

    t.expect_zero(S.s(1, 1)[1], "d12app: s11^(1)");
    t.expect_zero(g.D1[1], "d12app: d1^(1)");
    t.expect_equal(S.s(1, 1)[2], g.D1[2], "d12app: s11^(2) = d1^(2)");
    t.expect_equal(g.D1[2], D12 * Q(2) - D11 * D11 - F1 * F1, "d12app: d1^(2)");

    t.expect_zero(S.s(2, 2)[1], "s22^(1)");
    t.expect_zero(g.D2[1], "d2^(1)");
    t.expect_equal(S.s(2, 2)[2], g.D2[2] + g.F[1] * g.E[1], "s22^(2) = d2^(2) + f^(1)e^(1)");
    t.expect_equal(S.s(2, 2)[2], -(E1 * E1) + D22 * Q(2) - D21 * D21 + F1 * E1 * Q(2), "s22^(2) in Gauss generators");

    t.expect_equal(g.E[1], S.s(1, 2)[1], "e^(1) = s12^(1)");
    t.expect_equal(S.s(1, 2)[1], -S.s(2, 1)[1], "s12^(1) = -s21^(1)");
    t.expect_equal(g.E[1], -g.F[1], "e^(1) = -f^(1)");

    t.expect_equal(g.D2[2], D22 * Q(2) - D21 * D21 - EF + F1 * F1, "d22app");
    t.expect_equal(m.h(1), g.D2[2] - g.D1[2], "app3: h_1 = d2^(2) - d1^(2)");
    t.expect_equal(m.h(1), D22 * Q(2) - D21 * D21 - D12 * Q(2) + D11 * D11 + F1 * F1 * Q(2) - EF, "app3");
    t.expect_equal(EF, D11 - D21, "[E^(1),F^(1)] = D1^(1) - D2^(1)");
    t.expect_zero(commutator(D11, D21), "[D1^(1),D2^(1)]");
    t.expect_equal(m.h(1), m.xi(1) * Q(2) - m.xi(0) * m.xi(0) + m.xp(0) * m.xp(0) * Q(2), "h_1 = 2xi_1 - xi_0^2 + 2(x_0^+)^2");
    return t.outcome();
}

/// The Drinfeld-engine twisted generators, pushed through the bridge, equal
/// the R-matrix ones; so do the estimate residuals.
inline Outcome bridge_images(const DrinfeldModel& d, const RttModel& m) {
    Tally t;
    const DrinfeldRule& rule = d.yangian().rule();
    auto psi = [&](const QElem& x) {
        return apply_hom(
            x, m.algebra(),
            [&](Gen g) {
                int r = rule.idx(g);
                switch (rule.fam(g)) {
                    case DFam::Plus: return m.xp(r);
                    case DFam::Minus: return m.xm(r);
                    default: return m.xi(r);
                }
            },
            std::function<Q(const Q&)>([](const Q& c) { return c; }));
    };
    const int L = m.top();
    for (int r = 0; r <= L; ++r) t.expect_equal(psi(d.b(r)), m.b(r), "b_" + std::to_string(r));
    for (int k = 1; k <= L; k += 2) t.expect_equal(psi(d.h(k)), m.h(k), "h_" + std::to_string(k));
    const int N = m.series().order();
    QSeries dh = theta_h(d, N), rh = theta_h(m, N);
    QSeries db = theta_b(d, N), rb = theta_b(m, N);
    for (int k = 0; k <= N; ++k) {
        t.expect_equal(psi(dh[k]), rh[k], "h residual," + r1::coef(k));
        t.expect_equal(psi(db[k]), rb[k], "b residual," + r1::coef(k));
    }
    return t.outcome();
}

/// R-matrix identities behind the strong estimate: the F-factor witness for
/// d1(u) and the determinant relation used to express d2(u).
inline Outcome strong_witnesses(const RttSeries& S) {
    Tally t;
    const Gauss<QElem>& G = S.T();
    QSeries D1m = G.D1.negate_arg(), Fm = G.F.negate_arg();
    expect_series_equal(t, S.S().D1, D1m * G.D1 + Fm * D1m * G.F * G.D1, "d1 witness");
    QSeries lhs = S.S().D1 * S.S().D2.shift_arg(Q(-1));
    QSeries rhs = G.D1 * G.D2.shift_arg(Q(-1)) * G.D1.negate_arg().shift_arg(Q(-1)) * G.D2.negate_arg();
    expect_series_equal(t, lhs, rhs, "d1(u)d2(u-1)");
    expect_series_equal(t, S.t(2, 1), G.F * G.D1, "t21 = F D1");
    return t.outcome();
}

/// Runs every shared identity in both engines and compares verdicts.
inline Outcome cross_engine(std::shared_ptr<const DrinfeldModel> d, std::shared_ptr<const RttModel> m) {
    Tally t;
    const int L = m->top(), N = m->series().order();
    auto left = shared_identities(d, L, N);
    auto right = shared_identities(m, L, N);
    std::string summary;
    for (std::size_t k = 0; k < left.size(); ++k) {
        auto run = [](const auto& fn) {
            try {
                return fn();
            } catch (const std::exception& e) {
                Outcome o;
                o.pass = false;
                o.detail = std::string("error: ") + e.what();
                return o;
            }
        };
        Outcome a = run(left[k].second), b = run(right[k].second);
        std::string v = std::string(a.pass ? "pass" : "fail") + "/" + (b.pass ? "pass" : "fail");
        summary += (summary.empty() ? "" : ", ") + left[k].first + " " + v;
        t.expect(a.pass && b.pass, left[k].first + " " + v + (a.pass ? "" : " [drinfeld: " + a.detail + "]") +
                                       (b.pass ? "" : " [rtt: " + b.detail + "]"));
    }
    t.note(summary);
    return t.outcome();
}

struct RttParams {
    int order = 6;
};

inline std::vector<CheckItem> rtt_items(RttParams p) {
    const int N = p.order;
    auto m = std::make_shared<const RttModel>(N);
    auto d = std::make_shared<const DrinfeldModel>(2 * N);
    std::vector<CheckItem> items;
    const RttModel* mp = m.get();
    items.push_back({"rtt-closed-form", "RTT", [m, N] { return rtt_closed_form(m->rtt(), N); }});
    items.push_back({"rtt-jacobi", "RTT", [m] { return rtt_jacobi(m->rtt(), 3); }});
    items.push_back({"gauss", "eq:Y2-R", [m] { return gauss_reconstruction(m->series()); }});
    items.push_back({"qdet", "eq:qdet", [m] { return qdet_identity(m->series()); }});
    items.push_back({"qdet-central", "eq:qdet", [m] { return qdet_central(m->series()); }});
    items.push_back({"quaternary", "quater u", [m] { return quaternary(m->series()); }});
    items.push_back({"symmetry", "sym u", [m] { return symmetry(m->series()); }});
    items.push_back({"smatrix", "eq:embed-R", [m] { return smatrix_examples(m->series()); }});
    items.push_back({"sdet", "eq:s=qdet", [m] { return sdet_identities(m->series()); }});
    items.push_back({"sdet-even", "eq:sdet", [m] { return sdet_even(m->series()); }});
    items.push_back({"sdet-central", "eq:sdet", [m] { return sdet_central(m->series()); }});
    items.push_back({"coproduct-hom", "eq:copro-R1", [m] { return rtt_coproduct_hom(*m, 3); }});
    items.push_back({"qdet-grouplike", "eq:copro-R1", [m] { return grouplike(*m, false); }});
    items.push_back({"sdet-grouplike", "eq:copro-R2", [m] { return grouplike(*m, true); }});
    items.push_back({"s-copro", "s-copro", [m] { return s_coproduct(*m); }});
    items.push_back({"bridge-relations", "eq:Y2-R", [m] { return drinfeld_relations(*m, m->top()); }});
    items.push_back({"bridge-fe", "eq:Y2i-R", [m] { return bridge_fe(m->series()); }});
    items.push_back({"bridge-coefficients", "prop-sl2-2", [m] { return bridge_coefficients(*m); }});
    items.push_back({"bridge-images", "eq:Y2i-R", [m, d] { return bridge_images(*d, *m); }});
    items.push_back({"rtt-h-est", "eq:h-est", [m, N] { return h_estimate(*m, N); }});
    items.push_back({"rtt-b-est", "eq:b-est", [m, N] { return b_estimate_weight(*m, N); }});
    items.push_back({"rtt-h-co-est", "eq:h-co-est", [m, N] { return coproduct_estimate(*m, N, true); }});
    items.push_back({"rtt-b-co-est", "eq:b-co-est", [m, N] { return coproduct_estimate(*m, N, false); }});
    items.push_back({"strong-witnesses", "prop-sl2", [m] { return strong_witnesses(m->series()); }});
    items.push_back({"cross-engine", "eq:Y2-R", [m, d] { return cross_engine(d, m); }});
    (void)mp;
    return items;
}

}  // namespace tyv
