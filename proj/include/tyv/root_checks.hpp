#pragma once

// Integrity checks on the structure constants of g.

#include "tyv/check.hpp"
#include "tyv/root_data.hpp"

#include <memory>
#include <vector>

namespace tyv {

namespace detail {

using Dense = std::vector<K>;

inline Dense unit(const ChevalleyData& cd, int a, const K& c = K(1)) {
    Dense v(cd.dim());
    v[a] = c;
    return v;
}

inline Dense lie_bracket(const ChevalleyData& cd, const Dense& x, const Dense& y) {
    Dense out(cd.dim());
    for (int a = 0; a < cd.dim(); ++a) {
        if (x[a].is_zero()) continue;
        for (int b = 0; b < cd.dim(); ++b) {
            if (y[b].is_zero()) continue;
            K xy = x[a] * y[b];
            for (const auto& [c, v] : cd.bracket(a, b)) out[c] += xy * v;
        }
    }
    return out;
}

inline Dense apply_omega(const ChevalleyData& cd, const Dense& x) {
    Dense out(cd.dim());
    for (int a = 0; a < cd.dim(); ++a) {
        if (x[a].is_zero()) continue;
        auto [t, s] = cd.omega(a);
        out[t] += x[a] * K(s);
    }
    return out;
}

inline std::size_t nonzeros(const Dense& v) {
    std::size_t n = 0;
    for (const auto& x : v) n += !x.is_zero();
    return n;
}

inline Dense add(Dense a, const Dense& b, const K& c = K(1)) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += c * b[i];
    return a;
}

}  // namespace detail

inline Outcome check_jacobi(const ChevalleyData& cd) {
    using namespace detail;
    Tally t;
    const int N = cd.dim();
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            for (int c = b + 1; c < N; ++c) {
                Dense s = lie_bracket(cd, unit(cd, a), lie_bracket(cd, unit(cd, b), unit(cd, c)));
                s = add(s, lie_bracket(cd, unit(cd, b), lie_bracket(cd, unit(cd, c), unit(cd, a))));
                s = add(s, lie_bracket(cd, unit(cd, c), lie_bracket(cd, unit(cd, a), unit(cd, b))));
                std::size_t nz = nonzeros(s);
                t.expect(nz == 0, "Jacobi fails on " + cd.name(a) + ", " + cd.name(b) + ", " + cd.name(c), nz);
            }
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Dense s = add(lie_bracket(cd, unit(cd, a), unit(cd, b)), lie_bracket(cd, unit(cd, b), unit(cd, a)));
            t.expect(nonzeros(s) == 0, "antisymmetry fails on " + cd.name(a) + ", " + cd.name(b));
        }
    return t.outcome();
}

/// eta(a,b) = -eta(b,a) = eta(-b,-a) = eta(-a,a+b) for positive a, b.
inline Outcome check_eta(const ChevalleyData& cd) {
    Tally t;
    const auto& pos = cd.roots().positive();
    auto neg = [](RootVec v) {
        for (int& x : v) x = -x;
        return v;
    };
    for (const auto& a : pos)
        for (const auto& b : pos) {
            RootVec s(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            if (!cd.roots().is_root(s)) continue;
            K e = cd.eta(a, b);
            std::string lbl = cd.name(cd.basis_of_root(a)) + ", " + cd.name(cd.basis_of_root(b));
            t.expect(!e.is_zero(), "eta vanishes on " + lbl);
            t.expect(e == -cd.eta(b, a), "eta antisymmetry fails on " + lbl);
            t.expect(e == cd.eta(neg(b), neg(a)), "eta(a,b) != eta(-b,-a) on " + lbl);
            t.expect(e == cd.eta(neg(a), s), "eta(a,b) != eta(-a,a+b) on " + lbl);
        }
    return t.outcome();
}

/// Form invariance ([x,y],z) = (x,[y,z]), [x_a^+, x_a^-] = xi_a and the
/// Cartan action [xi_i, x_j^+-] = +-(a_i,a_j) x_j^+-.
inline Outcome check_normalization(const ChevalleyData& cd) {
    using namespace detail;
    Tally t;
    const int N = cd.dim(), n = cd.rank();
    auto form = [&](const Dense& x, const Dense& y) {
        K s;
        for (int a = 0; a < N; ++a) {
            if (x[a].is_zero()) continue;
            for (int b = 0; b < N; ++b)
                if (!y[b].is_zero()) s += x[a] * y[b] * cd.form(a, b);
        }
        return s;
    };
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c) {
                K l = form(lie_bracket(cd, unit(cd, a), unit(cd, b)), unit(cd, c));
                K r = form(unit(cd, a), lie_bracket(cd, unit(cd, b), unit(cd, c)));
                t.expect(l == r, "form not invariant on " + cd.name(a) + ", " + cd.name(b) + ", " + cd.name(c));
            }
    for (int k = 0; k < cd.num_positive(); ++k) {
        Dense br = lie_bracket(cd, unit(cd, cd.pos(k)), unit(cd, cd.neg(k)));
        Dense want(N);
        for (int i = 0; i < n; ++i) want[cd.cartan(i)] = K(cd.roots().positive()[k][i]);
        t.expect(br == want, "[x^+, x^-] != xi_a for " + cd.name(cd.pos(k)));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int g = cd.roots().gram(i, j);
            Dense p = lie_bracket(cd, unit(cd, cd.cartan(i)), unit(cd, cd.pos(j)));
            Dense m = lie_bracket(cd, unit(cd, cd.cartan(i)), unit(cd, cd.neg(j)));
            t.expect(p == unit(cd, cd.pos(j), K(g)) && m == unit(cd, cd.neg(j), K(-g)),
                     "Cartan action wrong for xi" + std::to_string(i + 1));
        }
    return t.outcome();
}

/// tr(ad x ad y) is a fixed multiple of the invariant form.
inline Outcome check_killing_proportional(const ChevalleyData& cd) {
    using namespace detail;
    Tally t;
    const int N = cd.dim();
    std::vector<std::vector<Dense>> ad(N);  // ad[a][c] = [e_a, e_c]
    for (int a = 0; a < N; ++a)
        for (int c = 0; c < N; ++c) ad[a].push_back(lie_bracket(cd, unit(cd, a), unit(cd, c)));
    std::optional<K> ratio;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            K tr;
            for (int c = 0; c < N; ++c) {
                const Dense& y = ad[b][c];
                for (int e = 0; e < N; ++e)
                    if (!y[e].is_zero() && !ad[a][e][c].is_zero()) tr += y[e] * ad[a][e][c];
            }
            K f = cd.form(a, b);
            if (f.is_zero()) {
                t.expect(tr.is_zero(), "Killing form nonzero where the form vanishes");
                continue;
            }
            K r = tr / f;
            if (!ratio) ratio = r;
            t.expect(r == *ratio, "Killing form not proportional at " + cd.name(a) + ", " + cd.name(b));
        }
    if (ratio) t.note("ratio " + ratio->str());
    return t.outcome();
}

/// omega is an automorphism, k = span(x^+ - x^-) and p = span(x^+ + x^-, xi)
/// satisfy [k,k] in k, [k,p] in p, [p,p] in k.
inline Outcome check_involution(const ChevalleyData& cd) {
    using namespace detail;
    Tally t;
    const int N = cd.dim();
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Dense l = apply_omega(cd, lie_bracket(cd, unit(cd, a), unit(cd, b)));
            Dense r = lie_bracket(cd, apply_omega(cd, unit(cd, a)), apply_omega(cd, unit(cd, b)));
            t.expect(l == r, "omega is not a homomorphism on " + cd.name(a) + ", " + cd.name(b));
        }
    std::vector<Dense> kb, pb;
    for (int k = 0; k < cd.num_positive(); ++k) {
        kb.push_back(add(unit(cd, cd.pos(k)), unit(cd, cd.neg(k)), K(-1)));
        pb.push_back(add(unit(cd, cd.pos(k)), unit(cd, cd.neg(k))));
    }
    for (int i = 0; i < cd.rank(); ++i) pb.push_back(unit(cd, cd.cartan(i)));
    auto in_k = [&](const Dense& v) { return apply_omega(cd, v) == v; };
    auto in_p = [&](const Dense& v) { return add(apply_omega(cd, v), v) == Dense(N); };
    for (const auto& x : kb) {
        t.expect(in_k(x), "k basis not fixed by omega");
        for (const auto& y : kb) t.expect(in_k(lie_bracket(cd, x, y)), "[k,k] leaves k");
        for (const auto& y : pb) t.expect(in_p(lie_bracket(cd, x, y)), "[k,p] leaves p");
    }
    for (const auto& x : pb) {
        t.expect(in_p(x), "p basis not negated by omega");
        for (const auto& y : pb) t.expect(in_k(lie_bracket(cd, x, y)), "[p,p] leaves k");
    }
    return t.outcome();
}

inline std::vector<CheckItem> root_data_items(std::shared_ptr<const ChevalleyData> cd) {
    return {
        {"jacobi", "Jacobi identity", [cd] { return check_jacobi(*cd); }},
        {"eta-symmetry", "eta", [cd] { return check_eta(*cd); }},
        {"normalization", "invariant form", [cd] { return check_normalization(*cd); }},
        {"killing-proportional", "invariant form", [cd] { return check_killing_proportional(*cd); }},
        {"chevalley-involution", "omega", [cd] { return check_involution(*cd); }},
    };
}

}  // namespace tyv
