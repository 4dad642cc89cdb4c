#pragma once

// Root systems with Bourbaki labeling and a Chevalley-type basis
//   x_a^+, x_a^-, xi_i   with (x_a^+, x_a^-) = 1, xi_i = [x_i^+, x_i^-],
// normalized so that the structure constants eta satisfy
//   eta(a,b) = -eta(b,a) = eta(-b,-a) = eta(-a,a+b).
//
// Construction: simply-laced algebras come from the Frenkel-Kac sign cocycle;
// B, C, F, G are the subalgebras of a simply-laced algebra generated by
// orbit sums of its Chevalley generators under a diagram automorphism.
// Positive root vectors are iterated brackets along extraspecial pairs,
// negative ones their images under the Chevalley involution, and both are
// rescaled by 1/sqrt(n) in K, which is what forces the radicals.

#include "tyv/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tyv {

using RootVec = std::vector<int>;

struct LieType {
    char family = 'A';
    int rank = 1;

    std::string name() const { return std::string(1, family) + std::to_string(rank); }
    static LieType parse(const std::string& s);
    bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }
    friend bool operator==(const LieType&, const LieType&) = default;
};

inline LieType LieType::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != '_' && ch != ' ') s += ch;
    if (s.size() < 2) throw std::invalid_argument("bad Lie type '" + text + "'");
    LieType t;
    t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    try {
        std::size_t used = 0;
        t.rank = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad Lie type '" + text + "'");
    }
    bool ok = false;
    switch (t.family) {
        case 'A': ok = t.rank >= 1; break;
        case 'B': ok = t.rank >= 2; break;
        case 'C': ok = t.rank >= 2; break;
        case 'D': ok = t.rank >= 4; break;
        case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
        case 'F': ok = t.rank == 4; break;
        case 'G': ok = t.rank == 2; break;
        default: break;
    }
    if (!ok) throw std::invalid_argument("unsupported Lie type '" + text + "'");
    return t;
}

/// Gram matrix (a_i, a_j) of the simple roots; short roots have (a,a) = 2.
/// D3 is accepted here because B2 is folded out of it.
inline std::vector<std::vector<int>> gram_matrix(char family, int n) {
    std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
    auto edge = [&](int i, int j, int v) {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    std::vector<int> d(n, 1);
    switch (family) {
        case 'A':
            for (int i = 1; i < n; ++i) edge(i, i + 1, -1);
            break;
        case 'B':
            for (int i = 0; i < n - 1; ++i) d[i] = 2;
            for (int i = 1; i < n; ++i) edge(i, i + 1, -2);
            break;
        case 'C':
            d[n - 1] = 2;
            for (int i = 1; i < n - 1; ++i) edge(i, i + 1, -1);
            edge(n - 1, n, -2);
            break;
        case 'D':
            for (int i = 1; i < n - 1; ++i) edge(i, i + 1, -1);
            edge(n - 2, n, -1);
            break;
        case 'E':
            edge(1, 3, -1);
            edge(3, 4, -1);
            edge(2, 4, -1);
            for (int i = 4; i < n; ++i) edge(i, i + 1, -1);
            break;
        case 'F':
            d = {2, 2, 1, 1};
            edge(1, 2, -2);
            edge(2, 3, -2);
            edge(3, 4, -1);
            break;
        case 'G':
            d = {1, 3};
            edge(1, 2, -3);
            break;
        default:
            throw std::invalid_argument("unknown family");
    }
    for (int i = 0; i < n; ++i) g[i][i] = 2 * d[i];
    return g;
}

/// Positive roots in the simple-root basis, sorted by height (stable in
/// generation order within a height).
class RootSystem {
public:
    explicit RootSystem(std::vector<std::vector<int>> gram);

    int rank() const { return n_; }
    const std::vector<std::vector<int>>& gram() const { return gram_; }
    int gram(int i, int j) const { return gram_[i][j]; }
    int d(int i) const { return gram_[i][i] / 2; }
    /// c_ij = 2 (a_i, a_j) / (a_i, a_i)
    int cartan(int i, int j) const { return 2 * gram_[i][j] / gram_[i][i]; }
    int inner(const RootVec& a, const RootVec& b) const;
    int inner_simple(const RootVec& a, int i) const;

    const std::vector<RootVec>& positive() const { return pos_; }
    int num_positive() const { return static_cast<int>(pos_.size()); }
    int height(int k) const;
    /// Index of a positive root, or -1.
    int index(const RootVec& a) const {
        auto it = lookup_.find(a);
        return it == lookup_.end() ? -1 : it->second;
    }
    bool is_root(const RootVec& a) const;
    RootVec simple(int i) const {
        RootVec v(n_, 0);
        v[i] = 1;
        return v;
    }

private:
    int n_;
    std::vector<std::vector<int>> gram_;
    std::vector<RootVec> pos_;
    std::map<RootVec, int> lookup_;
};

inline RootSystem::RootSystem(std::vector<std::vector<int>> gram) : n_(static_cast<int>(gram.size())), gram_(std::move(gram)) {
    for (int i = 0; i < n_; ++i) {
        lookup_[simple(i)] = static_cast<int>(pos_.size());
        pos_.push_back(simple(i));
    }
    std::size_t begin = 0;
    while (begin < pos_.size()) {
        std::size_t end = pos_.size();
        for (std::size_t k = begin; k < end; ++k) {
            for (int i = 0; i < n_; ++i) {
                RootVec b = pos_[k];
                if (b == simple(i)) continue;
                int p = 0;
                RootVec down = b;
                while (true) {
                    down[i] -= 1;
                    if (!lookup_.count(down)) break;
                    ++p;
                }
                int q = p - 2 * inner_simple(b, i) / gram_[i][i];
                if (q <= 0) continue;
                RootVec up = b;
                up[i] += 1;
                if (!lookup_.count(up)) {
                    lookup_[up] = static_cast<int>(pos_.size());
                    pos_.push_back(up);
                }
            }
        }
        begin = end;
    }
}

inline int RootSystem::inner(const RootVec& a, const RootVec& b) const {
    int s = 0;
    for (int i = 0; i < n_; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < n_; ++j) s += a[i] * b[j] * gram_[i][j];
    }
    return s;
}

inline int RootSystem::inner_simple(const RootVec& a, int i) const {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += a[j] * gram_[j][i];
    return s;
}

inline int RootSystem::height(int k) const {
    int h = 0;
    for (int x : pos_[k]) h += x;
    return h;
}

inline bool RootSystem::is_root(const RootVec& a) const {
    if (lookup_.count(a)) return true;
    RootVec neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    return lookup_.count(neg) > 0;
}

namespace detail {

// Rational vectors in the simply-laced model: Cartan coordinates first
// (in the basis of simple roots), then one slot per root (positive roots,
// then their negatives).
using ModelVec = std::vector<Rational>;

class SimplyLacedModel {
public:
    explicit SimplyLacedModel(const RootSystem& rs) : rs_(rs) {
        int n = rs.rank();
        eps_.assign(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                eps_[i][j] = (i == j || (i < j && rs.gram(i, j) != 0)) ? 1 : 0;
    }

    int size() const { return rs_.rank() + 2 * rs_.num_positive(); }
    int root_slot(const RootVec& a) const {
        int k = rs_.index(a);
        if (k >= 0) return rs_.rank() + k;
        RootVec neg = negate(a);
        k = rs_.index(neg);
        if (k < 0) return -1;
        return rs_.rank() + rs_.num_positive() + k;
    }
    RootVec slot_root(int s) const {
        int n = rs_.rank(), np = rs_.num_positive();
        if (s < n + np) return rs_.positive()[s - n];
        return negate(rs_.positive()[s - n - np]);
    }
    static RootVec negate(RootVec a) {
        for (int& x : a) x = -x;
        return a;
    }

    // (-1)^{sum a_i b_j eps_ij}
    int eps(const RootVec& a, const RootVec& b) const {
        long s = 0;
        int n = rs_.rank();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (eps_[i][j]) s += static_cast<long>(a[i]) * b[j];
        return (s % 2 == 0) ? 1 : -1;
    }

    ModelVec zero() const { return ModelVec(size()); }
    ModelVec root_vector(const RootVec& a) const {
        ModelVec v = zero();
        v[root_slot(a)] = 1;
        return v;
    }

    ModelVec bracket(const ModelVec& x, const ModelVec& y) const {
        ModelVec out = zero();
        int n = rs_.rank();
        for (int s = 0; s < size(); ++s) {
            if (x[s].is_zero()) continue;
            for (int t = 0; t < size(); ++t) {
                if (y[t].is_zero()) continue;
                Rational c = x[s] * y[t];
                bracket_basis_(s, t, c, out);
            }
        }
        (void)n;
        return out;
    }

private:
    void bracket_basis_(int s, int t, const Rational& c, ModelVec& out) const {
        int n = rs_.rank();
        if (s < n && t < n) return;
        if (s < n) {
            RootVec b = slot_root(t);
            int v = rs_.inner(rs_.simple(s), b);
            if (v) out[t] += c * Rational(v);
            return;
        }
        if (t < n) {
            RootVec a = slot_root(s);
            int v = rs_.inner(rs_.simple(t), a);
            if (v) out[s] -= c * Rational(v);
            return;
        }
        RootVec a = slot_root(s), b = slot_root(t);
        RootVec sum(n);
        bool zero_sum = true;
        for (int i = 0; i < n; ++i) {
            sum[i] = a[i] + b[i];
            if (sum[i]) zero_sum = false;
        }
        if (zero_sum) {
            // [E_a, E_-a] = -a
            for (int i = 0; i < n; ++i)
                if (a[i]) out[i] -= c * Rational(a[i]);
            return;
        }
        int slot = root_slot(sum);
        if (slot < 0) return;
        out[slot] += c * Rational(eps(a, b));
    }

    const RootSystem& rs_;
    std::vector<std::vector<int>> eps_;
};

struct Folding {
    char big_family;
    int big_rank;
    std::vector<std::vector<int>> orbits;  // target node -> big nodes (0-based)
};

inline Folding folding_for(const LieType& t) {
    Folding f;
    int n = t.rank;
    auto single = [](int rank) {
        std::vector<std::vector<int>> o;
        for (int i = 0; i < rank; ++i) o.push_back({i});
        return o;
    };
    switch (t.family) {
        case 'A':
        case 'D':
        case 'E':
            f = {t.family, n, single(n)};
            break;
        case 'B':
            f = {'D', n + 1, single(n - 1)};
            f.orbits.push_back({n - 1, n});
            break;
        case 'C':
            f = {'A', 2 * n - 1, {}};
            for (int i = 0; i < n - 1; ++i) f.orbits.push_back({i, 2 * n - 2 - i});
            f.orbits.push_back({n - 1});
            break;
        case 'F':
            f = {'E', 6, {{1}, {3}, {2, 4}, {0, 5}}};
            break;
        case 'G':
            f = {'D', 4, {{0, 2, 3}, {1}}};
            break;
        default:
            throw std::invalid_argument("no folding");
    }
    return f;
}

}  // namespace detail

using SparseVec = std::vector<std::pair<int, K>>;

/// Basis of g: indices [0, P) are x_a^-, [P, P+n) are xi_i, [P+n, 2P+n) are
/// x_a^+, where P = number of positive roots, ordered by height.
class ChevalleyData {
public:
    explicit ChevalleyData(LieType type);

    const LieType& type() const { return type_; }
    const RootSystem& roots() const { return rs_; }
    int rank() const { return rs_.rank(); }
    int num_positive() const { return rs_.num_positive(); }
    int dim() const { return 2 * num_positive() + rank(); }

    int neg(int k) const { return k; }
    int cartan(int i) const { return num_positive() + i; }
    int pos(int k) const { return num_positive() + rank() + k; }
    bool is_neg(int a) const { return a < num_positive(); }
    bool is_cartan(int a) const { return a >= num_positive() && a < num_positive() + rank(); }
    bool is_pos(int a) const { return a >= num_positive() + rank(); }
    /// Positive-root index of a root vector basis element.
    int root_of(int a) const { return is_neg(a) ? a : a - num_positive() - rank(); }

    /// Weight in the simple-root basis.
    const RootVec& weight(int a) const { return weights_[a]; }
    const std::string& name(int a) const { return names_[a]; }

    const SparseVec& bracket(int a, int b) const { return table_[a * dim() + b]; }
    K form(int a, int b) const;
    /// Chevalley involution: omega(basis a) = sign * basis target.
    std::pair<int, int> omega(int a) const;

    /// eta(a, b) for signed roots a, b with a + b a root (0 otherwise).
    K eta(const RootVec& a, const RootVec& b) const;
    /// Index of the basis element for a signed root, or -1.
    int basis_of_root(const RootVec& a) const;

    /// (1 / n) used to rescale the raw bracket vector for each positive root.
    const Rational& raw_norm(int k) const { return norms_[k]; }

private:
    void build_();

    LieType type_;
    RootSystem rs_;
    std::vector<SparseVec> table_;
    std::vector<RootVec> weights_;
    std::vector<std::string> names_;
    std::vector<Rational> norms_;
};

inline ChevalleyData::ChevalleyData(LieType type) : type_(type), rs_(gram_matrix(type.family, type.rank)) { build_(); }

inline void ChevalleyData::build_() {
    using detail::ModelVec;
    const int n = rank(), P = num_positive(), N = dim();
    detail::Folding fold = detail::folding_for(type_);
    RootSystem big(gram_matrix(fold.big_family, fold.big_rank));
    detail::SimplyLacedModel model(big);

    auto add_scaled = [](ModelVec& acc, const ModelVec& v, const Rational& c) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) acc[i] += c * v[i];
    };
    auto scaled = [](ModelVec v, const Rational& c) {
        for (auto& x : v)
            if (!x.is_zero()) x *= c;
        return v;
    };

    // Chevalley generators of the folded algebra.
    std::vector<ModelVec> e(n, model.zero()), f(n, model.zero()), xi(n, model.zero());
    for (int i = 0; i < n; ++i) {
        for (int j : fold.orbits[i]) {
            e[i][model.root_slot(big.simple(j))] = 1;
            f[i][model.root_slot(detail::SimplyLacedModel::negate(big.simple(j)))] = -1;
            xi[i][j] = Rational(rs_.d(i));
        }
        f[i] = scaled(f[i], Rational(rs_.d(i)));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ModelVec h = model.bracket(xi[i], e[j]);
            if (h != scaled(e[j], Rational(rs_.gram(i, j))))
                throw std::logic_error("folded Cartan action disagrees with the Gram matrix for " + type_.name());
            ModelVec c = model.bracket(e[i], f[j]);
            if (c != (i == j ? xi[i] : model.zero()))
                throw std::logic_error("folded generators fail [x_i^+, x_j^-] = delta xi_i for " + type_.name());
        }

    // Raw root vectors along extraspecial pairs: X_g = [x_i^+, X_b],
    // Y_g = -[x_i^-, Y_b] = -omega(X_g).
    std::vector<ModelVec> X(P), Y(P);
    for (int k = 0; k < P; ++k) {
        const RootVec& g = rs_.positive()[k];
        if (rs_.height(k) == 1) {
            int i = static_cast<int>(std::find(g.begin(), g.end(), 1) - g.begin());
            X[k] = e[i];
            Y[k] = f[i];
            continue;
        }
        for (int i = 0; i < n; ++i) {
            RootVec b = g;
            b[i] -= 1;
            int kb = rs_.index(b);
            if (kb < 0) continue;
            X[k] = model.bracket(e[i], X[kb]);
            Y[k] = scaled(model.bracket(f[i], Y[kb]), Rational(-1));
            break;
        }
        if (std::all_of(X[k].begin(), X[k].end(), [](const Rational& q) { return q.is_zero(); }))
            throw std::logic_error("vanishing root vector in " + type_.name());
    }

    // Express a model vector that lies in the Cartan as a combination of xi_i.
    auto cartan_coords = [&](const ModelVec& v) {
        std::vector<Rational> out(n);
        for (int i = 0; i < n; ++i) out[i] = v[fold.orbits[i][0]] / Rational(rs_.d(i));
        ModelVec back = model.zero();
        for (int i = 0; i < n; ++i) add_scaled(back, xi[i], out[i]);
        if (back != v) throw std::logic_error("vector is not in the span of xi for " + type_.name());
        return out;
    };
    // Ratio r with v = r * w for w nonzero.
    auto ratio = [&](const ModelVec& v, const ModelVec& w) {
        std::size_t s = 0;
        while (w[s].is_zero()) ++s;
        Rational r = v[s] / w[s];
        if (v != scaled(w, r)) throw std::logic_error("root space is not one-dimensional in " + type_.name());
        return r;
    };

    // n_g with [X_g, Y_g] = n_g * sum_i g_i xi_i; rescale both by 1/sqrt(n_g).
    norms_.resize(P);
    std::vector<K> scale(N, K(1));
    for (int k = 0; k < P; ++k) {
        std::vector<Rational> c = cartan_coords(model.bracket(X[k], Y[k]));
        const RootVec& g = rs_.positive()[k];
        int lead = 0;
        while (g[lead] == 0) ++lead;
        Rational nk = c[lead] / Rational(g[lead]);
        for (int i = 0; i < n; ++i)
            if (c[i] != nk * Rational(g[i])) throw std::logic_error("[x^+, x^-] is not proportional to the coroot");
        if (nk.sign() <= 0) throw std::logic_error("non-positive root vector norm");
        norms_[k] = nk;
        auto s = K::sqrt_of(nk.inverse());
        if (!s) throw std::logic_error("normalization leaves Q(sqrt2, sqrt3) for " + type_.name());
        scale[neg(k)] = *s;
        scale[pos(k)] = *s;
    }

    std::vector<ModelVec> raw(N);
    weights_.assign(N, RootVec(n, 0));
    names_.resize(N);
    for (int k = 0; k < P; ++k) {
        raw[neg(k)] = Y[k];
        raw[pos(k)] = X[k];
        weights_[pos(k)] = rs_.positive()[k];
        weights_[neg(k)] = detail::SimplyLacedModel::negate(rs_.positive()[k]);
        std::string label;
        for (int i = 0; i < n; ++i) label += std::to_string(rs_.positive()[k][i]);
        names_[pos(k)] = "x+[" + label + "]";
        names_[neg(k)] = "x-[" + label + "]";
    }
    for (int i = 0; i < n; ++i) {
        raw[cartan(i)] = xi[i];
        names_[cartan(i)] = "xi" + std::to_string(i + 1);
    }

    table_.assign(static_cast<std::size_t>(N) * N, {});
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            ModelVec v = model.bracket(raw[a], raw[b]);
            if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); })) continue;
            RootVec w(n);
            bool zero_weight = true;
            for (int i = 0; i < n; ++i) {
                w[i] = weights_[a][i] + weights_[b][i];
                if (w[i]) zero_weight = false;
            }
            SparseVec& out = table_[a * N + b];
            K pre = scale[a] * scale[b];
            if (zero_weight) {
                std::vector<Rational> c = cartan_coords(v);
                for (int i = 0; i < n; ++i)
                    if (!c[i].is_zero()) out.emplace_back(cartan(i), pre * K(c[i]));
                continue;
            }
            int t = basis_of_root(w);
            if (t < 0) throw std::logic_error("bracket lands outside the root spaces");
            out.emplace_back(t, pre * K(ratio(v, raw[t])) / scale[t]);
        }
}

inline int ChevalleyData::basis_of_root(const RootVec& a) const {
    int k = rs_.index(a);
    if (k >= 0) return pos(k);
    k = rs_.index(detail::SimplyLacedModel::negate(a));
    return k >= 0 ? neg(k) : -1;
}

inline K ChevalleyData::eta(const RootVec& a, const RootVec& b) const {
    int x = basis_of_root(a), y = basis_of_root(b);
    if (x < 0 || y < 0) throw std::invalid_argument("eta of a non-root");
    const SparseVec& v = bracket(x, y);
    if (v.empty() || is_cartan(v.front().first)) return K();
    return v.front().second;
}

inline K ChevalleyData::form(int a, int b) const {
    if (is_cartan(a) && is_cartan(b)) return K(rs_.gram(a - num_positive(), b - num_positive()));
    if (is_pos(a) && is_neg(b) && root_of(a) == root_of(b)) return K(1);
    if (is_neg(a) && is_pos(b) && root_of(a) == root_of(b)) return K(1);
    return K();
}

inline std::pair<int, int> ChevalleyData::omega(int a) const {
    if (is_cartan(a)) return {a, -1};
    if (is_pos(a)) return {neg(root_of(a)), -1};
    return {pos(root_of(a)), -1};
}

}  // namespace tyv
