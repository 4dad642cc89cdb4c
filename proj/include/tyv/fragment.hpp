#pragma once

// U(g) with the degree-one Drinfeld symbols xi_{i,1}, x_{i,1}^+, x_{i,1}^-
// adjoined as a fragment: each monomial carries at most one symbol, kept
// rightmost, and the unevaluated brackets P^+-_{ij} = [x_{i,1}^+-, x_{j,0}^+-]
// (i != j) may appear only with scalar coefficients. Anything outside this
// fragment raises FragmentOverflow.

#include "tyv/check.hpp"
#include "tyv/enveloping.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace tyv {

struct FragmentOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SymKind { Xi, XPlus, XMinus };

struct Symbol {
    SymKind kind;
    int i;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// P^s_{ij} with i < j, s = +1 or -1.
struct Opaque {
    int sign;
    int i, j;
    friend auto operator<=>(const Opaque&, const Opaque&) = default;
};

class Fragment;

class FragElem {
public:
    explicit FragElem(const Fragment* f);

    Element<K> classical;
    std::map<Symbol, Element<K>> symbolic;  // sum of (classical word) * symbol
    std::map<Opaque, K> opaque;

    bool is_zero() const;
    std::size_t size() const;
    std::string str() const;

    FragElem& operator+=(const FragElem& o);
    FragElem& operator-=(const FragElem& o) { return *this += o * K(-1); }
    FragElem& operator*=(const K& c);
    friend FragElem operator+(FragElem a, const FragElem& b) { return a += b; }
    friend FragElem operator-(FragElem a, const FragElem& b) { return a -= b; }
    friend FragElem operator*(FragElem a, const K& c) { return a *= c; }
    friend FragElem operator*(const FragElem& a, const FragElem& b);

    const Fragment* frag() const { return f_; }

private:
    const Fragment* f_;
};

class Fragment {
public:
    explicit Fragment(std::shared_ptr<const ChevalleyData> cd) : cd_(cd), ug_(make_enveloping(cd)) {}

    const ChevalleyData& data() const { return *cd_; }
    const Algebra<K>& ug() const { return *ug_; }
    std::shared_ptr<const Algebra<K>> ug_ptr() const { return ug_; }

    FragElem zero() const { return FragElem(this); }
    FragElem lift(const Element<K>& x) const {
        FragElem r(this);
        r.classical = x;
        return r;
    }
    FragElem symbol(SymKind k, int i) const {
        FragElem r(this);
        r.symbolic.emplace(Symbol{k, i}, ug_->one());
        return r;
    }
    FragElem xplus(int k) const { return lift(ug_->gen(static_cast<Gen>(cd_->pos(k)))); }
    FragElem xminus(int k) const { return lift(ug_->gen(static_cast<Gen>(cd_->neg(k)))); }
    FragElem xi(int i) const { return lift(ug_->gen(static_cast<Gen>(cd_->cartan(i)))); }

    FragElem multiply(const FragElem& a, const FragElem& b) const;

private:
    int gram(int i, int j) const { return cd_->roots().gram(i, j); }
    /// [S, g] for a symbol and a U(g) generator.
    FragElem symbol_bracket_(const Symbol& s, Gen g) const;
    /// S * w for a normal classical word w.
    FragElem symbol_times_word_(const Symbol& s, const Word& w) const;
    /// classical word times a fragment element
    FragElem word_times_(const Word& w, const K& c, const FragElem& x) const;
    FragElem times_word_(const FragElem& x, const Word& w) const;

    std::shared_ptr<const ChevalleyData> cd_;
    std::shared_ptr<Algebra<K>> ug_;
};

inline FragElem::FragElem(const Fragment* f) : classical(&f->ug()), f_(f) {}

inline bool FragElem::is_zero() const { return classical.is_zero() && symbolic.empty() && opaque.empty(); }

inline std::size_t FragElem::size() const {
    std::size_t n = classical.size() + opaque.size();
    for (const auto& [s, w] : symbolic) n += w.size();
    return n;
}

inline std::string FragElem::str() const {
    std::string s = classical.str(4);
    static const char* names[3] = {"xi", "x+", "x-"};
    for (const auto& [sym, w] : symbolic)
        s += " + (" + w.str(4) + ")*" + names[static_cast<int>(sym.kind)] + "_{" + std::to_string(sym.i + 1) + ",1}";
    for (const auto& [p, c] : opaque)
        s += " + (" + c.str() + ")*P" + (p.sign > 0 ? "+" : "-") + std::to_string(p.i + 1) + std::to_string(p.j + 1);
    return s;
}

inline FragElem& FragElem::operator+=(const FragElem& o) {
    classical += o.classical;
    for (const auto& [s, w] : o.symbolic) {
        auto it = symbolic.try_emplace(s, f_->ug().zero()).first;
        it->second += w;
        if (it->second.is_zero()) symbolic.erase(it);
    }
    for (const auto& [p, c] : o.opaque) {
        K& v = opaque[p];
        v += c;
        if (v.is_zero()) opaque.erase(p);
    }
    return *this;
}

inline FragElem& FragElem::operator*=(const K& c) {
    if (c.is_zero()) {
        *this = FragElem(f_);
        return *this;
    }
    classical *= c;
    for (auto& [s, w] : symbolic) w *= c;
    for (auto& [p, v] : opaque) v *= c;
    return *this;
}

inline FragElem operator*(const FragElem& a, const FragElem& b) { return a.frag()->multiply(a, b); }

inline FragElem Fragment::symbol_bracket_(const Symbol& s, Gen g) const {
    const ChevalleyData& cd = *cd_;
    FragElem r = zero();
    int a = g;
    if (cd.is_cartan(a)) {
        int j = a - cd.num_positive();
        if (s.kind == SymKind::Xi) return r;
        int sign = s.kind == SymKind::XPlus ? 1 : -1;
        // [x_{i,1}^+-, xi_j] = -+(a_i, a_j) x_{i,1}^+-
        return symbol(s.kind, s.i) * K(-sign * gram(s.i, j));
    }
    int k = cd.root_of(a);
    if (cd.roots().height(k) != 1)
        throw FragmentOverflow("bracket of a degree-one symbol with the non-simple root vector " + cd.name(a));
    int j = k;  // simple roots come first
    int gsign = cd.is_pos(a) ? 1 : -1;
    Element<K> xj = ug_->gen(g);
    Element<K> xii = ug_->gen(static_cast<Gen>(cd.cartan(s.i)));
    if (s.kind == SymKind::Xi) {
        // [xi_{i,1}, x_j^+-] = +-(a_i,a_j) x_{j,1}^+- +- 1/2 (a_i,a_j) {xi_i, x_j^+-}
        K g_ij(gsign * gram(s.i, j));
        r = symbol(gsign > 0 ? SymKind::XPlus : SymKind::XMinus, j) * g_ij;
        r.classical = anticommutator(xii, xj) * (g_ij * K(Rational(1, 2)));
        return r;
    }
    int ssign = s.kind == SymKind::XPlus ? 1 : -1;
    if (ssign != gsign) {
        // [x_{i,1}^+, x_j^-] = delta_ij xi_{i,1} = -[x_{i,1}^-, x_j^+]
        if (s.i == j) r = symbol(SymKind::Xi, s.i) * K(ssign);
        return r;
    }
    if (s.i == j) {
        // [x_{i,1}^+-, x_i^+-] = +-d_i (x_i^+-)^2
        r.classical = xj * xj * K(ssign * cd.roots().d(j));
        return r;
    }
    if (s.i < j) {
        r.opaque[Opaque{ssign, s.i, j}] = K(1);
        return r;
    }
    // P_{ij} = -P_{ji} +- 1/2 (a_i, a_j) {x_j, x_i}
    Element<K> xi_ = ug_->gen(static_cast<Gen>(ssign > 0 ? cd.pos(s.i) : cd.neg(s.i)));
    r.opaque[Opaque{ssign, j, s.i}] = K(-1);
    r.classical = anticommutator(xj, xi_) * K(Rational(ssign * gram(s.i, j), 2));
    return r;
}

inline FragElem Fragment::word_times_(const Word& w, const K& c, const FragElem& x) const {
    FragElem r = zero();
    if (!x.opaque.empty()) {
        if (!w.empty()) throw FragmentOverflow("opaque bracket multiplied by a non-scalar");
        for (const auto& [p, v] : x.opaque) r.opaque[p] = v * c;
    }
    Element<K> left(&*ug_, w, c);
    r.classical = left * x.classical;
    for (const auto& [s, v] : x.symbolic) r.symbolic.emplace(s, left * v);
    return r;
}

inline FragElem Fragment::symbol_times_word_(const Symbol& s, const Word& w) const {
    if (w.empty()) return symbol(s.kind, s.i);
    // S g w' = g (S w') + [S, g] w'
    Gen g = w.front();
    Word rest = w.substr(1);
    FragElem out = word_times_(Word(1, g), K(1), symbol_times_word_(s, rest));
    out += times_word_(symbol_bracket_(s, g), rest);
    return out;
}

inline FragElem Fragment::times_word_(const FragElem& x, const Word& w) const {
    if (w.empty()) return x;
    FragElem r = zero();
    if (!x.opaque.empty()) throw FragmentOverflow("opaque bracket multiplied by a non-scalar");
    Element<K> right(&*ug_, w, K(1));
    r.classical = x.classical * right;
    for (const auto& [s, v] : x.symbolic) {
        // v * S * w
        FragElem sw = symbol_times_word_(s, w);
        for (const auto& [vw, vc] : v.terms()) r += word_times_(vw, vc, sw);
    }
    return r;
}

inline FragElem Fragment::multiply(const FragElem& a, const FragElem& b) const {
    if (!a.symbolic.empty() && !b.symbolic.empty()) throw FragmentOverflow("product of two degree-one symbols");
    FragElem r = zero();
    auto scalar_of = [](const FragElem& x) -> std::optional<K> {
        if (!x.symbolic.empty() || !x.opaque.empty()) return std::nullopt;
        if (x.classical.is_zero()) return K();
        if (x.classical.size() == 1 && x.classical.terms().begin()->first.empty()) return x.classical.terms().begin()->second;
        return std::nullopt;
    };
    if (!a.opaque.empty() || !b.opaque.empty()) {
        if (auto s = scalar_of(b)) return a * *s;
        if (auto s = scalar_of(a)) return b * *s;
        throw FragmentOverflow("opaque bracket multiplied by a non-scalar");
    }
    r.classical = a.classical * b.classical;
    for (const auto& [s, v] : b.symbolic) r.symbolic.emplace(s, a.classical * v);
    for (const auto& [s, v] : a.symbolic) {
        // v * (S * b.classical)
        for (const auto& [bw, bc] : b.classical.terms()) {
            FragElem sb = symbol_times_word_(s, bw);
            for (const auto& [vw, vc] : v.terms()) r += word_times_(vw, vc * bc, sb);
        }
    }
    // drop zero symbol entries
    for (auto it = r.symbolic.begin(); it != r.symbolic.end();) {
        if (it->second.is_zero()) it = r.symbolic.erase(it);
        else ++it;
    }
    return r;
}

inline FragElem frag_commutator(const FragElem& x, const FragElem& y) { return x * y - y * x; }
inline FragElem frag_anticommutator(const FragElem& x, const FragElem& y) { return x * y + y * x; }

}  // namespace tyv
