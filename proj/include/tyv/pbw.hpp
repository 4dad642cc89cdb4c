#pragma once

// PBW normal forms over an ordered generator table.
//
// An algebra is a totally ordered set of generators plus a commutator rule
// giving [g_a, g_b] (a > b) in normal form. Normal forms are maps from
// non-decreasing words to nonzero coefficients. Products are straightened by
// pushing generators in from the right; products word * generator are
// memoized per algebra.

#include "tyv/field.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tyv {

using Gen = char16_t;
using Word = std::u16string;

/// Raised when a computation needs an index beyond the algebra's budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeneratorInfo {
    std::string name;
    int degree = 0;
    std::vector<int> weight;
};

template <class C>
class Algebra;

template <class C>
class Element {
public:
    using Terms = std::unordered_map<Word, C>;

    Element() = default;
    explicit Element(const Algebra<C>* alg) : alg_(alg) {}
    Element(const Algebra<C>* alg, Word w, C c) : alg_(alg) { add(std::move(w), std::move(c)); }

    const Algebra<C>* algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    C coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? C() : it->second;
    }

    void add(const Word& w, const C& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add(const Element& o, const C& c) {
        adopt_(o);
        for (const auto& [w, v] : o.terms_) add(w, v * c);
    }

    Element& operator+=(const Element& o) {
        adopt_(o);
        for (const auto& [w, v] : o.terms_) add(w, v);
        return *this;
    }
    Element& operator-=(const Element& o) {
        adopt_(o);
        for (const auto& [w, v] : o.terms_) add(w, -v);
        return *this;
    }
    Element& operator*=(const C& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_) v = v * c;
        return *this;
    }
    Element operator-() const {
        Element r = *this;
        for (auto& [w, v] : r.terms_) v = -v;
        return r;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const C& c) { return a *= c; }
    friend Element operator*(const C& c, Element a) { return a *= c; }
    friend Element operator*(const Element& a, const Element& b) {
        const Algebra<C>* alg = a.alg_ ? a.alg_ : b.alg_;
        if (!alg) return Element();
        return alg->multiply(a, b);
    }
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

    /// Terms sorted by word, for deterministic output.
    std::vector<std::pair<Word, C>> sorted_terms() const {
        std::vector<std::pair<Word, C>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
            if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
            return x.first < y.first;
        });
        return v;
    }

    template <class Pred>
    Element filter(Pred&& keep) const {
        Element r(alg_);
        for (const auto& [w, v] : terms_)
            if (keep(w)) r.terms_.emplace(w, v);
        return r;
    }

    std::string str(std::size_t max_terms = 12) const;

private:
    void adopt_(const Element& o) {
        if (!alg_) alg_ = o.alg_;
    }

    const Algebra<C>* alg_ = nullptr;
    Terms terms_;
};

template <class C>
Element<C> commutator(const Element<C>& x, const Element<C>& y) {
    return x * y - y * x;
}

template <class C>
Element<C> anticommutator(const Element<C>& x, const Element<C>& y) {
    return x * y + y * x;
}

/// Commutator rule: bracket(alg, a, b) for a > b returns [g_a, g_b] in normal form.
template <class C>
class CommutatorRule {
public:
    virtual ~CommutatorRule() = default;
    virtual Element<C> bracket(const Algebra<C>& alg, Gen a, Gen b) const = 0;
};

template <class C>
class Algebra {
public:
    Algebra(std::vector<GeneratorInfo> gens, std::unique_ptr<CommutatorRule<C>> rule)
        : gens_(std::move(gens)), rule_(std::move(rule)) {
        if (gens_.size() >= 0xFFFF) throw std::invalid_argument("too many generators");
    }
    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    std::size_t num_generators() const { return gens_.size(); }
    const GeneratorInfo& info(Gen g) const { return gens_.at(g); }
    const std::vector<GeneratorInfo>& generators() const { return gens_; }
    const CommutatorRule<C>& rule() const { return *rule_; }

    Element<C> zero() const { return Element<C>(this); }
    Element<C> one() const { return Element<C>(this, Word(), C(1)); }
    Element<C> scalar(const C& c) const { return Element<C>(this, Word(), c); }
    Element<C> gen(Gen g) const { return Element<C>(this, Word(1, g), C(1)); }
    Element<C> word(const Word& w) const {
        Element<C> r = one();
        for (Gen g : w) r = multiply_gen(r, g);
        return r;
    }

    int degree(const Word& w) const {
        int d = 0;
        for (Gen g : w) d += gens_[g].degree;
        return d;
    }
    std::vector<int> weight(const Word& w) const {
        std::vector<int> out;
        for (Gen g : w) {
            const auto& wt = gens_[g].weight;
            if (out.size() < wt.size()) out.resize(wt.size(), 0);
            for (std::size_t i = 0; i < wt.size(); ++i) out[i] += wt[i];
        }
        return out;
    }

    /// [g_a, g_b] for any pair, in normal form.
    const Element<C>& bracket(Gen a, Gen b) const;

    Element<C> multiply(const Element<C>& x, const Element<C>& y) const;
    Element<C> multiply_gen(const Element<C>& x, Gen g) const;
    /// Normal form of w1 * w2 for normal words, accumulated with coefficient c.
    void multiply_words(const Word& w1, const Word& w2, const C& c, Element<C>& out) const;

    std::size_t memo_size() const {
        std::shared_lock lock(mu_);
        return memo_.size();
    }

private:
    const Element<C>& word_times_gen_(const Word& w, Gen g) const;

    std::vector<GeneratorInfo> gens_;
    std::unique_ptr<CommutatorRule<C>> rule_;
    mutable std::shared_mutex mu_;
    mutable std::unordered_map<Word, Element<C>> memo_;          // key: normal word followed by a smaller generator
    mutable std::unordered_map<std::uint32_t, Element<C>> brackets_;
};

template <class C>
const Element<C>& Algebra<C>::bracket(Gen a, Gen b) const {
    std::uint32_t key = (static_cast<std::uint32_t>(a) << 16) | b;
    {
        std::shared_lock lock(mu_);
        auto it = brackets_.find(key);
        if (it != brackets_.end()) return it->second;
    }
    Element<C> v(this);
    if (a > b) {
        v = rule_->bracket(*this, a, b);
    } else if (a < b) {
        v = -bracket(b, a);
    }
    std::unique_lock lock(mu_);
    return brackets_.try_emplace(key, std::move(v)).first->second;
}

template <class C>
const Element<C>& Algebra<C>::word_times_gen_(const Word& w, Gen g) const {
    Word key = w;
    key.push_back(g);
    {
        std::shared_lock lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    // w = w' a with a > g:  w' a g = (w' g) a + w' [a, g]
    Gen a = w.back();
    Word rest = w.substr(0, w.size() - 1);
    Element<C> out(this);
    if (rest.empty() || rest.back() <= g) {
        Word t = rest;
        t.push_back(g);
        t.push_back(a);
        out.add(t, C(1));
    } else {
        const Element<C>& left = word_times_gen_(rest, g);
        for (const auto& [t, c] : left.terms()) {
            if (t.empty() || t.back() <= a) {
                Word u = t;
                u.push_back(a);
                out.add(u, c);
            } else {
                out.add(word_times_gen_(t, a), c);
            }
        }
    }
    const Element<C>& br = bracket(a, g);
    for (const auto& [t, c] : br.terms()) multiply_words(rest, t, c, out);
    std::unique_lock lock(mu_);
    return memo_.try_emplace(std::move(key), std::move(out)).first->second;
}

template <class C>
void Algebra<C>::multiply_words(const Word& w1, const Word& w2, const C& c, Element<C>& out) const {
    if (w2.empty() || w1.empty() || w1.back() <= w2.front()) {
        out.add(w1 + w2, c);
        return;
    }
    if (w2.size() == 1) {
        for (const auto& [t, v] : word_times_gen_(w1, w2[0]).terms()) out.add(t, v * c);
        return;
    }
    Element<C> cur(this, w1, C(1));
    for (std::size_t k = 0; k < w2.size(); ++k) {
        Element<C> next(this);
        Gen g = w2[k];
        for (const auto& [t, v] : cur.terms()) {
            if (t.empty() || t.back() <= g) {
                Word u = t;
                u.push_back(g);
                next.add(u, v);
            } else {
                next.add(word_times_gen_(t, g), v);
            }
        }
        cur = std::move(next);
    }
    out.add(cur, c);
}

template <class C>
Element<C> Algebra<C>::multiply_gen(const Element<C>& x, Gen g) const {
    Element<C> out(this);
    for (const auto& [w, c] : x.terms()) multiply_words(w, Word(1, g), c, out);
    return out;
}

template <class C>
Element<C> Algebra<C>::multiply(const Element<C>& x, const Element<C>& y) const {
    Element<C> out(this);
    for (const auto& [w2, c2] : y.terms())
        for (const auto& [w1, c1] : x.terms()) multiply_words(w1, w2, c1 * c2, out);
    return out;
}

template <class C>
std::string Element<C>::str(std::size_t max_terms) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    std::size_t k = 0;
    for (const auto& [w, c] : sorted_terms()) {
        if (k == max_terms) {
            os << " + ... (" << terms_.size() << " terms)";
            break;
        }
        if (k) os << " + ";
        os << "(" << c << ")";
        for (Gen g : w) os << "*" << (alg_ ? alg_->info(g).name : std::to_string(int(g)));
        ++k;
    }
    return os.str();
}

// Tensor squares: generators of the left factor, then those of the right
// factor; the two factors commute.
template <class C>
class TensorRule : public CommutatorRule<C> {
public:
    explicit TensorRule(std::shared_ptr<const Algebra<C>> base) : base_(std::move(base)) {}
    Element<C> bracket(const Algebra<C>& alg, Gen a, Gen b) const override {
        const Gen n = static_cast<Gen>(base_->num_generators());
        if (a >= n && b < n) return alg.zero();
        Gen shift = a >= n ? n : 0;
        Element<C> out = alg.zero();
        for (const auto& [w, c] : base_->bracket(static_cast<Gen>(a - shift), static_cast<Gen>(b - shift)).terms()) {
            Word u = w;
            for (auto& g : u) g = static_cast<Gen>(g + shift);
            out.add(u, c);
        }
        return out;
    }
    const Algebra<C>& base() const { return *base_; }

private:
    std::shared_ptr<const Algebra<C>> base_;
};

template <class C>
class TensorSquare {
public:
    explicit TensorSquare(std::shared_ptr<const Algebra<C>> base) : base_(base) {
        std::vector<GeneratorInfo> gens;
        for (const auto& g : base->generators()) gens.push_back({g.name + "(1)", g.degree, g.weight});
        for (const auto& g : base->generators()) gens.push_back({g.name + "(2)", g.degree, g.weight});
        alg_ = std::make_shared<Algebra<C>>(std::move(gens), std::make_unique<TensorRule<C>>(base));
    }

    const Algebra<C>& algebra() const { return *alg_; }
    const Algebra<C>& base() const { return *base_; }
    Gen shift() const { return static_cast<Gen>(base_->num_generators()); }

    Element<C> left(const Element<C>& x) const { return tensor(x, base_->one()); }
    Element<C> right(const Element<C>& y) const { return tensor(base_->one(), y); }
    /// x (x) y; concatenating normal words is already normal here.
    Element<C> tensor(const Element<C>& x, const Element<C>& y) const {
        Element<C> out = alg_->zero();
        for (const auto& [w1, c1] : x.terms())
            for (const auto& [w2, c2] : y.terms()) {
                Word u = w1;
                for (Gen g : w2) u.push_back(static_cast<Gen>(g + shift()));
                out.add(u, c1 * c2);
            }
        return out;
    }
    /// Split a normal word of the tensor square into its two factors.
    std::pair<Word, Word> split(const Word& w) const {
        std::size_t k = 0;
        while (k < w.size() && w[k] < shift()) ++k;
        Word r = w.substr(k);
        for (auto& g : r) g = static_cast<Gen>(g - shift());
        return {w.substr(0, k), r};
    }
    /// Swap the tensor factors.
    Element<C> flip(const Element<C>& x) const {
        Element<C> out = alg_->zero();
        for (const auto& [w, c] : x.terms()) {
            auto [l, r] = split(w);
            Word u = r;
            for (Gen g : l) u.push_back(static_cast<Gen>(g + shift()));
            out.add(u, c);
        }
        return out;
    }

private:
    std::shared_ptr<const Algebra<C>> base_;
    std::shared_ptr<Algebra<C>> alg_;
};

/// Algebra homomorphism determined by images of generators.
template <class C, class D, class ImageFn>
Element<D> apply_hom(const Element<C>& x, const Algebra<D>& target, ImageFn&& image, const std::function<D(const C&)>& coeff) {
    Element<D> out = target.zero();
    for (const auto& [w, c] : x.sorted_terms()) {
        Element<D> t = target.scalar(coeff(c));
        for (Gen g : w) t = t * image(g);
        out += t;
    }
    return out;
}

}  // namespace tyv
