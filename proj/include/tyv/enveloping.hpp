#pragma once

// U(g) and the truncated current algebra U(g[z]/z^{D+1}) as PBW algebras.

#include "tyv/pbw.hpp"
#include "tyv/root_data.hpp"

#include <memory>

namespace tyv {

/// Lie bracket on basis elements of g, read from the structure-constant table.
class EnvelopingRule : public CommutatorRule<K> {
public:
    explicit EnvelopingRule(std::shared_ptr<const ChevalleyData> cd) : cd_(std::move(cd)) {}
    Element<K> bracket(const Algebra<K>& alg, Gen a, Gen b) const override {
        Element<K> out = alg.zero();
        for (const auto& [c, v] : cd_->bracket(a, b)) out.add(Word(1, static_cast<Gen>(c)), v);
        return out;
    }

private:
    std::shared_ptr<const ChevalleyData> cd_;
};

/// Generators are the basis of g in its native order:
/// negative root vectors < Cartan < positive root vectors, each by height.
inline std::shared_ptr<Algebra<K>> make_enveloping(std::shared_ptr<const ChevalleyData> cd) {
    std::vector<GeneratorInfo> gens;
    for (int a = 0; a < cd->dim(); ++a) gens.push_back({cd->name(a), 0, cd->weight(a)});
    return std::make_shared<Algebra<K>>(std::move(gens), std::make_unique<EnvelopingRule>(cd));
}

/// [x z^r, y z^s] = [x, y] z^{r+s}, zero past z^D.
class CurrentRule : public CommutatorRule<K> {
public:
    CurrentRule(std::shared_ptr<const ChevalleyData> cd, int zdeg) : cd_(std::move(cd)), D_(zdeg) {}
    Element<K> bracket(const Algebra<K>& alg, Gen a, Gen b) const override {
        Element<K> out = alg.zero();
        int r = a % (D_ + 1), s = b % (D_ + 1);
        if (r + s > D_) return out;
        for (const auto& [c, v] : cd_->bracket(a / (D_ + 1), b / (D_ + 1)))
            out.add(Word(1, static_cast<Gen>(c * (D_ + 1) + r + s)), v);
        return out;
    }

private:
    std::shared_ptr<const ChevalleyData> cd_;
    int D_;
};

class CurrentAlgebra {
public:
    CurrentAlgebra(std::shared_ptr<const ChevalleyData> cd, int zdeg) : cd_(cd), D_(zdeg) {
        std::vector<GeneratorInfo> gens;
        for (int a = 0; a < cd->dim(); ++a)
            for (int r = 0; r <= zdeg; ++r) gens.push_back({cd->name(a) + "z" + std::to_string(r), r, cd->weight(a)});
        alg_ = std::make_shared<Algebra<K>>(std::move(gens), std::make_unique<CurrentRule>(cd, zdeg));
    }

    const Algebra<K>& algebra() const { return *alg_; }
    const ChevalleyData& data() const { return *cd_; }
    int zdeg() const { return D_; }

    /// basis element a of g times z^r; zero when r exceeds the truncation.
    Element<K> gen(int a, int r) const {
        if (r < 0 || r > D_) return alg_->zero();
        return alg_->gen(static_cast<Gen>(a * (D_ + 1) + r));
    }

private:
    std::shared_ptr<const ChevalleyData> cd_;
    int D_;
    std::shared_ptr<Algebra<K>> alg_;
};

}  // namespace tyv
