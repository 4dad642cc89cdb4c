#pragma once

// Check items, outcomes and coefficient mutations shared by all suites.

#include "tyv/pbw.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tyv {

struct Outcome {
    bool pass = true;
    std::size_t residual_terms = 0;
    std::string detail;
};

struct CheckItem {
    std::string id;
    std::string anchor;
    std::function<Outcome()> run;
};

/// Overrides of named integer coefficients inside relations, e.g.
/// "tcfSerre2f" -> -5 replaces the -4 in ad(b)^3 b = -4 d [b, b].
class Mutation {
public:
    Mutation() = default;
    static Mutation parse(const std::string& spec);

    bool empty() const { return overrides_.empty(); }
    void set(const std::string& id, const Rational& value) { overrides_[id] = value; }
    Rational coefficient(const std::string& id, const Rational& fallback) const {
        auto it = overrides_.find(id);
        return it == overrides_.end() ? fallback : it->second;
    }
    bool touches(const std::string& id) const { return overrides_.count(id) > 0; }
    std::string str() const {
        std::string s;
        for (const auto& [k, v] : overrides_) s += (s.empty() ? "" : ",") + k + ":" + v.str();
        return s;
    }

private:
    std::map<std::string, Rational> overrides_;
};

inline Mutation Mutation::parse(const std::string& spec) {
    Mutation m;
    std::size_t start = 0;
    while (start < spec.size()) {
        std::size_t end = spec.find(',', start);
        if (end == std::string::npos) end = spec.size();
        std::string part = spec.substr(start, end - start);
        std::size_t colon = part.rfind(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == part.size())
            throw std::invalid_argument("mutation must look like ID:VALUE, got '" + part + "'");
        try {
            m.set(part.substr(0, colon), Rational::parse(part.substr(colon + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad mutation value in '" + part + "'");
        }
        start = end + 1;
    }
    return m;
}

/// Accumulates many residuals into one outcome.
class Tally {
public:
    template <class C>
    void expect_zero(const Element<C>& residual, const std::string& label) {
        ++checked_;
        if (residual.is_zero()) return;
        ++failed_;
        residual_ += residual.size();
        if (first_.empty()) first_ = label + ": residual " + residual.str(4);
    }
    template <class C>
    void expect_equal(const Element<C>& lhs, const Element<C>& rhs, const std::string& label) {
        expect_zero(lhs - rhs, label);
    }
    void expect(bool ok, const std::string& label, std::size_t weight = 1) {
        ++checked_;
        if (ok) return;
        ++failed_;
        residual_ += weight;
        if (first_.empty()) first_ = label;
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

    std::size_t checked() const { return checked_; }
    Outcome outcome() const {
        Outcome o;
        o.pass = failed_ == 0;
        o.residual_terms = residual_;
        if (o.pass) {
            o.detail = std::to_string(checked_) + " identities hold";
        } else {
            o.detail = std::to_string(failed_) + " of " + std::to_string(checked_) + " identities fail, " +
                       std::to_string(residual_) + " residual monomials; first: " + first_;
        }
        if (!notes_.empty()) o.detail += " (" + notes_ + ")";
        return o;
    }

private:
    std::size_t checked_ = 0, failed_ = 0, residual_ = 0;
    std::string first_, notes_;
};

}  // namespace tyv
