// Finite Scalar-linear combinations of PBW monomials in canonical order.
#pragma once

#include <map>
#include <memory>

#include "uqgl/monomial.hpp"

namespace uqgl {

class Engine;
using EnginePtr = std::shared_ptr<const Engine>;

class AlgebraElement {
public:
    using Terms = std::map<PBWMonomial, Scalar>;

    AlgebraElement() = default;
    explicit AlgebraElement(EnginePtr eng) : eng_(std::move(eng)) {}

    const Terms& terms() const { return terms_; }
    const EnginePtr& engine() const { return eng_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const PBWMonomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend AlgebraElement operator+(const AlgebraElement& a,
                                    const AlgebraElement& b) {
        AlgebraElement r = a;
        if (!r.eng_) r.eng_ = b.eng_;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend AlgebraElement operator-(const AlgebraElement& a,
                                    const AlgebraElement& b) {
        AlgebraElement r = a;
        if (!r.eng_) r.eng_ = b.eng_;
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    AlgebraElement operator-() const {
        AlgebraElement r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    AlgebraElement& operator+=(const AlgebraElement& b) {
        return *this = *this + b;
    }
    AlgebraElement& operator-=(const AlgebraElement& b) {
        return *this = *this - b;
    }
    friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
        AlgebraElement r(a.eng_);
        if (c.is_zero()) return r;
        for (auto& [m, cc] : a.terms_) r.terms_.emplace(m, c * cc);
        return r;
    }
    // normal-formed product (delegates to the engine)
    friend AlgebraElement operator*(const AlgebraElement& a,
                                    const AlgebraElement& b);

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
        return !(a == b);
    }

    // -1 for 0 or inhomogeneous, else 0/1
    int homogeneous_parity() const {
        int p = -1;
        for (auto& [m, c] : terms_) {
            int mp = m.parity();
            if (p == -1)
                p = mp;
            else if (p != mp)
                return -1;
        }
        return p;
    }

    std::string str() const;

private:
    EnginePtr eng_;
    Terms terms_;
};

}  // namespace uqgl
