// Multivariate Laurent polynomials over the rationals.
//
// Variable 0 is q; variables 1.. are the weight indeterminates t_1, t_2, ...
// Exponents may be negative.  Terms are kept in a sorted map so iteration
// order (and hence printing) is deterministic.
#pragma once

#include <map>
#include <vector>
#include <cstdint>
#include <string>

#include "uqgl/numbers.hpp"

namespace uqgl {

// Exponent vector with trailing zeros trimmed; compares lexicographically
// (padded with zeros on the right).
struct Expo {
    std::vector<int32_t> e;

    void trim() {
        while (!e.empty() && e.back() == 0) e.pop_back();
    }
    int32_t operator[](size_t v) const { return v < e.size() ? e[v] : 0; }
    size_t nvars() const { return e.size(); }

    friend Expo operator+(const Expo& a, const Expo& b) {
        Expo r;
        size_t n = std::max(a.e.size(), b.e.size());
        r.e.resize(n);
        for (size_t v = 0; v < n; ++v) r.e[v] = a[v] + b[v];
        r.trim();
        return r;
    }
    friend Expo operator-(const Expo& a, const Expo& b) {
        Expo r;
        size_t n = std::max(a.e.size(), b.e.size());
        r.e.resize(n);
        for (size_t v = 0; v < n; ++v) r.e[v] = a[v] - b[v];
        r.trim();
        return r;
    }
    Expo operator-() const {
        Expo r = *this;
        for (auto& x : r.e) x = -x;
        return r;
    }
    friend bool operator==(const Expo& a, const Expo& b) { return a.e == b.e; }
    friend bool operator<(const Expo& a, const Expo& b) {
        size_t n = std::max(a.e.size(), b.e.size());
        for (size_t v = 0; v < n; ++v) {
            if (a[v] != b[v]) return a[v] < b[v];
        }
        return false;
    }
};

class Laurent {
public:
    using Terms = std::map<Expo, Rat>;

    Laurent() = default;
    static Laurent zero() { return Laurent(); }
    static Laurent one() { return constant(1); }
    static Laurent constant(const Rat& c) {
        Laurent p;
        if (c != 0) p.terms_[Expo{}] = c;
        return p;
    }
    // c * var^exp
    static Laurent monomial(size_t var, int32_t exp, const Rat& c = 1) {
        Laurent p;
        if (c != 0) {
            Expo m;
            if (exp != 0) {
                m.e.resize(var + 1, 0);
                m.e[var] = exp;
                m.trim();
            }
            p.terms_[m] = c;
        }
        return p;
    }
    static Laurent q_power(int32_t exp, const Rat& c = 1) {
        return monomial(0, exp, c);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.e.empty() &&
               terms_.begin()->second == 1;
    }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first.e.empty());
    }
    bool is_single_term() const { return terms_.size() == 1; }
    Rat constant_value() const {
        if (terms_.empty()) return 0;
        return terms_.begin()->second;
    }
    size_t nvars() const {
        size_t n = 0;
        for (auto& [m, c] : terms_) n = std::max(n, m.nvars());
        return n;
    }
    bool has_var(size_t v) const {
        for (auto& [m, c] : terms_)
            if (m[v] != 0) return true;
        return false;
    }
    // true iff only variable 0 (q) occurs
    bool is_univariate_q() const {
        for (auto& [m, c] : terms_)
            for (size_t v = 1; v < m.nvars(); ++v)
                if (m.e[v] != 0) return false;
        return true;
    }
    bool integer_coefficients() const {
        for (auto& [m, c] : terms_)
            if (denominator(c) != 1) return false;
        return true;
    }

    void add_term(const Expo& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    Laurent operator-() const {
        Laurent r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }
    Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
    Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
    Laurent& operator*=(const Laurent& b) { return *this = *this * b; }
    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.terms_ == b.terms_;
    }

    Laurent scaled(const Rat& c) const {
        Laurent r;
        if (c == 0) return r;
        for (auto& [m, cc] : terms_) r.terms_[m] = cc * c;
        return r;
    }
    Laurent shifted(const Expo& m) const {
        Laurent r;
        for (auto& [mm, c] : terms_) r.terms_[mm + m] = c;
        return r;
    }
    // all variables v -> v^{-1}
    Laurent inverted_vars() const {
        Laurent r;
        for (auto& [m, c] : terms_) r.terms_[-m] = c;
        return r;
    }

    // Per-variable minimum exponent over all terms (0 for absent variables).
    Expo min_exponents() const;

    // Positive rational c with (*this)/c integer-primitive.
    Rat content() const;

    int32_t degree_in(size_t v) const;
    int32_t low_degree_in(size_t v) const;

    // substitute variable v := q^k (used for integral-weight evaluation)
    Laurent subst_var_q_power(size_t v, int32_t k) const;

    std::string str() const;

private:
    Terms terms_;
};

// gcd of two polynomials (all exponents must be >= 0); result is
// integer-primitive with positive leading (lex-largest) coefficient.
Laurent poly_gcd(const Laurent& a, const Laurent& b);

// exact division; throws internal_defect if not divisible
Laurent poly_exact_div(const Laurent& a, const Laurent& b);

}  // namespace uqgl
