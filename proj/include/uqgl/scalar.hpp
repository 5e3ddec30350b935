// Exact coefficient field: rational functions in q (and optionally the
// weight indeterminates t_i) with rational coefficients.
//
// Canonical representation: numerator is an integer-coefficient Laurent
// polynomial, denominator an integer-coefficient ordinary polynomial with
// zero minimum degree in every variable, positive lex-leading coefficient,
// gcd(numerator, denominator) = 1 and coprime integer contents.  Two values
// are equal iff their canonical representations are identical.
#pragma once

#include <string>

#include "uqgl/laurent.hpp"

namespace uqgl {

class Scalar {
public:
    Scalar() : num_(Laurent::zero()), den_(Laurent::one()) {}
    Scalar(int c) : num_(Laurent::constant(c)), den_(Laurent::one()) {}
    explicit Scalar(const Rat& c)
        : num_(Laurent::constant(c)), den_(Laurent::one()) {
        normalize();
    }
    static Scalar from_fraction(Laurent num, Laurent den) {
        Scalar s;
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        s.normalize();
        return s;
    }
    static Scalar q_power(int32_t k) {
        Scalar s;
        s.num_ = Laurent::q_power(k);
        return s;
    }
    static Scalar t_power(size_t i, int32_t k) {
        Scalar s;
        s.num_ = Laurent::monomial(i, k);
        return s;
    }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    bool has_t_vars() const {
        return !num_.is_univariate_q() || !den_.is_univariate_q();
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    Scalar inverse() const;
    // the field automorphism q -> q^{-1}, t_i -> t_i^{-1}
    Scalar bar() const;
    Scalar pow(int32_t k) const;

    // substitute t_i := q^{k} exactly (integral-weight evaluation)
    Scalar subst_t_q_power(size_t i, int32_t k) const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) {
        return !(a == b);
    }
    friend bool operator<(const Scalar& a, const Scalar& b);  // arbitrary total order

    std::string str() const;

private:
    void normalize();
    Laurent num_, den_;
};

// the quantum integer [n] = (q^n - q^{-n})/(q - q^{-1})
Scalar qint(int64_t n);

// q - q^{-1} and friends
Scalar q_minus_qinv();

}  // namespace uqgl
