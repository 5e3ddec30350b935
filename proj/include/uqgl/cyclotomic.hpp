// Exact arithmetic in the cyclotomic field Q(eta), eta a primitive l-th
// root of unity: polynomials in q reduced modulo the l-th cyclotomic
// polynomial.
#pragma once

#include <memory>
#include <vector>
#include <string>

#include "uqgl/scalar.hpp"

namespace uqgl {

class CycloField {
public:
    explicit CycloField(int l);
    int order() const { return l_; }
    int degree() const { return (int)phi_.size() - 1; }
    const std::vector<Rat>& modulus() const { return phi_; }

private:
    int l_;
    std::vector<Rat> phi_;  // coefficients of Phi_l, constant term first
};

using CycloFieldPtr = std::shared_ptr<const CycloField>;

CycloFieldPtr cyclo_field(int l);

class Cyclo {
public:
    Cyclo() = default;
    Cyclo(CycloFieldPtr f, Rat c) : field_(std::move(f)) {
        coeff_.assign((size_t)field_->degree(), 0);
        if (!coeff_.empty()) coeff_[0] = c;
        trimmed_ = (c == 0);
        reduce_flags();
    }

    static Cyclo zero(CycloFieldPtr f) { return Cyclo(std::move(f), 0); }
    static Cyclo one(CycloFieldPtr f) { return Cyclo(std::move(f), 1); }
    // eta^k
    static Cyclo eta_power(CycloFieldPtr f, int64_t k);

    const CycloFieldPtr& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
    Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
    Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }
    Cyclo& operator/=(const Cyclo& b) { return *this = *this / b; }
    Cyclo inverse() const;
    Cyclo pow(int64_t k) const;

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        return a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
    friend bool operator<(const Cyclo& a, const Cyclo& b) {
        return a.coeff_ < b.coeff_;
    }

    std::string str() const;

private:
    void reduce_flags() {}
    CycloFieldPtr field_;
    std::vector<Rat> coeff_;  // size = degree of Phi_l
    bool trimmed_ = false;
};

// image of a t-free Scalar under q -> eta; throws
// denominator_vanishes_at_root when outside the local ring A'.
Cyclo specialize_at_root(const Scalar& s, const CycloFieldPtr& f);

}  // namespace uqgl
