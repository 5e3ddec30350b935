#include "uqgl/scalar.hpp"

#include <sstream>

namespace uqgl {

void Scalar::normalize() {
    if (den_.is_zero()) throw division_by_zero();
    if (num_.is_zero()) {
        den_ = Laurent::one();
        return;
    }
    // split off monomial parts so that both sides are honest polynomials
    Expo mn = num_.min_exponents();
    Expo md = den_.min_exponents();
    Laurent n = num_.shifted(-mn);
    Laurent d = den_.shifted(-md);

    if (!d.is_one()) {
        Laurent g = poly_gcd(n, d);
        if (!g.is_one()) {
            n = poly_exact_div(n, g);
            d = poly_exact_div(d, g);
        }
    }

    // rational scale: integer coefficients, coprime contents, positive
    // leading denominator coefficient
    Rat cn = n.content();
    Rat cd = d.content();
    Rat scale = cn / cd;  // fraction in lowest terms
    n = n.scaled(Rat(1) / cn).scaled(Rat(numerator(scale)));
    d = d.scaled(Rat(1) / cd).scaled(Rat(denominator(scale)));
    if (d.terms().rbegin()->second < 0) {
        n = -n;
        d = -d;
    }
    num_ = n.shifted(mn - md);
    den_ = d;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.normalize();
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ - b.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ - b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.normalize();
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.num_ = a.num_ * b.num_;
    if (a.den_.is_one())
        r.den_ = b.den_;
    else if (b.den_.is_one())
        r.den_ = a.den_;
    else
        r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw division_by_zero();
    Scalar r;
    r.num_ = a.num_ * b.den_;
    r.den_ = a.den_ * b.num_;
    r.normalize();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero();
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

Scalar Scalar::bar() const {
    Scalar r;
    r.num_ = num_.inverted_vars();
    r.den_ = den_.inverted_vars();
    r.normalize();
    return r;
}

Scalar Scalar::pow(int32_t k) const {
    if (k == 0) return Scalar(1);
    Scalar base = k > 0 ? *this : inverse();
    int32_t n = k > 0 ? k : -k;
    Scalar acc(1);
    for (int32_t i = 0; i < n; ++i) acc *= base;
    return acc;
}

Scalar Scalar::subst_t_q_power(size_t i, int32_t k) const {
    Scalar r;
    r.num_ = num_.subst_var_q_power(i, k);
    r.den_ = den_.subst_var_q_power(i, k);
    r.normalize();
    return r;
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (!(a.num_ == b.num_)) {
        return std::lexicographical_compare(
            a.num_.terms().begin(), a.num_.terms().end(),
            b.num_.terms().begin(), b.num_.terms().end(),
            [](const auto& x, const auto& y) {
                if (!(x.first == y.first)) return x.first < y.first;
                return x.second < y.second;
            });
    }
    return std::lexicographical_compare(
        a.den_.terms().begin(), a.den_.terms().end(), b.den_.terms().begin(),
        b.den_.terms().end(), [](const auto& x, const auto& y) {
            if (!(x.first == y.first)) return x.first < y.first;
            return x.second < y.second;
        });
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

Scalar qint(int64_t n) {
    // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
    if (n == 0) return Scalar(0);
    bool neg = n < 0;
    int64_t m = neg ? -n : n;
    Laurent p;
    for (int64_t k = 0; k < m; ++k)
        p += Laurent::q_power((int32_t)(m - 1 - 2 * k));
    Scalar s = Scalar::from_fraction(p, Laurent::one());
    return neg ? -s : s;
}

Scalar q_minus_qinv() {
    return Scalar::from_fraction(Laurent::q_power(1) - Laurent::q_power(-1),
                                 Laurent::one());
}

}  // namespace uqgl
