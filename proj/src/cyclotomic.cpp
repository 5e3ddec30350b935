#include "uqgl/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace uqgl {

namespace {

using Poly = std::vector<Rat>;  // dense, constant term first

void ptrim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly pmul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ptrim(r);
    return r;
}

Poly psub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ptrim(a);
    return a;
}

// division with remainder: a = q*b + r
std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b) {
    Poly q;
    if (b.empty()) throw internal_defect("poly division by zero");
    while (a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        Rat c = a.back() / b.back();
        if (q.size() < shift + 1) q.resize(shift + 1, 0);
        q[shift] += c;
        Poly t(shift, 0);
        t.insert(t.end(), b.begin(), b.end());
        for (auto& x : t) x *= c;
        a = psub(a, t);
    }
    ptrim(q);
    return {q, a};
}

// extended euclid: g = gcd, and u with u*a = g mod b
std::tuple<Poly, Poly> ext_gcd_mod(const Poly& a, const Poly& b) {
    Poly r0 = b, r1 = a;
    Poly u0 = {}, u1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r2] = pdivmod(r0, r1);
        Poly u2 = psub(u0, pmul(q, u1));
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
    }
    return {r0, u0};
}

void mobius_factors(int l, std::vector<int>& plus, std::vector<int>& minus) {
    // divisors d of l with mu(l/d) = +/- 1
    for (int d = 1; d <= l; ++d) {
        if (l % d) continue;
        int m = l / d;
        int mu = 1;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) {
                    mu = 0;
                    break;
                }
                mu = -mu;
            }
        }
        if (mu != 0 && m > 1) mu = -mu;
        if (mu == 1)
            plus.push_back(d);
        else if (mu == -1)
            minus.push_back(d);
    }
}

Poly q_pow_minus_one(int d) {
    Poly p(d + 1, 0);
    p[0] = -1;
    p[(size_t)d] = 1;
    return p;
}

}  // namespace

CycloField::CycloField(int l) : l_(l) {
    if (l < 3 || l % 2 == 0)
        throw invalid_index("root-of-unity order must be odd and >= 3");
    std::vector<int> plus, minus;
    mobius_factors(l, plus, minus);
    Poly num = {Rat(1)};
    for (int d : plus) num = pmul(num, q_pow_minus_one(d));
    Poly den = {Rat(1)};
    for (int d : minus) den = pmul(den, q_pow_minus_one(d));
    auto [q, r] = pdivmod(num, den);
    if (!r.empty()) throw internal_defect("cyclotomic polynomial division");
    phi_ = q;
}

CycloFieldPtr cyclo_field(int l) {
    static std::map<int, CycloFieldPtr> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<CycloField>(l);
    cache[l] = f;
    return f;
}

bool Cyclo::is_zero() const {
    for (auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_one() const {
    if (coeff_.empty()) return false;
    if (coeff_[0] != 1) return false;
    for (size_t i = 1; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) return false;
    return true;
}

Cyclo Cyclo::eta_power(CycloFieldPtr f, int64_t k) {
    int l = f->order();
    int64_t e = ((k % l) + l) % l;
    // q^e mod Phi_l
    Poly p((size_t)e + 1, 0);
    p[(size_t)e] = 1;
    auto [quot, rem] = pdivmod(p, f->modulus());
    (void)quot;
    Cyclo r(f, 0);
    for (size_t i = 0; i < rem.size(); ++i) r.coeff_[i] = rem[i];
    return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    Cyclo r = a;
    for (size_t i = 0; i < r.coeff_.size(); ++i) r.coeff_[i] += b.coeff_[i];
    return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    Cyclo r = a;
    for (size_t i = 0; i < r.coeff_.size(); ++i) r.coeff_[i] -= b.coeff_[i];
    return r;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    Poly pa(a.coeff_.begin(), a.coeff_.end());
    Poly pb(b.coeff_.begin(), b.coeff_.end());
    ptrim(pa);
    ptrim(pb);
    Poly p = pmul(pa, pb);
    auto [quot, rem] = pdivmod(p, a.field_->modulus());
    (void)quot;
    Cyclo r(a.field_, 0);
    for (size_t i = 0; i < rem.size(); ++i) r.coeff_[i] = rem[i];
    return r;
}

Cyclo Cyclo::inverse() const {
    Poly p(coeff_.begin(), coeff_.end());
    ptrim(p);
    if (p.empty()) throw division_by_zero();
    auto [g, u] = ext_gcd_mod(p, field_->modulus());
    // g is a nonzero constant (Phi_l is irreducible over Q)
    if (g.size() != 1) throw internal_defect("cyclotomic inverse: gcd not constant");
    for (auto& c : u) c /= g[0];
    auto [quot, rem] = pdivmod(u, field_->modulus());
    (void)quot;
    Cyclo r(field_, 0);
    for (size_t i = 0; i < rem.size(); ++i) r.coeff_[i] = rem[i];
    return r;
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

Cyclo Cyclo::pow(int64_t k) const {
    Cyclo base = k >= 0 ? *this : inverse();
    int64_t n = k >= 0 ? k : -k;
    Cyclo acc = Cyclo::one(field_);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        Rat c = coeff_[i];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (c != 1 || i == 0) {
            os << c.str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

Cyclo specialize_at_root(const Scalar& s, const CycloFieldPtr& f) {
    if (s.has_t_vars())
        throw error("cannot specialize a scalar containing weight indeterminates");
    int l = f->order();
    auto eval = [&](const Laurent& p) {
        Cyclo acc = Cyclo::zero(f);
        for (auto& [m, c] : p.terms()) {
            int32_t e = m[0];
            acc += Cyclo::eta_power(f, e) * Cyclo(f, c);
        }
        return acc;
    };
    (void)l;
    Cyclo n = eval(s.num());
    Cyclo d = eval(s.den());
    if (d.is_zero()) throw denominator_vanishes_at_root();
    return n / d;
}

}  // namespace uqgl
