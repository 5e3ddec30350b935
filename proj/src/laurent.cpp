#include "uqgl/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace uqgl {

Expo Laurent::min_exponents() const {
    Expo r;
    if (terms_.empty()) return r;
    size_t n = nvars();
    r.e.assign(n, 0);
    bool first = true;
    for (auto& [m, c] : terms_) {
        for (size_t v = 0; v < n; ++v) {
            int32_t x = m[v];
            if (first)
                r.e[v] = x;
            else
                r.e[v] = std::min(r.e[v], x);
        }
        first = false;
    }
    r.trim();
    return r;
}

Rat Laurent::content() const {
    Rat g = 0;
    for (auto& [m, c] : terms_) g = rat_gcd(g, c);
    return g;  // nonnegative by construction of rat_gcd
}

int32_t Laurent::degree_in(size_t v) const {
    int32_t d = 0;
    bool first = true;
    for (auto& [m, c] : terms_) {
        int32_t x = m[v];
        d = first ? x : std::max(d, x);
        first = false;
    }
    return d;
}

int32_t Laurent::low_degree_in(size_t v) const {
    int32_t d = 0;
    bool first = true;
    for (auto& [m, c] : terms_) {
        int32_t x = m[v];
        d = first ? x : std::min(d, x);
        first = false;
    }
    return d;
}

Laurent Laurent::subst_var_q_power(size_t v, int32_t k) const {
    Laurent r;
    for (auto& [m, c] : terms_) {
        Expo mm = m;
        if (v < mm.e.size() && mm.e[v] != 0) {
            int32_t ev = mm.e[v];
            mm.e[v] = 0;
            if (mm.e.empty()) mm.e.resize(1, 0);
            mm.e[0] += ev * k;
            mm.trim();
        }
        r.add_term(mm, c);
    }
    return r;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print largest lex term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->second;
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
        const Expo& m = it->first;
        bool have_vars = !m.e.empty();
        if (c != 1 || !have_vars) {
            os << c.str();
            if (have_vars) os << "*";
        }
        bool sep = false;
        for (size_t v = 0; v < m.e.size(); ++v) {
            if (m.e[v] == 0) continue;
            if (sep) os << "*";
            sep = true;
            if (v == 0)
                os << "q";
            else
                os << "t" << v;
            if (m.e[v] != 1) os << "^" << m.e[v];
        }
    }
    return os.str();
}

namespace {

// --- polynomial gcd machinery (exponents >= 0) ---

// smallest variable index occurring in p, or -1 if constant
int main_variable(const Laurent& a, const Laurent& b) {
    size_t n = std::max(a.nvars(), b.nvars());
    for (size_t v = 0; v < n; ++v)
        if (a.has_var(v) || b.has_var(v)) return (int)v;
    return -1;
}

// view p as a dense polynomial in variable v with Laurent coefficients
std::vector<Laurent> collect(const Laurent& p, size_t v) {
    std::vector<Laurent> out;
    if (p.is_zero()) return out;
    out.resize((size_t)p.degree_in(v) + 1);
    for (auto& [m, c] : p.terms()) {
        int32_t d = m[v];
        Expo mm = m;
        if (v < mm.e.size()) {
            mm.e[v] = 0;
            mm.trim();
        }
        out[(size_t)d].add_term(mm, c);
    }
    return out;
}

Laurent assemble(const std::vector<Laurent>& cs, size_t v) {
    Laurent r;
    for (size_t d = 0; d < cs.size(); ++d)
        r += cs[d] * Laurent::monomial(v, (int32_t)d);
    return r;
}

int degv(const std::vector<Laurent>& cs) {
    for (int d = (int)cs.size() - 1; d >= 0; --d)
        if (!cs[d].is_zero()) return d;
    return -1;
}

// sign-and-scale normalization: integer-primitive, lex-leading coeff > 0
Laurent normalize_primitive(const Laurent& p) {
    if (p.is_zero()) return p;
    Rat c = p.content();
    Laurent r = p.scaled(Rat(1) / c);
    // leading (lex-largest) coefficient sign
    if (r.terms().rbegin()->second < 0) r = -r;
    return r;
}

// A pseudo-remainder of a by b in variable v (some lc(b)-power times a,
// reduced below deg b).  The PRS below re-primitivizes right away, so any
// member of that class works.
Laurent pseudo_rem(const Laurent& a, const Laurent& b, size_t v) {
    std::vector<Laurent> B = collect(b, v);
    int db = degv(B);
    if (db < 0) throw internal_defect("pseudo_rem by zero");
    const Laurent& lb = B[(size_t)db];
    std::vector<Laurent> R = collect(a, v);
    int dr = degv(R);
    while (dr >= db) {
        Laurent lead = R[(size_t)dr];
        // R := lb*R - lead * x^(dr-db) * B
        for (auto& c : R) c *= lb;
        for (int i = 0; i <= db; ++i)
            R[(size_t)(dr - db + i)] -= lead * B[(size_t)i];
        R.resize((size_t)dr);  // leading entry is now zero by construction
        dr = degv(R);
    }
    return assemble(R, v);
}

}  // namespace

Laurent poly_exact_div(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw internal_defect("exact division by zero");
    if (a.is_zero()) return a;
    Laurent rem = a, quot;
    const Expo bm = b.terms().rbegin()->first;  // lex-leading monomial of b
    const Rat bc = b.terms().rbegin()->second;
    while (!rem.is_zero()) {
        Expo rm = rem.terms().rbegin()->first;
        Rat rc = rem.terms().rbegin()->second;
        Laurent t = Laurent::monomial(0, 0, rc / bc).shifted(rm - bm);
        quot += t;
        rem -= t * b;
        if (!rem.is_zero() && !(rem.terms().rbegin()->first < rm))
            throw internal_defect("non-exact polynomial division");
    }
    return quot;
}

Laurent poly_gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    int v = main_variable(a, b);
    if (v < 0) return Laurent::one();  // both constants

    // content/primitive split w.r.t. v
    auto content_v = [&](const Laurent& p) {
        std::vector<Laurent> cs = collect(p, (size_t)v);
        Laurent g;
        for (auto& c : cs) {
            if (c.is_zero()) continue;
            g = poly_gcd(g, c);
            if (g.is_one()) break;
        }
        return g.is_zero() ? Laurent::one() : g;
    };
    Laurent ca = content_v(a), cb = content_v(b);
    Laurent pa = poly_exact_div(a, ca), pb = poly_exact_div(b, cb);
    Laurent cg = poly_gcd(ca, cb);

    // primitive PRS in variable v
    if (pa.degree_in((size_t)v) < pb.degree_in((size_t)v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Laurent r = pseudo_rem(pa, pb, (size_t)v);
        pa = pb;
        if (r.is_zero()) {
            pb = Laurent::zero();
        } else {
            // primitive part of r w.r.t. v
            Laurent cr = content_v(r);
            pb = poly_exact_div(r, cr);
            pb = normalize_primitive(pb);
        }
    }
    return normalize_primitive(cg * pa);
}

}  // namespace uqgl
