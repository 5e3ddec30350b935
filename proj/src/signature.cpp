#include "uqgl/signature.hpp"

#include <algorithm>

namespace uqgl {

Signature::Signature(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1) throw invalid_index("signature requires m,n >= 1");
    for (int i = 1; i <= m + n; ++i)
        for (int j = i + 1; j <= m + n; ++j) {
            IndexPair p{i, j};
            if (in_I1(p))
                I1_.push_back(p);
            else
                I0_.push_back(p);
        }
    std::sort(I1_.begin(), I1_.end(), new_order_lt);
    // I0_ is lexicographic by construction
}

Scalar Signature::q_sub(int i) const {
    check_index(i);
    return Scalar::q_power(i <= m_ ? 1 : -1);
}

void Signature::check_index(int i) const {
    if (i < 1 || i > rank())
        throw invalid_index("index " + std::to_string(i) + " out of range [1," +
                            std::to_string(rank()) + "]");
}

Ordering Signature::order_first_E(const IndexPair& a, const IndexPair& b) const {
    if (a == b) return Ordering::Equal;
    int ba = parity(a), bb = parity(b);
    if (ba != bb) return ba < bb ? Ordering::Less : Ordering::Greater;
    return a < b ? Ordering::Less : Ordering::Greater;
}

Ordering Signature::order_first_F(const IndexPair& a, const IndexPair& b) const {
    Ordering o = order_first_E(a, b);
    if (o == Ordering::Less) return Ordering::Greater;
    if (o == Ordering::Greater) return Ordering::Less;
    return Ordering::Equal;
}

Ordering Signature::order_new(const IndexPair& a, const IndexPair& b) const {
    if (a == b) return Ordering::Equal;
    return new_order_lt(a, b) ? Ordering::Less : Ordering::Greater;
}

std::vector<IndexPair> Signature::I1_gt(const IndexPair& x) const {
    std::vector<IndexPair> r;
    for (auto& p : I1_)
        if (new_order_lt(x, p)) r.push_back(p);
    return r;
}

std::vector<IndexPair> Signature::I1_ge(const IndexPair& x) const {
    std::vector<IndexPair> r;
    for (auto& p : I1_)
        if (p == x || new_order_lt(x, p)) r.push_back(p);
    return r;
}

std::vector<IndexPair> Signature::I1_lt(const IndexPair& x) const {
    std::vector<IndexPair> r;
    for (auto& p : I1_)
        if (new_order_lt(p, x)) r.push_back(p);
    return r;
}

std::vector<IndexPair> Signature::I1_le(const IndexPair& x) const {
    std::vector<IndexPair> r;
    for (auto& p : I1_)
        if (p == x || new_order_lt(p, x)) r.push_back(p);
    return r;
}

std::vector<IndexPair> Signature::I1_between(const IndexPair& a,
                                             const IndexPair& b) const {
    std::vector<IndexPair> r;
    for (auto& p : I1_)
        if (new_order_lt(a, p) && new_order_lt(p, b)) r.push_back(p);
    return r;
}

std::string Atom::str() const {
    switch (kind) {
        case Kind::E:
            return "E[" + std::to_string(i) + "," + std::to_string(j) + "]";
        case Kind::F:
            return "F[" + std::to_string(i) + "," + std::to_string(j) + "]";
        case Kind::K: {
            std::string s = "K[" + std::to_string(i) + "]";
            if (kexp != 1) s += "^" + std::to_string(kexp);
            return s;
        }
    }
    return "?";
}

}  // namespace uqgl
