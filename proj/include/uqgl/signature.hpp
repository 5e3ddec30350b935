// The combinatorial data of gl(m,n): index sets I0 (even pairs), I1 (odd
// pairs), parities, the q_i convention and the two total orders on pairs.
#pragma once

#include <vector>
#include <string>

#include "uqgl/scalar.hpp"

namespace uqgl {

struct IndexPair {
    int i = 0, j = 0;  // i < j
    friend bool operator==(const IndexPair& a, const IndexPair& b) {
        return a.i == b.i && a.j == b.j;
    }
    friend bool operator!=(const IndexPair& a, const IndexPair& b) {
        return !(a == b);
    }
    friend bool operator<(const IndexPair& a, const IndexPair& b) {
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
    std::string str() const {
        return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
};

// the "new" order on I1 from the Kac-module analysis:
// (i,j) < (s,t) iff j > t, or j = t and i < s
inline bool new_order_lt(const IndexPair& a, const IndexPair& b) {
    if (a.j != b.j) return a.j > b.j;
    return a.i < b.i;
}

enum class Ordering { Less, Equal, Greater };

class Signature {
public:
    Signature(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int rank() const { return m_ + n_; }  // m+n

    const std::vector<IndexPair>& I0() const { return I0_; }
    // in the new order (descending j, ascending i)
    const std::vector<IndexPair>& I1_new_order() const { return I1_; }

    bool in_I1(const IndexPair& p) const { return p.i <= m_ && p.j > m_; }
    bool in_I0(const IndexPair& p) const {
        return valid_pair(p) && !in_I1(p);
    }
    bool valid_pair(const IndexPair& p) const {
        return 1 <= p.i && p.i < p.j && p.j <= rank();
    }
    // parity of E_ij / F_ij
    int parity(const IndexPair& p) const { return in_I1(p) ? 1 : 0; }

    // q_i = q for i <= m, q^{-1} for i > m
    Scalar q_sub(int i) const;
    int q_sub_exp(int i) const {
        check_index(i);
        return i <= m_ ? 1 : -1;
    }
    void check_index(int i) const;

    // the section-5 "first" order on all pairs (as used for E-symbols):
    // I0 before I1, lexicographic within each block
    Ordering order_first_E(const IndexPair& a, const IndexPair& b) const;
    // F-symbols: reverse of the E order
    Ordering order_first_F(const IndexPair& a, const IndexPair& b) const;
    // the "new" order on I1
    Ordering order_new(const IndexPair& a, const IndexPair& b) const;

    // interval subsets of I1 w.r.t. the new order
    std::vector<IndexPair> I1_gt(const IndexPair& x) const;
    std::vector<IndexPair> I1_ge(const IndexPair& x) const;
    std::vector<IndexPair> I1_lt(const IndexPair& x) const;
    std::vector<IndexPair> I1_le(const IndexPair& x) const;
    std::vector<IndexPair> I1_between(const IndexPair& a,
                                      const IndexPair& b) const;

private:
    int m_, n_;
    std::vector<IndexPair> I0_;  // lexicographic
    std::vector<IndexPair> I1_;  // new order
};

// Generator atoms as they appear in words handed to the rewrite engine.
enum class Kind : uint8_t { F = 0, K = 1, E = 2 };

struct Atom {
    Kind kind;
    int i = 0, j = 0;  // root vector indices (i<j); for K: i = torus index
    int kexp = 0;      // K exponent (nonzero); unused for E/F

    static Atom Egen(int i, int j) { return Atom{Kind::E, i, j, 0}; }
    static Atom Fgen(int i, int j) { return Atom{Kind::F, i, j, 0}; }
    static Atom Kgen(int s, int e = 1) { return Atom{Kind::K, s, 0, e}; }

    IndexPair pair() const { return IndexPair{i, j}; }
    friend bool operator==(const Atom& a, const Atom& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j && a.kexp == b.kexp;
    }
    friend bool operator<(const Atom& a, const Atom& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.kexp < b.kexp;
    }
    std::string str() const;
};

using Word = std::vector<Atom>;

}  // namespace uqgl
