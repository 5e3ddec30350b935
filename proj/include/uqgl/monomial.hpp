// PBW basis words F_I F_0^psi K^mu E_0^psi' E_{I'} and their Z2-parity.
//
// Block layout and intra-block factor orders:
//   f_odd : subset of I1, factors ascending in the new order
//   f_even: I0 exponents, factors in descending lexicographic order
//   mu    : K exponents, one per torus index
//   e_even: I0 exponents, factors in ascending lexicographic order
//   e_odd : subset of I1, factors descending in the new order
#pragma once

#include <map>

#include "uqgl/signature.hpp"

namespace uqgl {

struct PBWMonomial {
    std::vector<IndexPair> f_odd;               // ascending new order
    std::vector<std::pair<IndexPair, int>> f_even;  // descending lex
    std::vector<int> mu;                        // size m+n (may be empty = 0)
    std::vector<std::pair<IndexPair, int>> e_even;  // ascending lex
    std::vector<IndexPair> e_odd;               // descending new order

    static PBWMonomial unit(int rank) {
        PBWMonomial m;
        m.mu.assign((size_t)rank, 0);
        return m;
    }

    int parity() const { return (int)((f_odd.size() + e_odd.size()) & 1); }
    bool is_unit() const;
    bool is_torus_only() const {
        return f_odd.empty() && f_even.empty() && e_even.empty() &&
               e_odd.empty();
    }
    bool e_side_empty() const { return e_even.empty() && e_odd.empty(); }
    bool f_side_empty() const { return f_odd.empty() && f_even.empty(); }

    // the U^0-conjugation weight: sum of +(eps_i - eps_j) over E factors,
    // -(eps_i - eps_j) over F factors
    std::vector<int> conjugation_weight(int rank) const;

    Word to_word() const;

    friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) {
        return a.f_odd == b.f_odd && a.f_even == b.f_even && a.mu == b.mu &&
               a.e_even == b.e_even && a.e_odd == b.e_odd;
    }
    friend bool operator<(const PBWMonomial& a, const PBWMonomial& b);

    std::string str() const;
};

}  // namespace uqgl
