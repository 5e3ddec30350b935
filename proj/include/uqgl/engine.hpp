// The straightening kernel: commutation rules for generator atoms, reduction
// of arbitrary words to the PBW basis F_I F_0^psi K^mu E_0^psi' E_{I'}, and
// multiplication of algebra elements.
//
// Hand-coded rules are the presentation (R1)-(R8), the K-conjugation rules,
// odd nilpotency, the E/F bracket formula, the shared-index and
// nested/crossing commutation identities and the defining splits of the
// derived root vectors.  Commutations of any remaining atom pair are derived
// at first use by expanding the taller root vector and recursing; derived
// rules are cached.  Termination/confluence is not assumed -- the check
// suites exercise soundness (relations and lemma identities reduce to zero,
// associativity probes agree).
#pragma once

#include <mutex>

#include "uqgl/element.hpp"

namespace uqgl {

class Engine : public std::enable_shared_from_this<Engine> {
public:
    static EnginePtr create(int m, int n);

    const Signature& sig() const { return sig_; }
    int rank() const { return sig_.rank(); }

    AlgebraElement zero() const { return AlgebraElement(shared()); }
    AlgebraElement one() const { return scalar(Scalar(1)); }
    AlgebraElement scalar(const Scalar& c) const;
    AlgebraElement atom(const Atom& a) const;
    AlgebraElement monomial_element(const PBWMonomial& m,
                                    const Scalar& c = Scalar(1)) const;
    AlgebraElement torus_element(const std::vector<int>& mu,
                                 const Scalar& c = Scalar(1)) const;

    // normal form of a linear combination of words
    AlgebraElement nf(const std::vector<std::pair<Scalar, Word>>& in) const;
    AlgebraElement nf_word(const Word& w) const;

    AlgebraElement multiply(const AlgebraElement& a,
                            const AlgebraElement& b) const;
    AlgebraElement power(const AlgebraElement& a, int k) const;
    AlgebraElement mul_right_atom(const AlgebraElement& a, const Atom& g) const;
    AlgebraElement mul_left_atom(const Atom& g, const AlgebraElement& a) const;

    // [a,b] = ab - (-1)^{p(a)p(b)} ba, distributed over parity components
    AlgebraElement super_commutator(const AlgebraElement& a,
                                    const AlgebraElement& b) const;
    // bracket of two atoms, normal-formed
    AlgebraElement atom_bracket(const Atom& x, const Atom& y) const;

    // derived root vector via its defining split (c = j-1 when omitted);
    // normal form equals the single PBW atom, which the check suites verify
    AlgebraElement root_vector(Kind kind, int i, int j, int c = -1) const;
    std::vector<std::pair<Scalar, Word>> root_vector_words(Kind kind, int i,
                                                           int j,
                                                           int c = -1) const;
    // expansion all the way down to Chevalley letters (every split at j-1)
    std::vector<std::pair<Scalar, Word>> chevalley_words(Kind kind, int i,
                                                         int j) const;

    // F_{I1} (or E_{I1}) as a single PBW monomial
    PBWMonomial big_odd_monomial(Kind kind) const;
    AlgebraElement big_odd_product(Kind kind) const;
    // F_I / E_I for a subset of I1
    PBWMonomial odd_product_monomial(Kind kind,
                                     std::vector<IndexPair> set) const;

    // atom utilities
    int atom_parity(const Atom& a) const;
    int atom_class(const Atom& a) const;  // 0 Fodd, 1 Feven, 2 K, 3 Eeven, 4 Eodd
    bool pair_in_order(const Atom& x, const Atom& y) const;
    PBWMonomial word_to_monomial(const Word& w) const;

    // number of derived (bootstrap) rules currently cached, plus access for
    // the check suites
    std::vector<std::pair<std::pair<Atom, Atom>, AlgebraElement>>
    cached_rules() const;

private:
    explicit Engine(Signature sig) : sig_(std::move(sig)) {}
    EnginePtr shared() const {
        return std::static_pointer_cast<const Engine>(shared_from_this());
    }

    const AlgebraElement& pair_rule(const Atom& x, const Atom& y) const;
    AlgebraElement compute_rule(const Atom& x, const Atom& y) const;
    AlgebraElement same_side_rule(const Atom& x, const Atom& y) const;
    AlgebraElement bracket_EF(const Atom& x, const Atom& y) const;
    AlgebraElement bootstrap_bracket(const Atom& x, const Atom& y) const;
    AlgebraElement chevalley_bracket(const Atom& x, const Atom& y) const;
    Scalar koszul(const Atom& x, const Atom& y) const;
    Scalar k_conj_coeff(int s, int e, const Atom& g) const;

    Signature sig_;

    struct RuleKey {
        Atom x, y;
        friend bool operator<(const RuleKey& a, const RuleKey& b) {
            if (!(a.x == b.x)) return a.x < b.x;
            return a.y < b.y;
        }
    };
    // derived-rule cache: append-only, guarded for concurrent use
    mutable std::map<RuleKey, AlgebraElement> rules_;
    mutable std::map<RuleKey, bool> in_progress_;
    mutable std::recursive_mutex mtx_;
};

}  // namespace uqgl
