#include "uqgl/monomial.hpp"

#include <sstream>

namespace uqgl {

bool PBWMonomial::is_unit() const {
    if (!is_torus_only()) return false;
    for (int x : mu)
        if (x != 0) return false;
    return true;
}

std::vector<int> PBWMonomial::conjugation_weight(int rank) const {
    std::vector<int> w((size_t)rank, 0);
    auto add = [&](const IndexPair& p, int sgn) {
        w[(size_t)p.i - 1] += sgn;
        w[(size_t)p.j - 1] -= sgn;
    };
    for (auto& p : f_odd) add(p, -1);
    for (auto& [p, e] : f_even) add(p, -e);
    for (auto& [p, e] : e_even) add(p, +e);
    for (auto& p : e_odd) add(p, +1);
    return w;
}

Word PBWMonomial::to_word() const {
    Word w;
    for (auto& p : f_odd) w.push_back(Atom::Fgen(p.i, p.j));
    for (auto& [p, e] : f_even)
        for (int k = 0; k < e; ++k) w.push_back(Atom::Fgen(p.i, p.j));
    for (size_t s = 0; s < mu.size(); ++s)
        if (mu[s] != 0) w.push_back(Atom::Kgen((int)s + 1, mu[s]));
    for (auto& [p, e] : e_even)
        for (int k = 0; k < e; ++k) w.push_back(Atom::Egen(p.i, p.j));
    for (auto& p : e_odd) w.push_back(Atom::Egen(p.i, p.j));
    return w;
}

bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
    if (a.f_odd != b.f_odd) return a.f_odd < b.f_odd;
    if (a.f_even != b.f_even) return a.f_even < b.f_even;
    if (a.mu != b.mu) return a.mu < b.mu;
    if (a.e_even != b.e_even) return a.e_even < b.e_even;
    return a.e_odd < b.e_odd;
}

std::string PBWMonomial::str() const {
    std::ostringstream os;
    bool sep = false;
    auto emit = [&](const std::string& s) {
        if (sep) os << "*";
        os << s;
        sep = true;
    };
    for (auto& p : f_odd) emit(Atom::Fgen(p.i, p.j).str());
    for (auto& [p, e] : f_even) {
        std::string s = Atom::Fgen(p.i, p.j).str();
        if (e != 1) s += "^" + std::to_string(e);
        emit(s);
    }
    for (size_t s = 0; s < mu.size(); ++s)
        if (mu[s] != 0) emit(Atom::Kgen((int)s + 1, mu[s]).str());
    for (auto& [p, e] : e_even) {
        std::string s = Atom::Egen(p.i, p.j).str();
        if (e != 1) s += "^" + std::to_string(e);
        emit(s);
    }
    for (auto& p : e_odd) emit(Atom::Egen(p.i, p.j).str());
    if (!sep) return "1";
    return os.str();
}

}  // namespace uqgl
