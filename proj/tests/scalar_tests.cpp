#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "uqgl/scalar.hpp"
#include "uqgl/cyclotomic.hpp"

using namespace uqgl;

namespace {

Scalar q() { return Scalar::q_power(1); }
Scalar qinv() { return Scalar::q_power(-1); }

Scalar random_scalar(std::mt19937_64& rng, bool with_t = false) {
    std::uniform_int_distribution<int> coef(-4, 4), ex(-3, 3), nt(1, 3);
    Laurent num, den;
    for (int k = 0; k < 3; ++k) {
        Laurent mono = Laurent::q_power(ex(rng), coef(rng));
        if (with_t) mono *= Laurent::monomial((size_t)nt(rng), ex(rng));
        num += mono;
    }
    for (int k = 0; k < 2; ++k) den += Laurent::q_power(ex(rng), coef(rng));
    if (den.is_zero()) den = Laurent::one();
    return Scalar::from_fraction(num, den);
}

}  // namespace

TEST_CASE("qint basics") {
    CHECK(qint(0) == Scalar(0));
    CHECK(qint(1) == Scalar(1));
    // [2] = q + q^{-1}, frozen from dividing q^2 - q^{-2} by q - q^{-1}
    CHECK(qint(2) == q() + qinv());
    CHECK(qint(-3) == -qint(3));
    // independent route: [n] * (q - q^{-1}) = q^n - q^{-n}
    for (int n = -6; n <= 6; ++n) {
        Scalar lhs = qint(n) * q_minus_qinv();
        Scalar rhs = Scalar::q_power(n) - Scalar::q_power(-n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("field operations and canonical form") {
    Scalar d = q_minus_qinv();
    CHECK(d * d.inverse() == Scalar(1));
    // invert-q fixes symmetric things
    CHECK((q() + qinv()).bar() == q() + qinv());
    // (1+q)/(1-q) + (1+q)/(q-1) = 0
    Scalar one(1);
    Scalar a = (one + q()) / (one - q());
    Scalar b = (one + q()) / (q() - one);
    CHECK((a + b).is_zero());
    // cancellation to canonical form: (q^2-1)/(q-1) = q+1
    Scalar c = (q() * q() - one) / (q() - one);
    CHECK(c == q() + one);
}

TEST_CASE("canonical form uniqueness on random inputs") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(rng, true);
        Scalar b = random_scalar(rng, true);
        if (b.is_zero()) continue;
        Scalar prod = a * b;
        Scalar back = prod / b;
        CHECK(back == a);
        // equality agrees with cross-multiplication
        Scalar x = random_scalar(rng);
        if (!(a == x)) {
            Laurent cross = a.num() * x.den() - x.num() * a.den();
            CHECK(!cross.is_zero());
        }
    }
}

TEST_CASE("invert-q is an involution and field automorphism") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        Scalar a = random_scalar(rng, true);
        Scalar b = random_scalar(rng, true);
        CHECK(a.bar().bar() == a);
        CHECK((a + b).bar() == a.bar() + b.bar());
        CHECK((a * b).bar() == a.bar() * b.bar());
    }
}

TEST_CASE("specialization at a root of unity") {
    auto f3 = cyclo_field(3);
    // q^3 -> 1
    CHECK(specialize_at_root(Scalar::q_power(3), f3).is_one());
    // 1 + q + q^2 -> 0 (the modulus itself)
    Scalar s = Scalar(1) + q() + q() * q();
    CHECK(specialize_at_root(s, f3).is_zero());
    // [l] vanishes at a primitive l-th root
    auto f5 = cyclo_field(5);
    CHECK(specialize_at_root(qint(5), f5).is_zero());
    CHECK(!specialize_at_root(qint(4), f5).is_zero());
    // denominator vanishing is reported
    Scalar bad = Scalar(1) / (Scalar(1) + q() + q() * q());
    CHECK_THROWS_AS(specialize_at_root(bad, f3), denominator_vanishes_at_root);
}

TEST_CASE("specialization is a ring homomorphism on A'") {
    std::mt19937_64 rng(31337);
    auto f5 = cyclo_field(5);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 60; ++trial) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng);
        Cyclo sa = Cyclo::zero(f5), sb = sa;
        try {
            sa = specialize_at_root(a, f5);
            sb = specialize_at_root(b, f5);
        } catch (const denominator_vanishes_at_root&) {
            continue;
        }
        CHECK(specialize_at_root(a + b, f5) == sa + sb);
        CHECK(specialize_at_root(a * b, f5) == sa * sb);
        ++done;
    }
    CHECK(done > 20);
}

TEST_CASE("cyclotomic field arithmetic") {
    auto f5 = cyclo_field(5);
    CHECK(f5->degree() == 4);
    Cyclo eta = Cyclo::eta_power(f5, 1);
    CHECK(eta.pow(5).is_one());
    CHECK(!eta.pow(3).is_one());
    Cyclo x = eta + Cyclo(f5, 2);
    CHECK((x / x).is_one());
    CHECK((x * x.inverse()).is_one());
    // eta^{-1} = eta^{l-1}
    CHECK(eta.inverse() == Cyclo::eta_power(f5, 4));
}
