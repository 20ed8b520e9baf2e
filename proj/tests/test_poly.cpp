#include <gtest/gtest.h>

#include <random>

#include "chaincode/poly.hpp"

using namespace chaincode;

namespace {

RingPtr z4() { return make_ring(Family::GaloisRing, 2, 2, 1); }
RingPtr gr43() { return make_ring(Family::GaloisRing, 2, 2, 3); }

Poly random_poly(const RingPtr& r, int deg, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, r->size() - 1);
    std::vector<RingElem> v(deg + 1);
    for (auto& c : v) c = {d(rng)};
    if (v.back().code == 0) v.back() = r->one();
    return Poly(r, v);
}

}  // namespace

TEST(Poly, X5MinusOneOverZ4) {
    auto r = z4();
    Poly a = Poly::from_ints(r, {3, 1});
    Poly b = Poly::from_ints(r, {1, 1, 1, 1, 1});
    EXPECT_EQ(a * b, Poly::from_ints(r, {3, 0, 0, 0, 0, 1}));
    EXPECT_EQ((a * b).to_string(), "x^5+3");
}

TEST(Poly, DivmodAndReduce) {
    auto r = z4();
    auto [q, rem] = divmod_monic(Poly::from_ints(r, {3, 2, 1}), Poly::from_ints(r, {1, 1}));
    EXPECT_EQ(q, Poly::from_ints(r, {1, 1}));
    EXPECT_EQ(rem, Poly::from_ints(r, {2}));
    EXPECT_THROW(divmod_monic(q, Poly::from_ints(r, {1, 3})), DomainError);
    // x^5 mod (x^4 - 3)
    EXPECT_EQ(mod_reduce(Poly::monomial(r, r->one(), 5), 4, r->from_int(3)), Poly::from_ints(r, {0, 3}));
}

TEST(Poly, Reciprocal) {
    auto r = z4();
    EXPECT_EQ(reciprocal(Poly::from_ints(r, {3, 1})), Poly::from_ints(r, {1, 3}));
    EXPECT_EQ(reciprocal(Poly::from_ints(r, {3, 2, 1})), Poly::from_ints(r, {1, 2, 3}));
    EXPECT_TRUE(reciprocal(Poly(r)).is_zero());
}

TEST(Poly, ReciprocalProductAndSumRules) {
    std::mt19937 rng(7);
    for (auto r : {z4(), gr43(), make_ring(Family::EisensteinU, 2, 2, 1)}) {
        for (int it = 0; it < 50; ++it) {
            Poly f = random_poly(r, 1 + it % 5, rng), g = random_poly(r, it % 4, rng);
            Poly fg = f * g;
            if (!fg.is_zero()) {
                int sh = f.degree() + g.degree() - fg.degree();
                EXPECT_EQ(reciprocal(f) * reciprocal(g), shift(reciprocal(fg), sh));
            }
            if (f.degree() > g.degree()) {
                EXPECT_EQ(reciprocal(f + g), reciprocal(f) + shift(reciprocal(g), f.degree() - g.degree()));
            }
        }
    }
}

TEST(Factor, X5MinusOne) {
    for (auto F : {z4()->field(), gr43()->field()}) {
        auto fs = factor_xn_minus_a(5, F->one(), F);
        ASSERT_EQ(fs.size(), 2u);
        EXPECT_EQ(fs[0], Poly::from_ints(F, {1, 1}));
        EXPECT_EQ(fs[1], Poly::from_ints(F, {1, 1, 1, 1, 1}));
    }
    auto F = z4()->field();
    auto one = factor_xn_minus_a(1, F->one(), F);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], Poly::from_ints(F, {1, 1}));
    EXPECT_THROW(factor_xn_minus_a(4, F->one(), F), DomainError);
}

TEST(Factor, ProductsAndIrreducibility) {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
        auto F = make_ring(Family::GaloisRing, p, 2, m)->field();
        for (int n = 1; n <= 21; ++n) {
            if (n % p == 0) continue;
            for (RingElem a : {F->one(), F->zeta()}) {
                auto fs = factor_xn_minus_a(n, a, F);
                Poly prod = Poly::constant(F, F->one());
                for (auto& f : fs) {
                    EXPECT_TRUE(f.is_monic());
                    auto again = factor_squarefree(f);
                    EXPECT_EQ(again.size(), 1u);
                    prod = prod * f;
                }
                EXPECT_EQ(prod, Poly::monomial(F, F->one(), n) - Poly::constant(F, a));
                EXPECT_EQ(fs, factor_xn_minus_a(n, a, F));
            }
        }
    }
}

TEST(Factor, HenselX5MinusOne) {
    auto r = z4();
    auto fs = factor_xn_minus_a(5, r->field()->one(), r->field());
    auto lifted = hensel_lift(fs, Poly::from_ints(r, {-1, 0, 0, 0, 0, 1}));
    ASSERT_EQ(lifted.size(), 2u);
    EXPECT_EQ(lifted[0], Poly::from_ints(r, {3, 1}));
    EXPECT_EQ(lifted[1], Poly::from_ints(r, {1, 1, 1, 1, 1}));
}

TEST(Factor, HenselExactProducts) {
    for (auto fam : {Family::GaloisRing, Family::EisensteinU})
        for (auto [p, e, m] : std::vector<std::tuple<int, int, int>>{{2, 2, 3}, {2, 3, 1}, {3, 2, 2}, {2, 4, 2}}) {
            auto r = make_ring(fam, p, e, m);
            for (int n : {3, 5, 7, 9, 15}) {
                if (n % p == 0) continue;
                RingElem a0 = r->zeta();
                auto fs = factor_xn_minus_a(n, r->residue(a0), r->field());
                Poly target = Poly::monomial(r, r->one(), n) - Poly::constant(r, a0);
                auto lifted = hensel_lift(fs, target);
                ASSERT_EQ(lifted.size(), fs.size());
                for (std::size_t j = 0; j < fs.size(); ++j) EXPECT_EQ(residue(lifted[j]), fs[j]);
            }
        }
}

TEST(Factor, Bezout) {
    auto r = z4();
    auto [a1, a2] = bezout(Poly::from_ints(r, {0, 1}), Poly::from_ints(r, {1, 1}));
    EXPECT_EQ(a1, Poly::from_ints(r, {3}));
    EXPECT_EQ(a2, Poly::from_ints(r, {1}));
    Poly k1 = Poly::from_ints(r, {3, 1}), k2 = Poly::from_ints(r, {1, 1, 1, 1, 1});
    auto [b1, b2] = bezout(k1, k2);
    EXPECT_EQ(k1 * b1 + k2 * b2, Poly::from_ints(r, {1}));
    EXPECT_LT(b1.degree(), k2.degree());
    auto [c1, c2] = bezout(Poly::from_ints(r, {1}), k2);
    EXPECT_EQ(c1, Poly::from_ints(r, {1}));
    EXPECT_TRUE(c2.is_zero());
    EXPECT_THROW(bezout(Poly::from_ints(r, {1, 1}), Poly::from_ints(r, {3, 1})), NotCoprime);
    // squares of coprime factors over a ring with e = 3
    auto z8 = make_ring(Family::GaloisRing, 2, 3, 1);
    Poly u = pow(Poly::from_ints(z8, {1, 1}), 4), v = pow(Poly::from_ints(z8, {1, 0, 1, 1}), 4);
    auto [d1, d2] = bezout(Poly::from_ints(z8, {1, 1, 1}), v);
    (void)u;
    EXPECT_EQ(Poly::from_ints(z8, {1, 1, 1}) * d1 + v * d2, Poly::from_ints(z8, {1}));
}

TEST(Factor, BinomData) {
    auto r = z4();
    auto d = binom_data(2, 2, r);
    EXPECT_EQ(d.valuation[2], 1);
    EXPECT_EQ(d.valuation[1], 2);
    EXPECT_EQ(d.a[1], RingElem{3});
    auto z9 = make_ring(Family::GaloisRing, 3, 2, 1);
    auto d3 = binom_data(3, 1, z9);
    EXPECT_EQ(d3.a[1], RingElem{1});
    EXPECT_EQ(d3.a[2], RingElem{1});
}
