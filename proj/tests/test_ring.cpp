#include <gtest/gtest.h>

#include <set>

#include "chaincode/ring.hpp"

using namespace chaincode;

TEST(Ring, Z4Arithmetic) {
    auto r = make_ring(Family::GaloisRing, 2, 2, 1);
    EXPECT_EQ(r->size(), 4u);
    EXPECT_EQ(r->mul({3}, {3}), RingElem{1});
    EXPECT_EQ(r->add({2}, {2}), RingElem{0});
    EXPECT_EQ(r->inverse({3}), RingElem{3});
    EXPECT_THROW(r->inverse({2}), NonUnit);
    auto d = r->gamma_adic({3});
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0], RingElem{1});
    EXPECT_EQ(d[1], RingElem{1});
    EXPECT_EQ(r->name(), "Z_4");
}

TEST(Ring, EisensteinSquares) {
    auto r = make_ring(Family::EisensteinU, 2, 2, 1);
    RingElem one_plus_u = r->add(r->one(), r->gamma());
    EXPECT_EQ(r->mul(one_plus_u, one_plus_u), r->one());
    EXPECT_EQ(r->characteristic(), 2u);
    EXPECT_EQ(r->mul(r->gamma(), r->gamma()), r->zero());
}

TEST(Ring, TeichmullerSets) {
    auto z9 = make_ring(Family::GaloisRing, 3, 2, 1);
    auto t = z9->teichmuller_set();
    std::set<std::uint32_t> codes;
    for (auto x : t) codes.insert(x.code);
    EXPECT_EQ(codes, (std::set<std::uint32_t>{0, 1, 8}));

    auto gr = make_ring(Family::GaloisRing, 2, 2, 3);
    auto tg = gr->teichmuller_set();
    std::set<std::uint32_t> seen;
    for (auto x : tg) {
        EXPECT_EQ(gr->pow(x, 8), x);
        seen.insert(x.code);
    }
    EXPECT_EQ(seen.size(), 8u);
}

TEST(Ring, TeichRoot) {
    auto gr = make_ring(Family::GaloisRing, 2, 2, 3);
    RingElem z = gr->zeta();
    EXPECT_EQ(gr->teich_root(gr->pow(z, 3), 1), gr->pow(z, 5));
    for (auto a : gr->teichmuller_set()) {
        if (a.code == 0) continue;
        for (int s = 1; s <= 3; ++s) EXPECT_EQ(gr->pow(gr->teich_root(a, s), 1u << s), a);
    }
}

TEST(Ring, DecomposeZ8) {
    auto z8 = make_ring(Family::GaloisRing, 2, 3, 1);
    auto d = z8->decompose_unit({3});
    EXPECT_EQ(d.head, RingElem{1});
    EXPECT_EQ(d.tail, RingElem{1});
    EXPECT_TRUE(d.tail_is_unit);
    EXPECT_EQ(z8->add(d.head, z8->mul(z8->gamma(), d.tail)), RingElem{3});
}

TEST(Ring, InverseAndDigitsRoundTrip) {
    for (auto fam : {Family::GaloisRing, Family::EisensteinU})
        for (auto [p, e, m] : std::vector<std::tuple<int, int, int>>{{2, 2, 3}, {3, 2, 2}, {2, 3, 2}, {5, 2, 1}}) {
            auto r = make_ring(fam, p, e, m);
            for (std::uint32_t c = 0; c < r->size(); ++c) {
                RingElem a{c};
                EXPECT_EQ(r->from_digits(r->gamma_adic(a)), a);
                if (r->is_unit(a)) EXPECT_EQ(r->mul(a, r->inverse(a)), r->one());
                EXPECT_EQ(r->valuation(a) == 0, r->is_unit(a));
            }
        }
}

TEST(Ring, FieldNotOfCharP2) {
    auto gr = make_ring(Family::GaloisRing, 2, 2, 2);
    EXPECT_EQ(gr->mul(gr->gamma(), gr->z()), gr->from_int(2));
    EXPECT_EQ(gr->field()->size(), 4u);
    EXPECT_EQ(gr->field()->field()->size(), 4u);
}

TEST(Ring, Rejects) {
    EXPECT_THROW(make_ring(Family::GaloisRing, 4, 2, 1), DomainError);
    EXPECT_THROW(make_ring(Family::GaloisRing, 2, 1, 1), DomainError);
    EXPECT_THROW(make_ring(Family::GaloisRing, 2, 2, 2, {1, 0, 1}), DomainError);
    EXPECT_THROW(make_ring(Family::GaloisRing, 2, 13, 2), DomainError);
}
