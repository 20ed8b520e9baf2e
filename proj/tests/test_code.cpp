#include <gtest/gtest.h>

#include "chaincode/code.hpp"

using namespace chaincode;

namespace {

RingPtr z4() { return make_ring(Family::GaloisRing, 2, 2, 1); }
RingPtr gr43() { return make_ring(Family::GaloisRing, 2, 2, 3); }
RingPtr f2u() { return make_ring(Family::EisensteinU, 2, 2, 1); }

Poly one(const RingPtr& r) { return Poly::constant(r, r->one()); }

}  // namespace

TEST(Code, Z4SingleComponent) {
    auto r = z4();
    auto dec = lemma_fac(r, 1, 2, r->from_int(3));
    ASSERT_EQ(dec.r(), 1);
    EXPECT_EQ(dec.comps[0].f, Poly::from_ints(r, {3, 1}));
    EXPECT_EQ(dec.comps[0].k, Poly::from_ints(r, {1, 0, 0, 0, 1}));
    EXPECT_EQ(mul_gamma(dec.comps[0].g), Poly::from_ints(r, {0, 0, 2}));
}

TEST(Code, NegacyclicGR43) {
    auto r = gr43();
    auto dec = lemma_fac(r, 5, 1, r->from_int(-1));
    ASSERT_EQ(dec.r(), 2);
    EXPECT_FALSE(dec.beta_zero);
    Poly prod = dec.comps[0].k * dec.comps[1].k;
    EXPECT_EQ(prod, Poly::from_ints(r, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(dec.comps[0].k, Poly::from_ints(r, {1, 0, 1}));
    // the unreduced form (x+3)^2 + 2(x^5-2) generates the same k_1
    Poly unreduced = pow(Poly::from_ints(r, {3, 1}), 2) + mul_gamma(Poly::from_ints(r, {-2, 0, 0, 0, 0, 1}));
    EXPECT_TRUE((unreduced % dec.comps[0].k).is_zero());
    EXPECT_EQ(code_count(dec), 25);
    EXPECT_EQ(census(dec, 1).chain, 5u);
    CodeSpec c = crt_compose(dec, {make_ideal(dec, 1, IdealKind::ChainPower, 2, 0, 0, 0, 0, Poly(r)),
                                   make_ideal(dec, 2, IdealKind::ChainPower, 2, 0, 0, 0, 0, Poly(r))});
    EXPECT_EQ(code_size(c), mpz_class(1) << 30);
    EXPECT_EQ(crt_decompose(c).size(), 2u);
}

TEST(Code, CensusCyclicGR43) {
    auto r = gr43();
    auto dec = lemma_fac(r, 5, 1, r->one());
    ASSERT_TRUE(dec.beta_zero);
    auto c = census(dec, 1);
    EXPECT_EQ(c.trivial, 2u);
    EXPECT_EQ(c.type2, 2u);
    EXPECT_EQ(c.type3, 8u);
    EXPECT_EQ(c.type4, 1u);
    EXPECT_EQ(classify_ideals(dec, 1).size(), 13u);
}

TEST(Code, CharPZeroG) {
    auto r = f2u();
    auto dec = lemma_fac(r, 3, 2, r->one());
    for (const auto& c : dec.comps) EXPECT_TRUE(c.g.is_zero());
    EXPECT_EQ(nilpotency_data(dec).index, 4);
}

TEST(Code, Kappa) {
    auto r = f2u();
    auto dec = lemma_fac(r, 1, 2, r->one());
    EXPECT_EQ(kappa(dec, 1, 3, 0, Poly(r)).kappa, 3);
    EXPECT_EQ(kappa(dec, 1, 2, 1, one(r)).kappa, 2);
    auto z = z4();
    auto d4 = lemma_fac(z, 1, 2, z->one());
    EXPECT_EQ(nilpotency_data(d4).index, 6);
    // only gamma*M matters: M = 3 and M = 1 agree
    EXPECT_EQ(mul_gamma(d4.comps[0].M), Poly::from_ints(z, {2}));
    auto kd = kappa(d4, 1, 2, 0, one(z));
    EXPECT_TRUE(kd.A_G.is_zero());
    EXPECT_EQ(kd.kappa, 2);
}

TEST(Code, Sizes) {
    auto r = f2u();
    auto dec = lemma_fac(r, 1, 2, r->one());
    auto iv = make_ideal(dec, 1, IdealKind::TypeIV, 0, 0, 3, 0, 1, Poly(r));
    EXPECT_EQ(ideal_size(dec, iv), 16);
    auto z = z4();
    auto d4 = lemma_fac(z, 1, 2, z->one());
    EXPECT_EQ(ideal_size(d4, make_ideal(d4, 1, IdealKind::TypeII, 0, 0, 0, 0, 0, Poly(z))), 16);
    EXPECT_EQ(ideal_size(d4, make_ideal(d4, 1, IdealKind::Unit, 0, 0, 0, 0, 0, Poly(z))), 256);
    for (auto* d : {&dec, &d4})
        for (const auto& sp : classify_ideals(*d, 1)) EXPECT_EQ(ideal_size(*d, sp), ideal_size_res_tor(*d, sp));
}

TEST(Code, Duals) {
    auto r = f2u();
    auto dec = lemma_fac(r, 1, 2, r->one());
    auto d = dual_ideal(dec, make_ideal(dec, 1, IdealKind::TypeII, 0, 1, 0, 0, 0, Poly(r)));
    ASSERT_EQ(d.gens.size(), 2u);
    EXPECT_EQ(d.gens[0], pow(Poly::from_ints(r, {1, 1}), 3));
    EXPECT_EQ(d.gens[1], Poly::constant(r, r->gamma()));
    EXPECT_EQ(dual_ideal(dec, make_ideal(dec, 1, IdealKind::Zero, 0, 0, 0, 0, 0, Poly(r))).gens.size(), 1u);
    EXPECT_TRUE(dual_ideal(dec, make_ideal(dec, 1, IdealKind::Unit, 0, 0, 0, 0, 0, Poly(r))).gens.empty());
}

TEST(Code, UnitCase) {
    auto z8 = make_ring(Family::GaloisRing, 2, 3, 1);
    auto dec = analyze(z8, 1, 1, z8->from_int(3));
    EXPECT_TRUE(dec.chain());
    EXPECT_EQ(census(dec, 1).chain, 7u);
    auto z = z4();
    EXPECT_THROW(unit_case_decomposition(z, 3, 1, z->from_int(3)), DomainError);
    EXPECT_THROW(analyze(z8, 1, 1, z8->from_int(5)), DomainError);
}

TEST(Code, Isodual) {
    auto z = z4();
    auto dec = lemma_fac(z, 1, 2, z->from_int(3));
    auto fam = isodual_codes(dec);
    ASSERT_EQ(fam.size(), 1u);
    EXPECT_EQ(fam[0].family, "<gamma>");
    auto r = f2u();
    auto d2 = lemma_fac(r, 1, 2, r->one());
    int typeiv = 0;
    for (const auto& c : isodual_codes(d2))
        if (c.code.parts[0].kind == IdealKind::TypeIV) {
            ++typeiv;
            EXPECT_EQ(c.code.parts[0].omega, 3);
        }
    EXPECT_GT(typeiv, 0);
    auto g = gr43();
    EXPECT_THROW(isodual_codes(lemma_fac(g, 5, 1, g->one())), DomainError);
}

TEST(Code, MakeIdealValidation) {
    auto r = f2u();
    auto dec = lemma_fac(r, 1, 2, r->one());
    EXPECT_THROW(make_ideal(dec, 1, IdealKind::TypeII, 0, 4, 0, 0, 0, Poly(r)), DomainError);
    EXPECT_THROW(make_ideal(dec, 1, IdealKind::TypeIV, 0, 0, 2, 0, 2, Poly(r)), DomainError);
    EXPECT_THROW(make_ideal(dec, 1, IdealKind::ChainPower, 1, 0, 0, 0, 0, Poly(r)), DomainError);
    EXPECT_THROW(make_ideal(dec, 2, IdealKind::Zero, 0, 0, 0, 0, 0, Poly(r)), DomainError);
}
