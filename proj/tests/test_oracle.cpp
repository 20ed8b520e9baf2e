#include <gtest/gtest.h>

#include <set>

#include "chaincode/oracle.hpp"

using namespace chaincode;

namespace {

RingPtr z4() { return make_ring(Family::GaloisRing, 2, 2, 1); }
RingPtr f2u() { return make_ring(Family::EisensteinU, 2, 2, 1); }

std::vector<long long> as_ll(const WeightDist& w) {
    std::vector<long long> v;
    for (const auto& x : w) v.push_back(x.get_si());
    return v;
}

Poly xn_minus(const RingPtr& r, int n, long long c) {
    return Poly::monomial(r, r->one(), n) - Poly::constant(r, r->from_int(c));
}

}  // namespace

TEST(Oracle, Z4ConstacyclicLengthFour) {
    auto r = z4();
    Poly f = Poly::from_ints(r, {3, 1});
    auto bfs = enumerate_ideal({f}, 4, r->from_int(3));
    EXPECT_EQ(bfs.size(), 128u);
    EXPECT_EQ(as_ll(rt_histogram(bfs)), (std::vector<long long>{1, 1, 6, 24, 96}));
    auto C = Submodule::ideal(r, xn_minus(r, 4, 3), {f});
    EXPECT_EQ(C.size(), 128);
    EXPECT_EQ(as_ll(C.rt_histogram()), (std::vector<long long>{1, 1, 6, 24, 96}));
    EXPECT_EQ(C.elements().words, bfs.words);
    auto C2 = Submodule::ideal(r, xn_minus(r, 4, 3), {pow(f, 2)});
    EXPECT_EQ(as_ll(C2.rt_histogram()), (std::vector<long long>{1, 1, 2, 12, 48}));
    EXPECT_EQ(min_hamming(enumerate_ideal({pow(f, 7)}, 4, r->from_int(3))), 4);
    for (int nu = 0; nu <= 8; ++nu) {
        auto I = Submodule::ideal(r, xn_minus(r, 4, 3), {pow(f, nu)});
        EXPECT_EQ(I.min_hamming(1, 1u << 20), I.min_hamming()) << nu;
    }
    EXPECT_EQ(min_hamming(enumerate_ideal({Poly(r)}, 4, r->from_int(3))), 0);
    EXPECT_EQ(enumerate_ideal({Poly::constant(r, r->one())}, 3, r->one()).size(), 64u);
    EXPECT_THROW(enumerate_ideal({Poly::constant(r, r->one())}, 4, r->one(), 100), CapExceeded);
}

TEST(Oracle, DualsAgree) {
    auto r = f2u();
    auto C = Submodule::ideal(r, xn_minus(r, 2, 1), {Poly::constant(r, r->gamma())});
    auto scan = dual_by_scan(C.elements());
    auto D = dual_inner_product(C, r->one());
    EXPECT_EQ(D.elements().words, scan.words);
    EXPECT_EQ(D, C);
    EXPECT_EQ(dual_from_ann(annihilator(C), r->one()), D);

    auto z = z4();
    Poly m = xn_minus(z, 4, 3);
    for (int nu = 0; nu <= 8; ++nu) {
        auto I = Submodule::ideal(z, m, {pow(Poly::from_ints(z, {3, 1}), nu)});
        auto Di = dual_inner_product(I, z->from_int(3));
        EXPECT_EQ(dual_from_ann(annihilator(I), z->from_int(3)), Di);
        EXPECT_EQ(I.size() * Di.size(), 256);
        EXPECT_TRUE(Di.is_ideal());
        EXPECT_EQ(Di.elements().words, dual_by_scan(I.elements()).words);
    }
    auto zero = Submodule(z, m);
    EXPECT_EQ(annihilator(zero), Submodule::whole(z, m));
    EXPECT_TRUE(annihilator(Submodule::whole(z, m)).is_zero());
}

TEST(Oracle, IntersectAndMembership) {
    auto z = z4();
    Poly m = xn_minus(z, 4, 1);
    Poly f = Poly::from_ints(z, {3, 1});
    auto A = Submodule::ideal(z, m, {pow(f, 2)});
    auto B = Submodule::ideal(z, m, {Poly::constant(z, z->from_int(2))});
    auto AB = A.intersect(B);
    for (const auto& w : Submodule::whole(z, m).elements().words) {
        Poly p(z, w);
        EXPECT_EQ(AB.contains(p), A.contains(p) && B.contains(p));
    }
}

TEST(Oracle, CensusGR43) {
    auto g = make_ring(Family::GaloisRing, 2, 2, 3);
    auto dec = lemma_fac(g, 5, 1, g->one());
    auto ideals = all_ideals(g, dec.comps[0].k);
    EXPECT_EQ(ideals.size(), 13u);
    std::set<std::string> oracle, formula;
    for (const auto& I : ideals) oracle.insert(I.key());
    for (const auto& sp : classify_ideals(dec, 1))
        formula.insert(Submodule::ideal(g, dec.comps[0].k, component_generators(dec, sp)).key());
    EXPECT_EQ(oracle, formula);
}

TEST(Oracle, KappaGrid) {
    for (auto r : {z4(), f2u()})
        for (int s = 1; s <= 2; ++s) {
            auto dec = lemma_fac(r, 1, s, r->one());
            for (const auto& sp : classify_ideals(dec, 1))
                if (sp.kind == IdealKind::TypeIII)
                    EXPECT_EQ(kappa_bruteforce(dec, 1, sp.omega, sp.t, sp.G), sp.kappa)
                        << r->name() << " s=" << s << " omega=" << sp.omega << " t=" << sp.t << " G=" << sp.G.to_string();
        }
}

TEST(Oracle, BinomValuation) {
    for (int p : {2, 3, 5})
        for (int l = 1; l <= 4; ++l) {
            long long P = 1;
            for (int i = 0; i < l; ++i) P *= p;
            for (long long b = 1; b < P; ++b) EXPECT_EQ(binom_valuation_oracle(p, l, b), binom_valuation(p, l, b));
        }
}

TEST(Oracle, VerifyReport) {
    auto z = z4();
    auto dec = analyze(z, 1, 2, z->from_int(3));
    auto code = crt_compose(dec, {make_ideal(dec, 1, IdealKind::ChainPower, 1, 0, 0, 0, 0, Poly(z))});
    auto rep = verify_report(code);
    EXPECT_TRUE(rep.pass()) << rep.to_json().dump(1);
    auto f = formula_values(code);
    f.size += 1;
    auto bad = verify_values(code, f);
    EXPECT_FALSE(bad.pass());

    auto r = f2u();
    auto d2 = lemma_fac(r, 1, 2, r->one());
    auto iv = crt_compose(d2, {make_ideal(d2, 1, IdealKind::TypeIV, 0, 0, 3, 0, 1, Poly(r))});
    auto rep2 = verify_report(iv);
    EXPECT_TRUE(rep2.pass()) << rep2.to_json().dump(1);
}
