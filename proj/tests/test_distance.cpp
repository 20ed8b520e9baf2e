#include <gtest/gtest.h>

#include "chaincode/distance.hpp"

using namespace chaincode;

namespace {

std::vector<long long> as_ll(const WeightDist& w) {
    std::vector<long long> v;
    for (const auto& x : w) v.push_back(x.get_si());
    return v;
}

}  // namespace

TEST(Distance, FieldTable) {
    EXPECT_EQ(d_H_field(0, 2, 2), 1);
    EXPECT_EQ(d_H_field(3, 2, 2), 4);
    EXPECT_EQ(d_H_field(2, 2, 2), 2);
    EXPECT_EQ(d_H_field(4, 2, 2), 0);
    // s = 1 leaves only the l+2 branch
    EXPECT_EQ(d_H_field(2, 3, 1), 3);
    EXPECT_THROW(d_H_field(5, 2, 2), DomainError);
    for (int p : {2, 3, 5})
        for (int s = 1; s <= 3; ++s) {
            long long P = 1;
            for (int i = 0; i < s; ++i) P *= p;
            for (long long u = 1; u + 1 < P; ++u) EXPECT_LE(d_H_field(u, p, s), d_H_field(u + 1, p, s));
        }
}

TEST(Distance, Unit) {
    EXPECT_EQ(d_H_unit(4, 2, 2, 2), 1);
    EXPECT_EQ(d_H_unit(7, 2, 2, 2), 4);
    EXPECT_EQ(d_H_unit(8, 2, 2, 2), 0);
    EXPECT_EQ(d_RT_unit(6, 2, 2, 2, 1), 3);
    EXPECT_EQ(d_RT_unit(3, 2, 2, 2, 1), 1);
    EXPECT_EQ(d_RT_unit(8, 2, 2, 2, 1), 0);
}

TEST(Distance, RtDistributionRegression) {
    EXPECT_EQ(as_ll(rt_wdist_unit(1, 2, 2, 2, 1, 1)), (std::vector<long long>{1, 1, 6, 24, 96}));
    EXPECT_EQ(as_ll(rt_wdist_unit(2, 2, 2, 2, 1, 1)), (std::vector<long long>{1, 1, 2, 12, 48}));
    EXPECT_EQ(as_ll(rt_wdist_unit(8, 2, 2, 2, 1, 1)), (std::vector<long long>{1, 0, 0, 0, 0}));
}

TEST(Distance, SumsMatchSizes) {
    for (int e = 2; e <= 4; ++e)
        for (int p : {2, 3})
            for (int s = 1; s <= 2; ++s)
                for (int n : {1, 2})
                    for (int m : {1, 2}) {
                        long long P = 1;
                        for (int i = 0; i < s; ++i) P *= p;
                        for (long long nu = 0; nu <= e * P; ++nu) {
                            auto w = rt_wdist_unit(nu, e, p, s, n, m);
                            mpz_class sum = 0;
                            for (auto& x : w) sum += x;
                            mpz_class want;
                            mpz_ui_pow_ui(want.get_mpz_t(), p, m * n * (e * P - nu));
                            EXPECT_EQ(sum, want);
                            int d = d_RT_unit(nu, e, p, s, n);
                            for (int r = 1; r < d; ++r) EXPECT_EQ(w[r], 0);
                            if (d > 0) EXPECT_NE(w[d], 0);
                        }
                    }
}

TEST(Distance, Beta0) {
    auto r = make_ring(Family::EisensteinU, 2, 2, 1);
    auto dec = lemma_fac(r, 1, 2, r->one());
    for (const auto& sp : classify_ideals(dec, 1)) {
        auto w = rt_wdist_beta0(sp, 2, 2, 1, 1);
        mpz_class sum = 0;
        for (auto& x : w) sum += x;
        EXPECT_EQ(sum, ideal_size(dec, sp));
        int d = d_RT_beta0(sp, 1);
        for (int k = 1; k < d; ++k) EXPECT_EQ(w[k], 0);
    }
    IdealSpec ii;
    ii.kind = IdealKind::TypeII;
    EXPECT_EQ(d_H_beta0(ii, 2, 2), 1);
    ii.tau = 1;
    EXPECT_EQ(d_RT_beta0(ii, 2), 3);
    IdealSpec iii;
    iii.kind = IdealKind::TypeIII;
    iii.kappa = 2;
    EXPECT_EQ(d_H_beta0(iii, 2, 2), 2);
    EXPECT_EQ(d_RT_beta0(iii, 1), 3);
}
