#pragma once

#include <gmpxx.h>

#include <vector>

#include "chaincode/code.hpp"

namespace chaincode {

// A_0..A_N, exact.
using WeightDist = std::vector<mpz_class>;

// Hamming distance of <(x^n - eta0)^u> over the residue field, 0 <= u <= p^s.
int d_H_field(long long u, int p, int s);
// <f^nu> in the chain case, 0 <= nu <= e p^s.
int d_H_unit(long long nu, int e, int p, int s);
int d_RT_unit(long long nu, int e, int p, int s, int n);
WeightDist rt_wdist_unit(long long nu, int e, int p, int s, int n, int m);

// beta = 0 (e = 2) ideals, keyed by tau / kappa / mu.
int d_H_beta0(const IdealSpec& spec, int p, int s);
int d_RT_beta0(const IdealSpec& spec, int n);
WeightDist rt_wdist_beta0(const IdealSpec& spec, int p, int s, int n, int m);

struct Distances {
    int d_H = 0, d_RT = 0;
    WeightDist rt;
};
// Needs a single component with x^n - alpha0bar irreducible.
Distances code_distances(const CodeSpec& code);

}  // namespace chaincode
