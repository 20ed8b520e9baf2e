#include "chaincode/distance.hpp"

namespace chaincode {

namespace {

long long ipow(long long b, int k) {
    long long r = 1;
    while (k-- > 0) r *= b;
    return r;
}

mpz_class pp(int p, long long k) {
    if (k < 0) throw DomainError("negative exponent in a weight count");
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), p, static_cast<unsigned long>(k));
    return v;
}

WeightDist zeros(int N) {
    WeightDist w(N + 1, 0);
    w[0] = 1;
    return w;
}

}  // namespace

int d_H_field(long long u, int p, int s) {
    const long long P = ipow(p, s), P1 = P / p;
    if (u < 0 || u > P) throw DomainError("index out of range for the field distance table");
    if (u == 0) return 1;
    if (u == P) return 0;
    for (int l = 0; l <= p - 2; ++l)
        if (u >= l * P1 + 1 && u <= (l + 1) * P1) return l + 2;
    for (int k = 1; k <= s - 1; ++k) {
        const long long a = ipow(p, s - k), b = ipow(p, s - k - 1);
        for (int i = 1; i <= p - 1; ++i)
            if (u >= P - a + (i - 1) * b + 1 && u <= P - a + i * b) return static_cast<int>((i + 1) * ipow(p, k));
    }
    throw DomainError("field distance table has no branch");
}

int d_H_unit(long long nu, int e, int p, int s) {
    const long long P = ipow(p, s);
    if (nu < 0 || nu > e * P) throw DomainError("nu out of range");
    if (nu <= (e - 1) * P) return 1;
    return d_H_field(nu - (e - 1) * P, p, s);
}

int d_RT_unit(long long nu, int e, int p, int s, int n) {
    const long long P = ipow(p, s);
    if (nu < 0 || nu > e * P) throw DomainError("nu out of range");
    if (nu == e * P) return 0;
    if (nu <= (e - 1) * P) return 1;
    return static_cast<int>(n * nu - n * (e - 1) * P + 1);
}

WeightDist rt_wdist_unit(long long nu, int e, int p, int s, int n, int m) {
    const long long P = ipow(p, s);
    const int N = static_cast<int>(n * P);
    if (nu < 0 || nu > e * P) throw DomainError("nu out of range");
    WeightDist w = zeros(N);
    if (nu == e * P) return w;
    if (nu > (e - 1) * P) {
        const long long lo = n * nu - n * (e - 1) * P;
        for (long long r = lo + 1; r <= N; ++r) w[r] = (pp(p, m) - 1) * pp(p, m * (r - lo - 1));
        return w;
    }
    if (nu % P == 0) {
        const long long y = nu / P;
        for (long long r = 1; r <= N; ++r) w[r] = (pp(p, m * (e - y)) - 1) * pp(p, m * (e - y) * (r - 1));
        return w;
    }
    const long long b = nu / P + 1;
    const long long cut = n * nu - n * (b - 1) * P;
    for (long long r = 1; r <= N; ++r) {
        if (r <= cut)
            w[r] = (pp(p, m * (e - b)) - 1) * pp(p, m * (e - b) * (r - 1));
        else
            w[r] = (pp(p, m * (e - b + 1)) - 1) * pp(p, m * (N * (b - 1) - n * nu - e + b - 1 + (e - b + 1) * r));
    }
    return w;
}

int d_H_beta0(const IdealSpec& sp, int p, int s) {
    switch (sp.kind) {
        case IdealKind::Zero: return 0;
        case IdealKind::Unit: return 1;
        case IdealKind::TypeII: return d_H_field(sp.tau, p, s);
        case IdealKind::TypeIII: return d_H_field(sp.kappa, p, s);
        case IdealKind::TypeIV: return sp.mu == 0 ? 1 : d_H_field(sp.mu, p, s);
        case IdealKind::ChainPower: break;
    }
    throw DomainError("chain ideal passed to a beta = 0 formula");
}

int d_RT_beta0(const IdealSpec& sp, int n) {
    switch (sp.kind) {
        case IdealKind::Zero: return 0;
        case IdealKind::Unit: return 1;
        case IdealKind::TypeII: return n * sp.tau + 1;
        case IdealKind::TypeIII: return n * sp.kappa + 1;
        case IdealKind::TypeIV: return n * sp.mu + 1;
        case IdealKind::ChainPower: break;
    }
    throw DomainError("chain ideal passed to a beta = 0 formula");
}

WeightDist rt_wdist_beta0(const IdealSpec& sp, int p, int s, int n, int m) {
    const int N = static_cast<int>(n * ipow(p, s));
    WeightDist w = zeros(N);
    auto two_stage = [&](long long low) {
        const long long a = n * low, b = n * static_cast<long long>(sp.omega);
        for (long long r = a + 1; r <= N; ++r) {
            if (r <= b) w[r] = (pp(p, m) - 1) * pp(p, m * (r - a - 1));
            else w[r] = (pp(p, 2 * m) - 1) * pp(p, m * (2 * r - b - a - 2));
        }
    };
    switch (sp.kind) {
        case IdealKind::Zero: break;
        case IdealKind::Unit:
            for (long long r = 1; r <= N; ++r) w[r] = (pp(p, 2 * m) - 1) * pp(p, 2 * m * (r - 1));
            break;
        case IdealKind::TypeII:
            for (long long r = n * sp.tau + 1; r <= N; ++r) w[r] = (pp(p, m) - 1) * pp(p, m * (r - n * sp.tau - 1));
            break;
        case IdealKind::TypeIII: two_stage(sp.kappa); break;
        case IdealKind::TypeIV: two_stage(sp.mu); break;
        case IdealKind::ChainPower: throw DomainError("chain ideal passed to a beta = 0 formula");
    }
    return w;
}

Distances code_distances(const CodeSpec& code) {
    const auto& dec = code.dec;
    if (dec.r() != 1 || !dec.irreducible)
        throw DomainError("distance formulas need x^n - alpha0bar irreducible (a single component)");
    const auto& sp = code.parts[0];
    const auto& R = *dec.ring;
    Distances d;
    if (dec.chain()) {
        d.d_H = d_H_unit(sp.nu, dec.e(), R.p(), dec.s);
        d.d_RT = d_RT_unit(sp.nu, dec.e(), R.p(), dec.s, dec.n);
        d.rt = rt_wdist_unit(sp.nu, dec.e(), R.p(), dec.s, dec.n, R.m());
    } else {
        d.d_H = d_H_beta0(sp, R.p(), dec.s);
        d.d_RT = d_RT_beta0(sp, dec.n);
        d.rt = rt_wdist_beta0(sp, R.p(), dec.s, dec.n, R.m());
    }
    return d;
}

}  // namespace chaincode
