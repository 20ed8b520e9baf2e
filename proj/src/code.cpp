#include "chaincode/code.hpp"

#include <algorithm>
#include <functional>

namespace chaincode {

namespace {

long long ipow_ll(long long b, int k) {
    long long r = 1;
    while (k-- > 0) r *= b;
    return r;
}

Poly one_poly(const RingPtr& r) { return Poly::constant(r, r->one()); }

Poly xn_minus(const RingPtr& r, int n, RingElem c) { return Poly::monomial(r, r->one(), n) - Poly::constant(r, c); }

Poly xpow(const RingPtr& r, long long k) {
    if (k < 0) throw DomainError("negative exponent in a dual generator");
    return Poly::monomial(r, r->one(), static_cast<int>(k));
}

Poly ppow(const Poly& f, long long k) {
    if (k < 0) throw DomainError("negative exponent in a generator");
    return pow(f, static_cast<std::uint64_t>(k));
}

// f-adic valuation of a nonzero residue polynomial.
int fbar_valuation(Poly a, const Poly& fbar) {
    int v = 0;
    for (;;) {
        auto [q, r] = divmod(a, fbar);
        if (!r.is_zero()) return v;
        a = q;
        ++v;
    }
}

const FactorComponent& comp_of(const Decomposition& dec, int j) {
    if (j < 1 || j > dec.r()) throw DomainError("component index out of range");
    return dec.comps[j - 1];
}

mpz_class p_pow(const Decomposition& dec, long long d, long long x) {
    if (x < 0) throw DomainError("negative size exponent");
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), dec.ring->p(), static_cast<unsigned long>(dec.ring->m() * d * x));
    return v;
}

void check_common(const RingPtr& ring, int n, int s, RingElem lambda) {
    if (n < 1) throw DomainError("n must be positive");
    if (s < 1) throw DomainError("s must be at least 1");
    if (n % ring->p() == 0) throw DomainError("p divides n");
    if (!ring->is_unit(lambda)) throw NonUnit("lambda is not a unit");
}

void fill_common(Decomposition& dec, const RingPtr& ring, int n, int s, RingElem lambda) {
    dec.ring = ring;
    dec.n = n;
    dec.s = s;
    dec.ps = ipow_ll(ring->p(), s);
    dec.ps1 = dec.ps / ring->p();
    dec.N = static_cast<int>(n * dec.ps);
    dec.lambda = lambda;
    dec.lam = ring->decompose_unit(lambda);
    dec.alpha0 = ring->teich_root(dec.lam.head, s);
    dec.beta_zero = dec.lam.tail.code == 0;
    dec.char_p2 = ring->family() == Family::GaloisRing && ring->e() == 2;
}

}  // namespace

std::string kind_name(IdealKind k) {
    switch (k) {
        case IdealKind::Zero: return "zero";
        case IdealKind::Unit: return "unit";
        case IdealKind::ChainPower: return "chain";
        case IdealKind::TypeII: return "ii";
        case IdealKind::TypeIII: return "iii";
        case IdealKind::TypeIV: return "iv";
    }
    return "?";
}

Decomposition lemma_fac(const RingPtr& ring, int n, int s, RingElem lambda) {
    if (ring->e() != 2) throw DomainError("lemma_fac needs nilpotency index 2");
    check_common(ring, n, s, lambda);
    Decomposition dec;
    fill_common(dec, ring, n, s, lambda);
    const RingPtr F = ring->field();
    const long long ps = dec.ps, ps1 = dec.ps1;
    const int p = ring->p();

    auto fs = factor_xn_minus_a(n, ring->residue(dec.alpha0), F);
    dec.irreducible = fs.size() == 1;
    Poly h = xn_minus(ring, n, dec.alpha0);
    auto f = hensel_lift(fs, h);
    const int r = static_cast<int>(f.size());

    // B = beta - z * sum a_k h^{k p^{s-1}} alpha0^{p^s - k p^{s-1}}; the sum vanishes in char p
    Poly S(ring), S1(ring);
    if (dec.char_p2) {
        auto bd = binom_data(p, s, ring);
        for (int k = 1; k < p; ++k) {
            RingElem c = ring->mul(bd.a[k], ring->pow(dec.alpha0, ps - k * ps1));
            S = S + scale(ppow(h, k * ps1), c);
            S1 = S1 + scale(ppow(h, (k - 1) * ps1), c);
        }
        S = scale(S, ring->z());
        S1 = scale(S1, ring->z());
    }
    Poly B = Poly::constant(ring, dec.lam.tail) - S;

    std::vector<Poly> fp(r);
    for (int j = 0; j < r; ++j) fp[j] = ppow(f[j], ps);
    std::vector<Poly> v(r, one_poly(ring)), w(r, one_poly(ring));
    for (int u = 0; u + 1 < r; ++u) {
        Poly rest = one_poly(ring);
        for (int i = u + 1; i < r; ++i) rest = rest * fp[i];
        auto [a1, a2] = bezout(fp[u], rest);
        v[u] = a1;
        w[u] = a2;
    }

    Poly prod = one_poly(ring);
    Poly vprod = one_poly(ring);
    for (int j = 0; j < r; ++j) {
        FactorComponent c;
        c.index = j + 1;
        c.f = f[j];
        c.fbar = fs[j];
        c.d = f[j].degree();
        c.v = v[j];
        c.w = w[j];
        Poly fbar_ps = ppow(c.fbar, ps);
        Poly graw = -(B * w[j] * vprod);
        c.g = teich_lift(residue(graw) % fbar_ps, ring);
        c.k = fp[j] + mul_gamma(c.g);
        if (dec.beta_zero && dec.char_p2) {
            Poly Fj = divmod(h, f[j]).first;
            Poly Mraw = ppow(Fj, ps1) * S1 * w[j] * vprod;
            c.M = teich_lift(residue(Mraw) % ppow(c.fbar, ps - ps1), ring);
            if ((residue(c.M) % c.fbar).is_zero()) throw DomainError("M_j is not coprime to f_j");
            if (!(residue(c.g) == (ppow(c.fbar, ps1) * residue(c.M)) % fbar_ps))
                throw DomainError("g_j does not factor as f_j^{p^{s-1}} M_j");
        } else if (dec.beta_zero) {
            if (!c.g.is_zero()) throw DomainError("g_j should vanish in characteristic p");
        } else if ((residue(c.g) % c.fbar).is_zero()) {
            throw DomainError("g_j is not coprime to f_j");
        }
        vprod = vprod * v[j];
        prod = prod * c.k;
        dec.comps.push_back(std::move(c));
    }
    Poly target = xn_minus(ring, dec.N, lambda);
    if (!(prod == target)) throw DomainError("product of the k_j differs from x^N - lambda");

    // independent check: Hensel lift of x^N - lambda from the residues fbar_j^{p^s}
    std::vector<Poly> fsp;
    for (const auto& c : dec.comps) fsp.push_back(ppow(c.fbar, ps));
    auto lifted = hensel_lift(fsp, target);
    for (int j = 0; j < r; ++j)
        if (!(lifted[j] == dec.comps[j].k)) throw DomainError("k_j disagrees with the Hensel lift");
    return dec;
}

Decomposition unit_case_decomposition(const RingPtr& ring, int n, int s, RingElem lambda) {
    check_common(ring, n, s, lambda);
    Decomposition dec;
    fill_common(dec, ring, n, s, lambda);
    dec.general_unit = true;
    if (ring->e() > 2 && !dec.lam.tail_is_unit)
        throw DomainError("lambda = theta + gamma*omega needs omega a unit when e > 2");
    if (ring->e() == 2 && dec.beta_zero) throw DomainError("beta = 0: the ring is not a chain ring, use lemma_fac");
    auto fs = factor_xn_minus_a(n, ring->residue(dec.alpha0), ring->field());
    if (fs.size() != 1) throw DomainError("x^n - lambda0bar is reducible over the residue field");
    dec.irreducible = true;
    FactorComponent c;
    c.index = 1;
    c.d = n;
    c.f = xn_minus(ring, n, dec.alpha0);
    c.fbar = fs[0];
    c.k = xn_minus(ring, dec.N, lambda);
    c.g = div_gamma(c.k - ppow(c.f, dec.ps));
    c.v = one_poly(ring);
    c.w = one_poly(ring);
    dec.comps.push_back(std::move(c));
    return dec;
}

Decomposition analyze(const RingPtr& ring, int n, int s, RingElem lambda) {
    if (ring->e() == 2) return lemma_fac(ring, n, s, lambda);
    return unit_case_decomposition(ring, n, s, lambda);
}

NilpotencyData nilpotency_data(const Decomposition& dec) {
    if (dec.chain()) return {"<gamma>", dec.e() * dec.ps};
    if (!dec.char_p2) return {"{0}", dec.ps};
    return {"<gamma*f^{p^(s-1)}>", 2 * dec.ps - dec.ps1};
}

std::vector<Poly> f_adic_digits(const Poly& abar, const Poly& fbar, int len) {
    std::vector<Poly> out;
    Poly a = abar;
    for (int i = 0; i < len; ++i) {
        auto [q, r] = divmod(a, fbar);
        out.push_back(r);
        a = q;
    }
    return out;
}

KappaData kappa(const Decomposition& dec, int j, int omega, int t, const Poly& G) {
    if (dec.chain()) throw DomainError("kappa applies to beta = 0 only");
    const auto& c = comp_of(dec, j);
    const long long P = dec.ps, P1 = dec.ps1;
    if (omega <= 0 || omega >= P) throw DomainError("omega out of range");
    const bool gz = G.is_zero();
    if (!gz && (t < 0 || t >= omega)) throw DomainError("t out of range");
    KappaData kd;
    if (!dec.char_p2) {
        kd.kappa = gz ? omega : static_cast<int>(std::min<long long>(omega, P - omega + t));
        return kd;
    }
    if (gz) {
        kd.kappa = static_cast<int>(std::min<long long>(omega, P1));
        return kd;
    }
    // gamma (M - G) = gamma f^delta A_G, read modulo fbar^{p^s - p^{s-1}}
    const long long top = P - P1;
    Poly modp = ppow(c.fbar, top);
    Poly D = (residue(c.M) - residue(G)) % modp;
    if (D.is_zero()) {
        kd.delta = static_cast<int>(top);
        kd.A_G = Poly(dec.ring);
    } else {
        kd.delta = fbar_valuation(D, c.fbar);
        Poly q = divmod(D, ppow(c.fbar, kd.delta)).first;
        kd.A_G = teich_lift(q % ppow(c.fbar, top - kd.delta), dec.ring);
    }
    if (omega != P - P1 + t) {
        kd.kappa = static_cast<int>(std::min({static_cast<long long>(omega), P - omega + t, P1}));
    } else if (!kd.A_G.is_zero() && kd.delta < top) {
        kd.kappa = static_cast<int>(std::min<long long>(omega, P1 + kd.delta));
    } else {
        kd.kappa = omega;
    }
    return kd;
}

namespace {

// Canonical G: lift of sum of its first len f-adic digits; returns digit count.
std::pair<Poly, int> canonical_G(const FactorComponent& c, const RingPtr& ring, const Poly& G, int len) {
    if (G.is_zero() || len <= 0) return {Poly(ring), 0};
    auto dg = f_adic_digits(residue(G), c.fbar, len);
    if (dg[0].is_zero()) throw DomainError("G must be a unit (nonzero constant f-adic digit)");
    int last = 0;
    for (int i = 0; i < len; ++i)
        if (!dg[i].is_zero()) last = i;
    Poly acc(ring->field());
    Poly fp = Poly::constant(ring->field(), ring->field()->one());
    for (int i = 0; i <= last; ++i) {
        acc = acc + dg[i] * fp;
        fp = fp * c.fbar;
    }
    return {teich_lift(acc, ring), last + 1};
}

// Calls fn(G, L) for every G = sum_{i<L} a_i f^i with a_0 != 0 and (L > 1 implies a_{L-1} != 0).
bool for_each_G(const FactorComponent& c, const RingPtr& ring, int L, const std::function<bool(const Poly&)>& fn) {
    const RingPtr F = ring->field();
    const std::uint64_t q = F->size();
    std::uint64_t qd = 1;
    for (int i = 0; i < c.d; ++i) qd *= q;
    std::vector<std::uint64_t> idx(L, 0);
    idx[0] = 1;
    if (L > 1) idx[L - 1] = 1;
    std::vector<Poly> fpow(L, Poly::constant(F, F->one()));
    for (int i = 1; i < L; ++i) fpow[i] = fpow[i - 1] * c.fbar;
    auto digit = [&](std::uint64_t v) {
        std::vector<RingElem> co(c.d);
        for (int k = 0; k < c.d; ++k) {
            co[k] = {static_cast<std::uint32_t>(v % q)};
            v /= q;
        }
        return Poly(F, co);
    };
    for (;;) {
        Poly acc(F);
        for (int i = 0; i < L; ++i) acc = acc + digit(idx[i]) * fpow[i];
        if (!fn(teich_lift(acc, ring))) return false;
        int pos = 0;
        for (; pos < L; ++pos) {
            ++idx[pos];
            if (idx[pos] < qd) break;
            idx[pos] = (pos == 0 || pos == L - 1) ? 1 : 0;
        }
        if (pos == L) return true;
    }
}

bool for_each_ideal(const Decomposition& dec, int j, const std::function<bool(IdealSpec&&)>& fn) {
    const auto& c = comp_of(dec, j);
    auto base = [&](IdealKind k) {
        IdealSpec sp;
        sp.kind = k;
        sp.j = j;
        return sp;
    };
    if (dec.chain()) {
        for (long long nu = 0; nu <= dec.e() * dec.ps; ++nu) {
            auto sp = base(IdealKind::ChainPower);
            sp.nu = static_cast<int>(nu);
            if (!fn(std::move(sp))) return false;
        }
        return true;
    }
    const int P = static_cast<int>(dec.ps);
    if (!fn(base(IdealKind::Zero))) return false;
    if (!fn(base(IdealKind::Unit))) return false;
    for (int tau = 0; tau < P; ++tau) {
        auto sp = base(IdealKind::TypeII);
        sp.tau = tau;
        if (!fn(std::move(sp))) return false;
    }
    auto with_kappa = [&](IdealSpec& sp, const KappaData& kd) {
        sp.kappa = kd.kappa;
        sp.delta = kd.delta;
        sp.A_G = kd.A_G;
    };
    for (int omega = 1; omega < P; ++omega) {
        {
            auto sp = base(IdealKind::TypeIII);
            sp.omega = omega;
            sp.G = Poly(dec.ring);
            with_kappa(sp, kappa(dec, j, omega, 0, sp.G));
            if (!fn(std::move(sp))) return false;
        }
        for (int t = 0; t < omega; ++t)
            for (int L = 1; L <= omega - t; ++L) {
                bool go = for_each_G(c, dec.ring, L, [&](const Poly& G) {
                    auto kd = kappa(dec, j, omega, t, G);
                    if (t >= kd.kappa || L > kd.kappa - t) return true;
                    auto sp = base(IdealKind::TypeIII);
                    sp.omega = omega;
                    sp.t = t;
                    sp.G = G;
                    sp.G_len = L;
                    with_kappa(sp, kd);
                    return fn(std::move(sp));
                });
                if (!go) return false;
            }
    }
    for (int omega = 1; omega < P; ++omega)
        for (int mu = 0; mu < omega; ++mu) {
            {
                auto kd = kappa(dec, j, omega, 0, Poly(dec.ring));
                if (mu < kd.kappa) {
                    auto sp = base(IdealKind::TypeIV);
                    sp.omega = omega;
                    sp.mu = mu;
                    sp.G = Poly(dec.ring);
                    with_kappa(sp, kd);
                    if (!fn(std::move(sp))) return false;
                }
            }
            for (int t = 0; t < mu; ++t)
                for (int L = 1; L <= mu - t; ++L) {
                    bool go = for_each_G(c, dec.ring, L, [&](const Poly& G) {
                        auto kd = kappa(dec, j, omega, t, G);
                        if (mu >= kd.kappa) return true;
                        auto sp = base(IdealKind::TypeIV);
                        sp.omega = omega;
                        sp.mu = mu;
                        sp.t = t;
                        sp.G = G;
                        sp.G_len = L;
                        with_kappa(sp, kd);
                        return fn(std::move(sp));
                    });
                    if (!go) return false;
                }
        }
    return true;
}

}  // namespace

IdealSpec make_ideal(const Decomposition& dec, int j, IdealKind kind, int nu, int tau, int omega, int t, int mu,
                     const Poly& G) {
    const auto& c = comp_of(dec, j);
    IdealSpec sp;
    sp.j = j;
    sp.kind = kind;
    const long long P = dec.ps;
    if (dec.chain()) {
        if (kind == IdealKind::Zero) nu = static_cast<int>(dec.e() * P);
        if (kind == IdealKind::Unit) nu = 0;
        if (kind != IdealKind::ChainPower && kind != IdealKind::Zero && kind != IdealKind::Unit)
            throw DomainError("beta != 0: every ideal is a power of f (use --nu)");
        if (nu < 0 || nu > dec.e() * P) throw DomainError("nu out of range");
        sp.kind = IdealKind::ChainPower;
        sp.nu = nu;
        return sp;
    }
    switch (kind) {
        case IdealKind::Zero:
        case IdealKind::Unit: return sp;
        case IdealKind::ChainPower: throw DomainError("beta = 0: ideals are of Types I-IV, not chain powers");
        case IdealKind::TypeII:
            if (tau < 0 || tau >= P) throw DomainError("tau out of range");
            sp.tau = tau;
            return sp;
        case IdealKind::TypeIII: {
            if (omega <= 0 || omega >= P) throw DomainError("omega out of range");
            sp.omega = omega;
            Poly g0 = G.ring() ? G : Poly(dec.ring);
            if (g0.is_zero()) t = 0;
            else if (t < 0 || t >= omega) throw DomainError("t out of range");
            auto [Gc, len] = canonical_G(c, dec.ring, g0, omega - t);
            auto kd = kappa(dec, j, omega, t, Gc);
            if (!Gc.is_zero()) {
                if (t >= kd.kappa) throw DomainError("Type III needs t < kappa");
                std::tie(Gc, len) = canonical_G(c, dec.ring, Gc, kd.kappa - t);
                auto kd2 = kappa(dec, j, omega, t, Gc);
                if (kd2.kappa != kd.kappa) throw DomainError("kappa changed under truncation of G");
                kd = kd2;
            }
            sp.t = t;
            sp.G = Gc;
            sp.G_len = len;
            sp.kappa = kd.kappa;
            sp.delta = kd.delta;
            sp.A_G = kd.A_G;
            return sp;
        }
        case IdealKind::TypeIV: {
            if (omega <= 0 || omega >= P) throw DomainError("omega out of range");
            if (mu < 0 || mu >= omega) throw DomainError("mu out of range");
            Poly g0 = G.ring() ? G : Poly(dec.ring);
            if (g0.is_zero()) t = 0;
            else if (t < 0 || t >= mu) throw DomainError("Type IV needs t < mu");
            auto [Gc, len] = canonical_G(c, dec.ring, g0, mu - t);
            auto kd = kappa(dec, j, omega, t, Gc);
            if (mu >= kd.kappa) throw DomainError("Type IV needs mu < kappa");
            sp.omega = omega;
            sp.mu = mu;
            sp.t = t;
            sp.G = Gc;
            sp.G_len = len;
            sp.kappa = kd.kappa;
            sp.delta = kd.delta;
            sp.A_G = kd.A_G;
            return sp;
        }
    }
    return sp;
}

std::vector<IdealSpec> classify_ideals(const Decomposition& dec, int j, std::size_t cap) {
    std::vector<IdealSpec> out;
    bool done = for_each_ideal(dec, j, [&](IdealSpec&& sp) {
        if (out.size() >= cap) return false;
        out.push_back(std::move(sp));
        return true;
    });
    if (!done) throw DomainError("ideal enumeration exceeds the cap");
    return out;
}

Census census(const Decomposition& dec, int j, std::uint64_t limit) {
    Census c;
    std::uint64_t seen = 0;
    bool done = for_each_ideal(dec, j, [&](IdealSpec&& sp) {
        if (++seen > limit) return false;
        switch (sp.kind) {
            case IdealKind::Zero:
            case IdealKind::Unit: ++c.trivial; break;
            case IdealKind::ChainPower: ++c.chain; break;
            case IdealKind::TypeII: ++c.type2; break;
            case IdealKind::TypeIII: ++c.type3; break;
            case IdealKind::TypeIV: ++c.type4; break;
        }
        return true;
    });
    if (!done) throw DomainError("census exceeds the enumeration limit");
    return c;
}

std::vector<Poly> component_generators(const Decomposition& dec, const IdealSpec& sp) {
    const auto& c = comp_of(dec, sp.j);
    const RingPtr& R = dec.ring;
    std::vector<Poly> g;
    auto principal = [&] { return ppow(c.f, sp.omega) + mul_gamma(ppow(c.f, sp.t) * sp.G); };
    switch (sp.kind) {
        case IdealKind::Zero: break;
        case IdealKind::Unit: g.push_back(one_poly(R)); break;
        case IdealKind::ChainPower: g.push_back(ppow(c.f, sp.nu)); break;
        case IdealKind::TypeII: g.push_back(mul_gamma(ppow(c.f, sp.tau))); break;
        case IdealKind::TypeIII: g.push_back(principal()); break;
        case IdealKind::TypeIV:
            g.push_back(principal());
            g.push_back(mul_gamma(ppow(c.f, sp.mu)));
            break;
    }
    std::vector<Poly> out;
    for (auto& x : g) {
        Poly r = x % c.k;
        if (!r.is_zero()) out.push_back(r);
    }
    return out;
}

mpz_class ideal_size(const Decomposition& dec, const IdealSpec& sp) {
    const long long d = comp_of(dec, sp.j).d;
    const long long P = dec.ps, P1 = dec.ps1;
    const long long w = sp.omega, t = sp.t;
    const bool gz = sp.G.is_zero();
    switch (sp.kind) {
        case IdealKind::Zero: return 1;
        case IdealKind::Unit: return p_pow(dec, d, dec.e() * P);
        case IdealKind::ChainPower: return p_pow(dec, d, dec.e() * P - sp.nu);
        case IdealKind::TypeII: return p_pow(dec, d, P - sp.tau);
        case IdealKind::TypeIV: return p_pow(dec, d, 2 * P - sp.mu - w);
        case IdealKind::TypeIII: break;
    }
    if (!dec.char_p2) {
        if (gz || P - 2 * w + t >= 0) return p_pow(dec, d, 2 * (P - w));
        return p_pow(dec, d, P - t);
    }
    const bool special = !gz && w == P - P1 + t;
    const bool A = !sp.A_G.is_zero() && sp.delta < P - P1;
    const long long delta = sp.delta;
    if ((gz && w <= P1) || (!gz && P - 2 * w + t >= 0 && w <= P1 && !special) || (special && !A) ||
        (special && A && w <= P1 + delta))
        return p_pow(dec, d, 2 * (P - w));
    if (!gz && P - 2 * w + t <= 0 && P - P1 - w + t < 0) return p_pow(dec, d, P - t);
    if ((gz && w > P1) || (!gz && w >= P1 && P - P1 - w + t > 0)) return p_pow(dec, d, 2 * P - w - P1);
    if (special && A && w > P1 + delta) return p_pow(dec, d, 2 * P - w - P1 - delta);
    throw DomainError("no size case applies");
}

mpz_class ideal_size_res_tor(const Decomposition& dec, const IdealSpec& sp) {
    if (sp.kind != IdealKind::TypeIII) return ideal_size(dec, sp);
    const long long d = comp_of(dec, sp.j).d;
    return p_pow(dec, d, 2 * dec.ps - sp.omega - sp.kappa);
}

GeneratedIdeal dual_ideal(const Decomposition& dec, const IdealSpec& sp) {
    const auto& c = comp_of(dec, sp.j);
    const RingPtr& R = dec.ring;
    const long long P = dec.ps, P1 = dec.ps1, d = c.d;
    const long long w = sp.omega, t = sp.t, mu = sp.mu;
    GeneratedIdeal out;
    out.modulus = make_monic(reciprocal(c.k));
    const Poly fs = reciprocal(c.f);
    auto FS = [&](long long k) { return ppow(fs, k); };
    auto gam = [&](const Poly& a) { return mul_gamma(a); };
    const Poly gamma1 = gam(one_poly(R));
    const bool gz = sp.G.is_zero();
    std::vector<Poly> g;

    auto TG = [&] { return gam(xpow(R, d * w - d * t - sp.G.degree()) * reciprocal(sp.G)); };
    auto TM = [&] { return gam(xpow(R, d * P - d * P1 - c.M.degree()) * reciprocal(c.M)); };
    auto TA = [&] { return gam(xpow(R, d * P - d * P1 - d * sp.delta - sp.A_G.degree()) * reciprocal(sp.A_G)); };
    const bool special = dec.char_p2 && !gz && w == P - P1 + t;
    const bool A = special && !sp.A_G.is_zero() && sp.delta < P - P1;

    switch (sp.kind) {
        case IdealKind::Zero: g.push_back(one_poly(R)); break;
        case IdealKind::Unit: break;
        case IdealKind::ChainPower: g.push_back(FS(dec.e() * P - sp.nu)); break;
        case IdealKind::TypeII:
            g.push_back(FS(P - sp.tau));
            g.push_back(gamma1);
            break;
        case IdealKind::TypeIII:
            if (!dec.char_p2) {
                if (gz) {
                    g.push_back(FS(P - w));
                } else if (P - 2 * w + t >= 0) {
                    g.push_back(FS(P - w) - TG() * FS(P - 2 * w + t));
                } else {
                    g.push_back(FS(w - t) - TG());
                    g.push_back(gam(FS(P - w)));
                }
            } else if (gz) {
                if (w <= P1) {
                    g.push_back(FS(P - w) + TM() * FS(P1 - w));
                } else {
                    g.push_back(FS(P - P1) + TM());
                    g.push_back(gam(FS(P - w)));
                }
            } else if (!special) {
                const long long e1 = P - P1 + t - w;
                if (e1 > 0 && w > P1) {
                    g.push_back(FS(P - P1) + TM() - TG() * FS(P + t - w - P1));
                    g.push_back(gam(FS(P - w)));
                } else if (e1 > 0) {
                    g.push_back(FS(P - w) + TM() * FS(P1 - w) - TG() * FS(P + t - 2 * w));
                } else if (P - 2 * w + t >= 0) {
                    g.push_back(FS(P - w) + TM() * FS(P1 - w) - TG() * FS(P + t - 2 * w));
                } else {
                    g.push_back(FS(w - t) + TM() * FS(P1 + w - t - P) - TG());
                    g.push_back(gam(FS(P - w)));
                }
            } else if (!A) {
                g.push_back(FS(P - w));
            } else if (sp.delta >= w - P1) {
                g.push_back(FS(P - w) + TA() * FS(P1 - w + sp.delta));
            } else {
                g.push_back(FS(P - P1 - sp.delta) + TA());
                g.push_back(gam(FS(P - w)));
            }
            break;
        case IdealKind::TypeIV:
            if (!dec.char_p2) {
                if (gz) g.push_back(FS(P - mu));
                else g.push_back(FS(P - mu) - TG() * FS(P - mu - w + t));
            } else if (gz) {
                if (P - P1 - w + mu <= 0) g.push_back(FS(P - mu));
                else g.push_back(FS(P - mu) + TM() * FS(P1 - mu));
            } else if (!special) {
                g.push_back(FS(P - mu) + TM() * FS(P1 - mu) - TG() * FS(P - mu + t - w));
            } else if (!A) {
                g.push_back(FS(P - mu));
            } else {
                g.push_back(FS(P - mu) + TA() * FS(P1 - mu + sp.delta));
            }
            g.push_back(gam(FS(P - w)));
            break;
    }
    for (auto& x : g) {
        Poly r = x % out.modulus;
        if (!r.is_zero()) out.gens.push_back(r);
    }
    return out;
}

CodeSpec crt_compose(const Decomposition& dec, std::vector<IdealSpec> parts) {
    if (static_cast<int>(parts.size()) != dec.r()) throw DomainError("component count mismatch");
    for (int j = 0; j < dec.r(); ++j)
        if (parts[j].j != j + 1) throw DomainError("component order mismatch");
    return {dec, std::move(parts)};
}

std::vector<IdealSpec> crt_decompose(const CodeSpec& code) { return code.parts; }

mpz_class code_size(const CodeSpec& code) {
    mpz_class s = 1;
    for (const auto& p : code.parts) s *= ideal_size(code.dec, p);
    return s;
}

GeneratedIdeal code_generators(const CodeSpec& code) {
    const auto& dec = code.dec;
    GeneratedIdeal out;
    out.modulus = xn_minus(dec.ring, dec.N, dec.lambda);
    for (int j = 0; j < dec.r(); ++j) {
        Poly others = one_poly(dec.ring);
        for (int i = 0; i < dec.r(); ++i)
            if (i != j) others = others * dec.comps[i].k;
        for (const auto& g : component_generators(dec, code.parts[j])) {
            Poly x = (g * others) % out.modulus;
            if (!x.is_zero()) out.gens.push_back(x);
        }
    }
    return out;
}

GeneratedIdeal code_dual(const CodeSpec& code) {
    const auto& dec = code.dec;
    GeneratedIdeal out;
    out.modulus = xn_minus(dec.ring, dec.N, dec.ring->inverse(dec.lambda));
    std::vector<Poly> khat;
    for (const auto& c : dec.comps) khat.push_back(make_monic(reciprocal(c.k)));
    for (int j = 0; j < dec.r(); ++j) {
        Poly others = one_poly(dec.ring);
        for (int i = 0; i < dec.r(); ++i)
            if (i != j) others = others * khat[i];
        for (const auto& h : dual_ideal(dec, code.parts[j]).gens) {
            Poly x = (h * others) % out.modulus;
            if (!x.is_zero()) out.gens.push_back(x);
        }
    }
    return out;
}

mpz_class code_count(const Decomposition& dec) {
    mpz_class total = 1;
    for (int j = 1; j <= dec.r(); ++j) total *= static_cast<unsigned long>(census(dec, j).total());
    return total;
}

std::vector<IsodualCode> isodual_codes(const Decomposition& dec, std::size_t cap) {
    if (!dec.irreducible || dec.r() != 1) throw DomainError("isodual families need x^n - alpha0bar irreducible");
    if (dec.e() != 2) throw DomainError("isodual families are given for e = 2 only");
    std::vector<IsodualCode> out;
    const long long P = dec.ps, P1 = dec.ps1;
    const int p = dec.ring->p();
    auto emit = [&](const std::string& fam, const IdealSpec& sp) {
        CodeSpec c = crt_compose(dec, {sp});
        mpz_class sz = code_size(c);
        mpz_class total;
        mpz_ui_pow_ui(total.get_mpz_t(), dec.ring->size(), dec.N);
        if (sz * sz != total) throw DomainError("isodual candidate has |C| != |C^perp|");
        out.push_back({fam, std::move(c)});
    };
    if (dec.chain()) {
        IdealSpec sp;
        sp.kind = IdealKind::ChainPower;
        sp.nu = static_cast<int>(P);
        emit("<gamma>", sp);
        return out;
    }
    for (const auto& sp : classify_ideals(dec, 1, cap)) {
        const long long w = sp.omega;
        const bool gz = sp.G.is_zero();
        switch (sp.kind) {
            case IdealKind::TypeII:
                if (sp.tau == 0) emit("<gamma>", sp);
                break;
            case IdealKind::TypeIII:
                if (p != 2) break;
                if (2 * w == P && gz) emit("<f^(2^(s-1))>", sp);
                else if (2 * w == P && (!dec.char_p2 || sp.t >= 1)) emit("<f^(2^(s-1))+gamma*f^t*G>", sp);
                else if (!dec.char_p2 && 2 * w > P && sp.t == 0 && !gz) emit("<f^omega+gamma*G>", sp);
                break;
            case IdealKind::TypeIV:
                if (sp.mu != P - w) break;
                if (!dec.char_p2 && p == 2 && 2 * w > P) emit("<f^omega+gamma*f^t*G, gamma*f^(2^s-omega)>", sp);
                else if (!dec.char_p2 && p != 2 && 2 * w > P && gz) emit("<f^omega, gamma*f^(p^s-omega)>", sp);
                else if (dec.char_p2 && 2 * w >= 2 * P - P1 && gz) emit("<f^omega, gamma*f^(p^s-omega)>", sp);
                break;
            default: break;
        }
    }
    return out;
}

}  // namespace chaincode
