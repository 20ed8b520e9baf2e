#include <algorithm>
#include <random>

#include "chaincode/poly.hpp"

namespace chaincode {

namespace {

bool canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

Poly random_poly(const RingPtr& f, int deg_below, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f->size() - 1);
    std::vector<RingElem> v(deg_below);
    for (auto& c : v) c = {dist(rng)};
    return Poly(f, std::move(v));
}

// Splits f, a product of distinct irreducibles of degree d, into its factors.
void equal_degree(const Poly& f, int d, std::mt19937& rng, std::vector<Poly>& out) {
    const int deg = f.degree();
    if (deg == d) {
        out.push_back(f);
        return;
    }
    const RingPtr& F = f.ring();
    const int p = F->p();
    const mpz_class q = [&] {
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), p, F->m());
        return v;
    }();
    for (;;) {
        Poly a = random_poly(F, deg, rng);
        if (a.is_zero() || a.degree() < 1) continue;
        Poly b(F);
        if (p == 2) {
            // absolute trace to F_2
            Poly t = a % f;
            b = t;
            for (int i = 1; i < F->m() * d; ++i) {
                t = mulmod(t, t, f);
                b = b + t;
            }
        } else {
            mpz_class e;
            mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), d);
            e = (e - 1) / 2;
            b = powmod(a, e, f) - Poly::constant(F, F->one());
        }
        Poly g = gcd(b, f);
        if (g.is_zero() || g.degree() == 0 || g.degree() == deg) continue;
        equal_degree(g, d, rng, out);
        equal_degree(divmod(f, g).first, d, rng, out);
        return;
    }
}

}  // namespace

void sort_canonical(std::vector<Poly>& polys) { std::sort(polys.begin(), polys.end(), canonical_less); }

std::vector<Poly> factor_squarefree(const Poly& f_in) {
    const RingPtr& F = f_in.ring();
    if (!F->is_field()) throw DomainError("factorization needs a field");
    Poly f = make_monic(f_in);
    std::vector<Poly> out;
    if (f.degree() == 0) return out;
    const mpz_class q = F->size();
    std::mt19937 rng(0x5eed);
    Poly x = Poly::x(F);
    Poly h = x % f;
    for (int d = 1; !f.is_zero() && f.degree() >= 2 * d; ++d) {
        h = powmod(h, q, f);
        Poly g = gcd(h - x, f);
        if (g.degree() > 0) {
            equal_degree(g, d, rng, out);
            f = divmod(f, g).first;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.push_back(f);
    sort_canonical(out);
    return out;
}

std::vector<Poly> factor_xn_minus_a(int n, RingElem a, const RingPtr& field) {
    if (!field->is_field()) throw DomainError("factor_xn_minus_a needs a field");
    if (n < 1) throw DomainError("n must be positive");
    if (n % field->p() == 0) throw DomainError("p divides n: x^n - a is not square-free");
    if (a.code == 0) throw DomainError("a must be nonzero");
    Poly f = Poly::monomial(field, field->one(), n) - Poly::constant(field, a);
    return factor_squarefree(f);
}

namespace {

Poly div_gamma_pow(Poly f, int k) {
    for (int i = 0; i < k; ++i) f = div_gamma(f);
    return f;
}

Poly mul_gamma_pow(Poly f, int k) {
    for (int i = 0; i < k; ++i) f = mul_gamma(f);
    return f;
}

// Lifts F = g*h from residues gbar, hbar (monic, coprime).
std::pair<Poly, Poly> lift_pair(const Poly& F, const Poly& gbar, const Poly& hbar) {
    const RingPtr& R = F.ring();
    auto eg = ext_gcd(gbar, hbar);
    if (eg.g.degree() != 0) throw NotCoprime("residue factors are not coprime");
    // eg.s * gbar + eg.t * hbar = 1
    Poly g = teich_lift(gbar, R), h = teich_lift(hbar, R);
    for (int k = 1; k < R->e(); ++k) {
        Poly E = F - g * h;
        Poly Ebar = residue(div_gamma_pow(E, k));
        if (Ebar.is_zero()) continue;
        Poly dg = (eg.t * Ebar) % gbar;
        auto [dh, rem] = divmod(Ebar - dg * hbar, gbar);
        if (!rem.is_zero()) throw DomainError("Hensel step failed");
        g = g + mul_gamma_pow(teich_lift(dg, R), k);
        h = h + mul_gamma_pow(teich_lift(dh, R), k);
    }
    return {g, h};
}

}  // namespace

std::vector<Poly> hensel_lift(const std::vector<Poly>& field_factors, const Poly& target) {
    const RingPtr& R = target.ring();
    if (!target.is_monic()) throw DomainError("Hensel target must be monic");
    Poly prod = Poly::constant(R->field(), R->field()->one());
    for (const auto& f : field_factors) {
        if (!f.is_monic()) throw DomainError("field factors must be monic");
        prod = prod * f;
    }
    if (!(prod == residue(target))) throw DomainError("field factors do not multiply to the target residue");
    std::vector<Poly> out;
    Poly rest = target;
    Poly restbar = prod;
    for (std::size_t j = 0; j + 1 < field_factors.size(); ++j) {
        restbar = divmod(restbar, field_factors[j]).first;
        auto [g, h] = lift_pair(rest, field_factors[j], restbar);
        out.push_back(g);
        rest = h;
    }
    out.push_back(rest);
    Poly check = Poly::constant(R, R->one());
    for (const auto& f : out) check = check * f;
    if (!(check == target)) throw DomainError("Hensel lift does not reproduce the target");
    return out;
}

std::pair<Poly, Poly> bezout(const Poly& k1, const Poly& k2) {
    const RingPtr& R = k1.ring();
    if (k1.is_zero() || k2.is_zero()) throw NotCoprime("zero polynomial in bezout");
    auto eg = ext_gcd(residue(k1), residue(k2));
    if (eg.g.is_zero() || eg.g.degree() != 0) throw NotCoprime("residues are not coprime");
    Poly S = teich_lift(eg.s, R), T = teich_lift(eg.t, R);
    Poly one = Poly::constant(R, R->one());
    Poly c = S * k1 + T * k2 - one;
    Poly u = one, term = one;
    for (int i = 1; i < R->e(); ++i) {
        term = -(term * c);
        u = u + term;
    }
    Poly a1 = S * u, a2 = T * u;
    if (k2.degree() > 0) {
        auto [q, r] = divmod(a1, k2);
        a1 = r;
        a2 = a2 + q * k1;
    } else {
        a1 = Poly(R);
        a2 = Poly::constant(R, R->inverse(k2.lead()));
    }
    if (!(k1 * a1 + k2 * a2 == one)) throw DomainError("bezout identity check failed");
    return {a1, a2};
}

int binom_valuation(int p, int l, long long b) {
    int v = 0;
    while (b % p == 0) {
        b /= p;
        ++v;
    }
    return l - v;
}

BinomData binom_data(int p, int s, const RingPtr& ring) {
    if (s < 1) throw DomainError("s must be at least 1");
    BinomData d;
    d.p = p;
    d.s = s;
    long long ps = 1, ps1 = 1;
    for (int i = 0; i < s; ++i) ps *= p;
    ps1 = ps / p;
    d.valuation.assign(ps, 0);
    for (long long b = 1; b < ps; ++b) {
        d.valuation[b] = binom_valuation(p, s, b);
        if (b % ps1 != 0 && d.valuation[b] < 2) throw DomainError("binomial valuation below 2 off the p^{s-1} lattice");
    }
    d.a.assign(p, RingElem{});
    for (int k = 1; k < p; ++k) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), ps, k * ps1);
        if (c % p != 0) throw DomainError("binomial not divisible by p");
        c /= p;
        if (c % p == 0) throw DomainError("binomial divisible by p^2");
        mpz_class ch = ring->characteristic();
        mpz_class r = c % ch;
        d.a[k] = ring->from_int(r.get_si());
    }
    return d;
}

}  // namespace chaincode
