#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaincode/poly.hpp"

namespace chaincode {

// One factor k_j = f_j^{p^s} + gamma*g_j of x^{np^s} - lambda.
struct FactorComponent {
    int index = 0;  // 1-based
    int d = 0;
    Poly f, g, k;
    Poly fbar;
    Poly M;     // beta = 0, char p^2 only; reduced mod f^{p^s - p^{s-1}}
    Poly v, w;  // Bezout cofactors of f^{p^s} against the later factors
};

struct Decomposition {
    RingPtr ring;
    int n = 0, s = 0, N = 0;
    long long ps = 0, ps1 = 0;  // p^s, p^{s-1}
    RingElem lambda;
    UnitDecomposition lam;  // (alpha, beta) or (theta, omega)
    RingElem alpha0;        // alpha0^{p^s} = alpha
    bool beta_zero = false;
    bool char_p2 = false;        // characteristic p^2 (only meaningful when e = 2)
    bool general_unit = false;   // e >= 3 chain case, single component x^N - lambda
    bool irreducible = false;    // x^n - alpha0bar irreducible over the residue field
    std::vector<FactorComponent> comps;

    bool chain() const { return general_unit || !beta_zero; }
    int e() const { return ring->e(); }
    int r() const { return static_cast<int>(comps.size()); }
};

// e = 2: factorization of x^{np^s} - lambda into pairwise coprime k_j.
Decomposition lemma_fac(const RingPtr& ring, int n, int s, RingElem lambda);
// e >= 2 with a unit tail and x^n - lambda0bar irreducible: one chain component.
Decomposition unit_case_decomposition(const RingPtr& ring, int n, int s, RingElem lambda);
// lemma_fac for e = 2, unit_case_decomposition otherwise.
Decomposition analyze(const RingPtr& ring, int n, int s, RingElem lambda);

enum class IdealKind { Zero, Unit, ChainPower, TypeII, TypeIII, TypeIV };
std::string kind_name(IdealKind k);

struct IdealSpec {
    IdealKind kind = IdealKind::Zero;
    int j = 1;
    int nu = 0, tau = 0, omega = 0, t = 0, mu = 0;
    Poly G;           // zero when absent
    int G_len = 0;    // number of f-adic digits of G
    int kappa = 0;
    int delta = -1;   // -1 when not applicable
    Poly A_G;
};

struct KappaData {
    int kappa = 0;
    int delta = -1;  // p^s - p^{s-1} stands for "at least p^s - p^{s-1}" (including A_G = 0)
    Poly A_G;
};

struct NilpotencyData {
    std::string ideal_of_f_pow_ps;  // "<gamma>", "{0}" or "<gamma*f^{p^(s-1)}>"
    long long index = 0;
};
NilpotencyData nilpotency_data(const Decomposition& dec);

// f-adic digits of a residue polynomial modulo fbar^len, as field polynomials of degree < d.
std::vector<Poly> f_adic_digits(const Poly& abar, const Poly& fbar, int len);

KappaData kappa(const Decomposition& dec, int j, int omega, int t, const Poly& G);

// Validates and canonicalizes user-supplied parameters (fills kappa, delta, A_G, truncates G).
IdealSpec make_ideal(const Decomposition& dec, int j, IdealKind kind, int nu, int tau, int omega, int t, int mu,
                     const Poly& G);

struct Census {
    std::uint64_t trivial = 0, type2 = 0, type3 = 0, type4 = 0, chain = 0;
    std::uint64_t total() const { return trivial + type2 + type3 + type4 + chain; }
};

// All ideals of K_j. Throws DomainError when more than cap would be produced.
std::vector<IdealSpec> classify_ideals(const Decomposition& dec, int j, std::size_t cap = 1u << 20);
// Counts without materializing; visits at most limit candidate G polynomials.
Census census(const Decomposition& dec, int j, std::uint64_t limit = 50'000'000);

// Generators of the ideal inside K_j = R[x]/<k_j>.
std::vector<Poly> component_generators(const Decomposition& dec, const IdealSpec& spec);

mpz_class ideal_size(const Decomposition& dec, const IdealSpec& spec);
// |I| = |Res||Tor| = p^{md(2p^s - omega - kappa)} style count, used as a cross-check.
mpz_class ideal_size_res_tor(const Decomposition& dec, const IdealSpec& spec);

// An ideal given by generators in R[x]/<modulus>.
struct GeneratedIdeal {
    Poly modulus;
    std::vector<Poly> gens;
};

// Orthogonal complement inside R[x]/<k_j^*> (monic form).
GeneratedIdeal dual_ideal(const Decomposition& dec, const IdealSpec& spec);

struct CodeSpec {
    Decomposition dec;
    std::vector<IdealSpec> parts;  // one per component
};

CodeSpec crt_compose(const Decomposition& dec, std::vector<IdealSpec> parts);
std::vector<IdealSpec> crt_decompose(const CodeSpec& code);
mpz_class code_size(const CodeSpec& code);
// Generators in R[x]/<x^N - lambda>.
GeneratedIdeal code_generators(const CodeSpec& code);
// Generators in R[x]/<x^N - lambda^{-1}>.
GeneratedIdeal code_dual(const CodeSpec& code);
// Number of codes: product of per-component ideal counts.
mpz_class code_count(const Decomposition& dec);

struct IsodualCode {
    std::string family;
    CodeSpec code;
};
std::vector<IsodualCode> isodual_codes(const Decomposition& dec, std::size_t cap = 1u << 20);

}  // namespace chaincode
