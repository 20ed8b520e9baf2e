#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "chaincode/ring.hpp"

namespace chaincode {

// Dense univariate polynomial, ascending coefficients, trailing zeros trimmed.
class Poly {
   public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, std::vector<RingElem> coeffs);

    static Poly constant(RingPtr ring, RingElem c);
    static Poly monomial(RingPtr ring, RingElem c, int k);
    static Poly x(RingPtr ring) { return monomial(ring, ring->one(), 1); }
    static Poly from_ints(RingPtr ring, const std::vector<long long>& c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<RingElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Throws on the zero polynomial; check is_zero() first.
    int degree() const;
    RingElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RingElem{}; }
    RingElem lead() const { return degree(), c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == ring_->one(); }

    int rt_weight() const { return static_cast<int>(c_.size()); }
    int hamming_weight() const;
    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

   private:
    void trim();
    RingPtr ring_;
    std::vector<RingElem> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, RingElem c);
Poly pow(const Poly& a, std::uint64_t k);
Poly shift(const Poly& a, int k);

// Division by a polynomial whose leading coefficient is a unit.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Public form: the divisor must be monic.
std::pair<Poly, Poly> divmod_monic(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, const mpz_class& k, const Poly& m);
// Reduction modulo x^N - lambda.
Poly mod_reduce(const Poly& a, int N, RingElem lambda);

Poly reciprocal(const Poly& f);
Poly make_monic(const Poly& f);

Poly residue(const Poly& f);
Poly teich_lift(const Poly& fbar, const RingPtr& ring);
Poly mul_gamma(const Poly& f);
Poly div_gamma(const Poly& f);

// Over a field.
Poly gcd(const Poly& a, const Poly& b);
// (g, s, t) with s*a + t*b = g, g monic.
struct ExtGcd {
    Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

class NotCoprime : public DomainError {
   public:
    using DomainError::DomainError;
};

// Monic irreducible factors of x^n - a over the field of a, canonical order.
std::vector<Poly> factor_xn_minus_a(int n, RingElem a, const RingPtr& field);
// Same for any monic square-free polynomial over a field.
std::vector<Poly> factor_squarefree(const Poly& f);
void sort_canonical(std::vector<Poly>& polys);

// Lift monic coprime residue factors of target (monic over the ring) to an exact factorization.
std::vector<Poly> hensel_lift(const std::vector<Poly>& field_factors, const Poly& target);

// (a1, a2) with k1*a1 + k2*a2 = 1, deg a1 < deg k2, deg a2 < deg k1.
std::pair<Poly, Poly> bezout(const Poly& k1, const Poly& k2);

// v_p(binom(p^l, b)) for 1 <= b < p^l, via l - v_p(b).
int binom_valuation(int p, int l, long long b);

struct BinomData {
    int p = 0, s = 0;
    std::vector<int> valuation;   // index b, 1 <= b < p^s
    std::vector<RingElem> a;      // index k, 1 <= k <= p-1: binom(p^s, k p^{s-1}) / p in the ring
};
BinomData binom_data(int p, int s, const RingPtr& ring);

}  // namespace chaincode
