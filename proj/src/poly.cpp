#include "chaincode/poly.hpp"

#include <algorithm>
#include <sstream>

namespace chaincode {

namespace {

const RingPtr& common(const Poly& a, const Poly& b) {
    if (!a.ring() || !b.ring() || !a.ring()->same(*b.ring())) throw DomainError("polynomial ring mismatch");
    return a.ring();
}

}  // namespace

Poly::Poly(RingPtr ring, std::vector<RingElem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().code == 0) c_.pop_back();
}

Poly Poly::constant(RingPtr ring, RingElem c) { return Poly(std::move(ring), {c}); }

Poly Poly::monomial(RingPtr ring, RingElem c, int k) {
    std::vector<RingElem> v(k + 1);
    v[k] = c;
    return Poly(std::move(ring), std::move(v));
}

Poly Poly::from_ints(RingPtr ring, const std::vector<long long>& c) {
    std::vector<RingElem> v;
    for (long long x : c) v.push_back(ring->from_int(x));
    return Poly(std::move(ring), std::move(v));
}

int Poly::degree() const {
    if (c_.empty()) throw DomainError("degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

int Poly::hamming_weight() const {
    return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](RingElem r) { return r.code != 0; }));
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        if (c_[i].code == 0) continue;
        if (!first) os << "+";
        first = false;
        std::string c;
        if (ring_->coord_count() == 1) {
            c = std::to_string(c_[i].code);
        } else {
            auto co = ring_->coords(c_[i]);
            c = "[";
            for (std::size_t k = 0; k < co.size(); ++k) c += (k ? "," : "") + std::to_string(co[k]);
            c += "]";
        }
        if (i == 0) {
            os << c;
        } else {
            if (c_[i] != ring_->one()) os << c << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
    const auto& r = common(a, b);
    std::vector<RingElem> v(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r->add(a.coeff(i), b.coeff(i));
    return Poly(r, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    const auto& r = common(a, b);
    std::vector<RingElem> v(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r->sub(a.coeff(i), b.coeff(i));
    return Poly(r, std::move(v));
}

Poly operator-(const Poly& a) {
    std::vector<RingElem> v(a.coeffs());
    for (auto& c : v) c = a.ring()->neg(c);
    return Poly(a.ring(), std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    const auto& r = common(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(r);
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<RingElem> v(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].code == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) v[i + j] = r->add(v[i + j], r->mul(x[i], y[j]));
    }
    return Poly(r, std::move(v));
}

Poly scale(const Poly& a, RingElem c) {
    std::vector<RingElem> v(a.coeffs());
    for (auto& x : v) x = a.ring()->mul(x, c);
    return Poly(a.ring(), std::move(v));
}

Poly pow(const Poly& a, std::uint64_t k) {
    Poly r = Poly::constant(a.ring(), a.ring()->one());
    Poly b = a;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Poly shift(const Poly& a, int k) {
    if (a.is_zero()) return a;
    std::vector<RingElem> v(k, RingElem{});
    v.insert(v.end(), a.coeffs().begin(), a.coeffs().end());
    return Poly(a.ring(), std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    const auto& r = common(a, b);
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    RingElem lc = b.lead();
    if (!r->is_unit(lc)) throw DomainError("divisor has a non-unit leading coefficient");
    RingElem inv = r->inverse(lc);
    const int db = b.degree();
    std::vector<RingElem> rem(a.coeffs());
    if (static_cast<int>(rem.size()) <= db) return {Poly(r), a};
    std::vector<RingElem> q(rem.size() - db);
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        RingElem c = r->mul(rem[i], inv);
        if (c.code == 0) continue;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = r->sub(rem[i - db + j], r->mul(c, b.coeffs()[j]));
    }
    rem.resize(db);
    return {Poly(r, std::move(q)), Poly(r, std::move(rem))};
}

std::pair<Poly, Poly> divmod_monic(const Poly& a, const Poly& b) {
    if (!b.is_monic()) throw DomainError("divisor is not monic");
    return divmod(a, b);
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& a, const mpz_class& k, const Poly& m) {
    Poly r = Poly::constant(a.ring(), a.ring()->one()) % m;
    Poly b = a % m;
    const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mulmod(r, r, m);
        if (mpz_tstbit(k.get_mpz_t(), i)) r = mulmod(r, b, m);
    }
    return r;
}

Poly mod_reduce(const Poly& a, int N, RingElem lambda) {
    const auto& r = a.ring();
    std::vector<RingElem> v(a.coeffs());
    for (int i = static_cast<int>(v.size()) - 1; i >= N; --i) {
        if (v[i].code == 0) continue;
        v[i - N] = r->add(v[i - N], r->mul(v[i], lambda));
        v[i] = RingElem{};
    }
    return Poly(r, std::move(v));
}

Poly reciprocal(const Poly& f) {
    std::vector<RingElem> v(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.ring(), std::move(v));
}

Poly make_monic(const Poly& f) { return scale(f, f.ring()->inverse(f.lead())); }

Poly residue(const Poly& f) {
    std::vector<RingElem> v;
    for (auto c : f.coeffs()) v.push_back(f.ring()->residue(c));
    return Poly(f.ring()->field(), std::move(v));
}

Poly teich_lift(const Poly& fbar, const RingPtr& ring) {
    std::vector<RingElem> v;
    for (auto c : fbar.coeffs()) v.push_back(ring->teich(c));
    return Poly(ring, std::move(v));
}

Poly mul_gamma(const Poly& f) {
    std::vector<RingElem> v;
    for (auto c : f.coeffs()) v.push_back(f.ring()->mul_gamma(c));
    return Poly(f.ring(), std::move(v));
}

Poly div_gamma(const Poly& f) {
    std::vector<RingElem> v;
    for (auto c : f.coeffs()) v.push_back(f.ring()->div_gamma(c));
    return Poly(f.ring(), std::move(v));
}

Poly gcd(const Poly& a, const Poly& b) { return ext_gcd(a, b).g; }

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    const auto& r = common(a, b);
    if (!r->is_field()) throw DomainError("gcd needs a field");
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(r, r->one()), s1(r);
    Poly t0(r), t1 = Poly::constant(r, r->one());
    while (!r1.is_zero()) {
        auto [q, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    RingElem inv = r->inverse(r0.lead());
    return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

}  // namespace chaincode
