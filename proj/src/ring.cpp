#include "chaincode/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace chaincode {

namespace {

constexpr std::uint32_t kTableLimit = 256;
constexpr std::uint64_t kSizeLimit = 1u << 24;

std::uint64_t ipow(std::uint64_t b, int k) {
    std::uint64_t r = 1;
    while (k-- > 0) r *= b;
    return r;
}

// Remainder of a modulo monic b over F_p, both ascending.
std::vector<int> rem_mod_p(std::vector<int> a, const std::vector<int>& b, int p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        int c = a.back() % p;
        if (c != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        }
        a.pop_back();
    }
    return a;
}

bool irreducible_mod_p(const std::vector<int>& h, int p) {
    const int m = static_cast<int>(h.size()) - 1;
    for (int d = 1; 2 * d <= m; ++d) {
        std::vector<int> cand(d + 1, 0);
        cand[d] = 1;
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t v = idx;
            for (int i = 0; i < d; ++i) {
                cand[i] = static_cast<int>(v % p);
                v /= p;
            }
            auto r = rem_mod_p(h, cand, p);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<int> default_modulus(int p, int m) {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 1}, {1, 1}},          {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}}, {{3, 1}, {1, 1}},          {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}}, {{5, 1}, {1, 1}},
        {{5, 2}, {2, 4, 1}},       {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}},
    };
    if (auto it = table.find({p, m}); it != table.end()) return it->second;
    if (m < 1 || !is_prime(p)) throw DomainError("no default modulus");
    std::vector<int> h(m + 1, 0);
    h[m] = 1;
    const std::uint64_t count = ipow(p, m);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t v = idx;
        for (int i = 0; i < m; ++i) {
            h[i] = static_cast<int>(v % p);
            v /= p;
        }
        if (irreducible_mod_p(h, p)) return h;
    }
    throw DomainError("no irreducible polynomial found");
}

RingPtr make_field(int p, int m, const std::vector<int>& modulus) {
    auto r = std::make_shared<Ring>(Ring::Private{}, Family::GaloisRing, p, 1, m, modulus);
    r->init();
    return r;
}

RingPtr make_ring(Family family, int p, int e, int m, std::vector<int> modulus) {
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (e < 2) throw DomainError("nilpotency index e must be at least 2");
    if (m < 1) throw DomainError("residue degree m must be at least 1");
    if (modulus.empty()) modulus = default_modulus(p, m);
    if (static_cast<int>(modulus.size()) != m + 1 || modulus.back() != 1)
        throw DomainError("modulus must be monic of degree m");
    for (int c : modulus)
        if (c < 0 || c >= p) throw DomainError("modulus coefficients must lie in [0, p)");
    if (!irreducible_mod_p(modulus, p)) throw DomainError("modulus is reducible over F_p");
    if (ipow(p, m * e) > kSizeLimit) throw DomainError("ring too large for this implementation");
    auto r = std::make_shared<Ring>(Ring::Private{}, family, p, e, m, std::move(modulus));
    r->init();
    return r;
}

Ring::Ring(Private, Family family, int p, int e, int m, std::vector<int> modulus)
    : family_(family), p_(p), e_(e), m_(m), modulus_(std::move(modulus)) {}

void Ring::init() {
    if (family_ == Family::GaloisRing) {
        cmod_ = static_cast<std::uint32_t>(ipow(p_, e_));
        ncoords_ = m_;
        char_ = cmod_;
    } else {
        cmod_ = p_;
        ncoords_ = e_ * m_;
        char_ = p_;
    }
    size_ = static_cast<std::uint32_t>(ipow(cmod_, ncoords_));
    for (int c : modulus_) lifted_.push_back(static_cast<std::uint32_t>(c));
    one_ = {1};
    if (!is_field()) field_ = make_field(p_, m_, modulus_);

    if (family_ == Family::GaloisRing) {
        gamma_ = {is_field() ? 0u : static_cast<std::uint32_t>(p_)};
        z_ = is_field() ? RingElem{0} : one_;
    } else {
        gamma_ = {static_cast<std::uint32_t>(ipow(p_, m_))};
        z_ = {0};
    }

    if (size_ <= kTableLimit) {
        add_tab_.resize(size_ * size_);
        mul_tab_.resize(size_ * size_);
        for (std::uint32_t a = 0; a < size_; ++a)
            for (std::uint32_t b = 0; b < size_; ++b) {
                add_tab_[a * size_ + b] = add_raw({a}, {b}).code;
                mul_tab_[a * size_ + b] = mul_raw({a}, {b}).code;
            }
    }

    if (is_field()) {
        // log/exp tables from the smallest primitive element
        const std::uint32_t q = size_;
        exp_.assign(q, 0);
        log_.assign(q, 0);
        for (std::uint32_t g = 1; g < q; ++g) {
            std::vector<std::uint32_t> seen(q, 0);
            std::uint32_t x = 1, k = 0;
            bool ok = true;
            for (k = 0; k + 1 < q; ++k) {
                if (seen[x]) {
                    ok = false;
                    break;
                }
                seen[x] = 1;
                exp_[k] = x;
                log_[x] = k;
                x = mul_raw({x}, {g}).code;
            }
            if (ok && x == 1) {
                zeta_ = {g};
                break;
            }
        }
        teich_tab_.resize(q);
        std::iota(teich_tab_.begin(), teich_tab_.end(), 0u);
    } else {
        const std::uint32_t q = field_->size();
        teich_tab_.resize(q);
        const std::uint64_t qq = q;
        for (std::uint32_t f = 0; f < q; ++f) {
            if (family_ == Family::EisensteinU) {
                teich_tab_[f] = f;
                continue;
            }
            RingElem t = from_coords(field_->coords({f}));
            for (;;) {
                RingElem nt = pow(t, qq);
                if (nt == t) break;
                t = nt;
            }
            teich_tab_[f] = t.code;
        }
        zeta_ = teich(field_->zeta());
    }

    if (size_ <= kTableLimit) {
        inv_tab_.assign(size_, 0);
        for (std::uint32_t a = 0; a < size_; ++a)
            if (is_unit({a})) {
                for (std::uint32_t b = 1; b < size_; ++b)
                    if (mul({a}, {b}) == one_) {
                        inv_tab_[a] = b;
                        break;
                    }
            }
    }
}

std::string Ring::name() const {
    const std::string q = std::to_string(ipow(p_, m_));
    if (is_field()) return "F_" + q;
    if (family_ == Family::GaloisRing) {
        if (m_ == 1) return "Z_" + std::to_string(cmod_);
        return "GR(" + std::to_string(cmod_) + "," + std::to_string(m_) + ")";
    }
    return "F_" + q + "[u]/<u^" + std::to_string(e_) + ">";
}

bool Ring::same(const Ring& o) const {
    return this == &o || (family_ == o.family_ && p_ == o.p_ && e_ == o.e_ && m_ == o.m_ && modulus_ == o.modulus_);
}

std::vector<std::uint32_t> Ring::coords(RingElem a) const {
    std::vector<std::uint32_t> c(ncoords_);
    std::uint32_t v = a.code;
    for (int i = 0; i < ncoords_; ++i) {
        c[i] = v % cmod_;
        v /= cmod_;
    }
    return c;
}

RingElem Ring::from_coords(const std::vector<std::uint32_t>& c) const {
    std::uint32_t v = 0;
    for (int i = ncoords_ - 1; i >= 0; --i) v = v * cmod_ + (i < static_cast<int>(c.size()) ? c[i] % cmod_ : 0);
    return {v};
}

RingElem Ring::from_int(long long v) const {
    long long r = v % static_cast<long long>(char_);
    if (r < 0) r += char_;
    return {static_cast<std::uint32_t>(r)};
}

RingElem Ring::add_raw(RingElem a, RingElem b) const {
    std::uint32_t x = a.code, y = b.code, r = 0, scale = 1;
    for (int i = 0; i < ncoords_; ++i) {
        r += ((x % cmod_ + y % cmod_) % cmod_) * scale;
        x /= cmod_;
        y /= cmod_;
        scale *= cmod_;
    }
    return {r};
}

RingElem Ring::mul_raw(RingElem a, RingElem b) const {
    if (is_field() && !log_.empty() && zeta_.code != 0) {
        if (a.code == 0 || b.code == 0) return {0};
        return {exp_[(log_[a.code] + log_[b.code]) % (size_ - 1)]};
    }
    if (family_ == Family::GaloisRing) {
        auto x = coords(a), y = coords(b);
        std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(x[i]) * y[j]) % cmod_;
        for (int k = 2 * m_ - 2; k >= m_; --k) {
            std::uint64_t c = prod[k];
            if (c == 0) continue;
            for (int i = 0; i < m_; ++i)
                prod[k - m_ + i] = (prod[k - m_ + i] + (cmod_ - c) * lifted_[i]) % cmod_;
            prod[k] = 0;
        }
        std::vector<std::uint32_t> r(m_);
        for (int i = 0; i < m_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
        return from_coords(r);
    }
    const std::uint32_t q = field_->size();
    std::vector<std::uint32_t> da(e_), db(e_), dc(e_, 0);
    std::uint32_t x = a.code, y = b.code;
    for (int i = 0; i < e_; ++i) {
        da[i] = x % q;
        db[i] = y % q;
        x /= q;
        y /= q;
    }
    for (int i = 0; i < e_; ++i)
        for (int j = 0; i + j < e_; ++j) dc[i + j] = field_->add({dc[i + j]}, field_->mul({da[i]}, {db[j]})).code;
    std::uint32_t r = 0;
    for (int i = e_ - 1; i >= 0; --i) r = r * q + dc[i];
    return {r};
}

RingElem Ring::add(RingElem a, RingElem b) const {
    if (!add_tab_.empty()) return {add_tab_[a.code * size_ + b.code]};
    return add_raw(a, b);
}

RingElem Ring::neg(RingElem a) const {
    std::uint32_t x = a.code, r = 0, scale = 1;
    for (int i = 0; i < ncoords_; ++i) {
        r += ((cmod_ - x % cmod_) % cmod_) * scale;
        x /= cmod_;
        scale *= cmod_;
    }
    return {r};
}

RingElem Ring::sub(RingElem a, RingElem b) const { return add(a, neg(b)); }

RingElem Ring::mul(RingElem a, RingElem b) const {
    if (!mul_tab_.empty()) return {mul_tab_[a.code * size_ + b.code]};
    return mul_raw(a, b);
}

RingElem Ring::pow(RingElem a, std::uint64_t k) const {
    RingElem r = one_;
    while (k > 0) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

bool Ring::is_unit(RingElem a) const { return residue(a).code != 0; }

RingElem Ring::inverse(RingElem a) const {
    if (!is_unit(a)) throw NonUnit("element is not a unit");
    if (!inv_tab_.empty()) return {inv_tab_[a.code]};
    const std::uint64_t q = ipow(p_, m_);
    const std::uint64_t units = ipow(q, e_ - 1) * (q - 1);
    return pow(a, units - 1);
}

RingPtr Ring::field() const {
    if (is_field()) return shared_from_this();
    return field_;
}

RingElem Ring::residue(RingElem a) const {
    if (is_field()) return a;
    if (family_ == Family::EisensteinU) return {a.code % field_->size()};
    auto c = coords(a);
    std::uint32_t r = 0;
    for (int i = m_ - 1; i >= 0; --i) r = r * p_ + c[i] % p_;
    return {r};
}

RingElem Ring::teich(RingElem f) const { return {teich_tab_.at(f.code)}; }

std::vector<RingElem> Ring::teichmuller_set() const {
    std::vector<RingElem> out{zero()};
    const std::uint64_t q = ipow(p_, m_);
    RingElem x = one_;
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
        out.push_back(x);
        x = mul(x, zeta_);
    }
    return out;
}

RingElem Ring::mul_gamma(RingElem a) const {
    if (family_ == Family::EisensteinU) return {static_cast<std::uint32_t>((std::uint64_t(a.code) * field_->size()) % size_)};
    auto c = coords(a);
    for (auto& x : c) x = static_cast<std::uint32_t>((std::uint64_t(x) * p_) % cmod_);
    return from_coords(c);
}

RingElem Ring::div_gamma(RingElem a) const {
    if (residue(a).code != 0) throw DomainError("element is not divisible by gamma");
    if (is_field()) return zero();
    if (family_ == Family::EisensteinU) return {a.code / field_->size()};
    auto c = coords(a);
    for (auto& x : c) x /= p_;
    return from_coords(c);
}

int Ring::valuation(RingElem a) const {
    int v = 0;
    while (v < e_ && a.code != 0 && residue(a).code == 0) {
        a = div_gamma(a);
        ++v;
    }
    return a.code == 0 ? e_ : v;
}

std::vector<RingElem> Ring::gamma_adic(RingElem a) const {
    std::vector<RingElem> d(e_);
    for (int i = 0; i < e_; ++i) {
        d[i] = teich(residue(a));
        if (i + 1 < e_) a = div_gamma(sub(a, d[i]));
    }
    return d;
}

RingElem Ring::from_digits(const std::vector<RingElem>& digits) const {
    RingElem r = zero();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) r = add(mul_gamma(r), *it);
    return r;
}

RingElem Ring::teich_root(RingElem alpha, int s) const {
    if (alpha.code == 0 || !in_teichmuller(alpha)) throw DomainError("teich_root needs a nonzero Teichmuller element");
    const std::uint64_t order = ipow(p_, m_) - 1;
    std::uint64_t sigma = 1;
    if (order > 1) {
        const std::uint64_t ps = ipow(p_, s) % order;
        sigma = 0;
        for (std::uint64_t c = 1; c < order; ++c)
            if ((c * ps) % order == 1) {
                sigma = c;
                break;
            }
    }
    RingElem r = pow(alpha, sigma);
    if (pow(r, ipow(p_, s)) != alpha) throw DomainError("teich_root failed to verify");
    return r;
}

UnitDecomposition Ring::decompose_unit(RingElem lambda) const {
    if (!is_unit(lambda)) throw NonUnit("lambda is not a unit");
    auto d = gamma_adic(lambda);
    UnitDecomposition out;
    out.head = d[0];
    std::vector<RingElem> rest(d.begin() + 1, d.end());
    out.tail = from_digits(rest);
    out.tail_is_unit = d.size() > 1 && d[1].code != 0;
    return out;
}

}  // namespace chaincode
