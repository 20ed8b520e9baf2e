#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace chaincode {

// Raised for inputs outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NonUnit : public DomainError {
   public:
    using DomainError::DomainError;
};

enum class Family { GaloisRing, EisensteinU };

struct RingElem {
    std::uint32_t code = 0;
    friend bool operator==(RingElem, RingElem) = default;
    friend auto operator<=>(RingElem, RingElem) = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// (alpha, beta) with lambda = alpha + gamma*beta when e = 2; (theta, omega) in general.
struct UnitDecomposition {
    RingElem head;
    RingElem tail;
    bool tail_is_unit = false;
};

std::vector<int> default_modulus(int p, int m);
bool is_prime(long long v);

// Validated construction. An empty modulus selects the bundled default.
RingPtr make_ring(Family family, int p, int e, int m, std::vector<int> modulus = {});
// F_{p^m} as a one-digit ring; used for residue fields.
RingPtr make_field(int p, int m, const std::vector<int>& modulus);

class Ring : public std::enable_shared_from_this<Ring> {
   public:
    struct Private {};
    Ring(Private, Family family, int p, int e, int m, std::vector<int> modulus);

    Family family() const { return family_; }
    int p() const { return p_; }
    int e() const { return e_; }
    int m() const { return m_; }
    const std::vector<int>& modulus() const { return modulus_; }
    std::uint32_t size() const { return size_; }
    std::uint32_t characteristic() const { return char_; }
    bool is_field() const { return e_ == 1; }
    std::string name() const;
    bool same(const Ring& o) const;

    // Elements are vectors of coord_count() coordinates in Z/p^coord_exponent().
    int coord_count() const { return ncoords_; }
    int coord_exponent() const { return family_ == Family::GaloisRing ? e_ : 1; }
    std::uint32_t coord_modulus() const { return cmod_; }
    std::vector<std::uint32_t> coords(RingElem a) const;
    RingElem from_coords(const std::vector<std::uint32_t>& c) const;

    RingElem zero() const { return {0}; }
    RingElem one() const { return one_; }
    RingElem gamma() const { return gamma_; }
    // p = gamma * z when the characteristic is p^2; zero (unused) otherwise.
    RingElem z() const { return z_; }
    RingElem from_int(long long v) const;

    RingElem add(RingElem a, RingElem b) const;
    RingElem sub(RingElem a, RingElem b) const;
    RingElem neg(RingElem a) const;
    RingElem mul(RingElem a, RingElem b) const;
    RingElem pow(RingElem a, std::uint64_t k) const;
    RingElem inverse(RingElem a) const;
    bool is_unit(RingElem a) const;

    RingPtr field() const;
    RingElem residue(RingElem a) const;
    RingElem teich(RingElem field_elem) const;
    bool in_teichmuller(RingElem a) const { return teich(residue(a)) == a; }
    std::vector<RingElem> teichmuller_set() const;
    RingElem zeta() const { return zeta_; }

    std::vector<RingElem> gamma_adic(RingElem a) const;
    RingElem from_digits(const std::vector<RingElem>& digits) const;
    RingElem mul_gamma(RingElem a) const;
    RingElem div_gamma(RingElem a) const;
    int valuation(RingElem a) const;

    RingElem teich_root(RingElem alpha, int s) const;
    UnitDecomposition decompose_unit(RingElem lambda) const;

   private:
    friend RingPtr make_ring(Family, int, int, int, std::vector<int>);
    friend RingPtr make_field(int, int, const std::vector<int>&);
    void init();
    RingElem mul_raw(RingElem a, RingElem b) const;
    RingElem add_raw(RingElem a, RingElem b) const;

    Family family_;
    int p_, e_, m_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> lifted_;  // modulus lifted to Z/p^e (GaloisRing)
    std::uint32_t size_ = 0, char_ = 0, cmod_ = 0;
    int ncoords_ = 0;
    RingElem one_, gamma_, z_, zeta_;
    RingPtr field_;
    std::vector<std::uint32_t> add_tab_, mul_tab_, inv_tab_;
    std::vector<std::uint32_t> teich_tab_;
    std::vector<std::uint32_t> log_, exp_;  // fields only
};

}  // namespace chaincode
