#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "chaincode/distance.hpp"

namespace chaincode {

class CapExceeded : public DomainError {
   public:
    CapExceeded(const std::string& what, std::uint64_t lower_bound)
        : DomainError(what), lower_bound_(lower_bound) {}
    std::uint64_t lower_bound() const { return lower_bound_; }

   private:
    std::uint64_t lower_bound_;
};

// Explicit set of codewords (coefficient vectors of length N), sorted.
struct CodewordSet {
    RingPtr ring;
    int N = 0;
    std::vector<std::vector<RingElem>> words;
    std::size_t size() const { return words.size(); }
    bool contains(const std::vector<RingElem>& w) const;
};

// Additive closure of {t gamma^b x^i g} mod x^N - lambda by worklist.
CodewordSet enumerate_ideal(const std::vector<Poly>& gens, int N, RingElem lambda, std::size_t cap = 1u << 20);
int min_hamming(const CodewordSet& c);
int min_rt(const CodewordSet& c);
WeightDist rt_histogram(const CodewordSet& c);
WeightDist hamming_histogram(const CodewordSet& c);
// Every u in R^N with u.c = 0 for all c; scans |R|^N vectors.
CodewordSet dual_by_scan(const CodewordSet& c, std::size_t cap = 1u << 24);

// Z/p^a-submodule of R[x]/<modulus> (a = e for Galois rings, 1 for F_q[u]/<u^e>), kept in Howell form.
// Column order is by descending degree, so the form also exposes RT structure.
class Submodule {
   public:
    Submodule(RingPtr ring, Poly modulus);
    // Ideal generated by gens.
    static Submodule ideal(const RingPtr& ring, const Poly& modulus, const std::vector<Poly>& gens);
    static Submodule whole(const RingPtr& ring, const Poly& modulus);

    const RingPtr& ring() const { return ring_; }
    const Poly& modulus() const { return modulus_; }
    int length() const { return D_; }

    mpz_class size() const;
    bool contains(const Poly& f) const;
    bool is_ideal() const;
    bool is_zero() const { return rows_.empty(); }
    std::vector<Poly> basis() const;
    Submodule plus(const Submodule& o) const;
    Submodule plus_ideal(const Poly& g) const;
    Submodule intersect(const Submodule& o) const;
    // Needs modulus x^N - lambda style layout (any monic modulus works; weight = 1 + max degree).
    WeightDist rt_histogram() const;
    int min_rt() const;
    // Explicit elements via the Howell basis (mixed radix), throws CapExceeded.
    CodewordSet elements(std::size_t cap = 1u << 20) const;
    // Minimum Hamming weight: full enumeration when |C| <= cap, otherwise a search over
    // vectors of increasing weight (at most search_budget membership tests).
    int min_hamming(std::size_t cap = 1u << 20, std::size_t search_budget = 1u << 22) const;
    std::string key() const;

    friend bool operator==(const Submodule& a, const Submodule& b) { return a.rows_ == b.rows_; }

    // internals shared with the kernel routines
    using Row = std::vector<std::uint64_t>;
    std::vector<std::uint64_t> to_vec(const Poly& f) const;
    Poly to_poly(const Row& v) const;
    void add_rows(std::vector<Row> extra);
    const std::vector<Row>& rows() const { return rows_; }

   private:
    RingPtr ring_;
    Poly modulus_;
    int D_ = 0, L_ = 0, a_ = 0;
    std::uint64_t pa_ = 0;
    std::vector<Row> rows_;
};

Submodule annihilator(const Submodule& c);
// Reverses coefficient vectors of ann(C), landing in R[x]/<x^N - lambda^{-1}>.
Submodule dual_from_ann(const Submodule& ann, RingElem lambda);
Submodule dual_inner_product(const Submodule& c, RingElem lambda);

// Every ideal of R[x]/<modulus>, by closure over the ideal lattice (ambient size <= cap).
std::vector<Submodule> all_ideals(const RingPtr& ring, const Poly& modulus, std::size_t cap = 1u << 16);

// Smallest kappa in [0, omega] with gamma f^kappa in <f^omega + gamma f^t G> inside K_j.
int kappa_bruteforce(const Decomposition& dec, int j, int omega, int t, const Poly& G);

// v_p(binom(p^l, b)) by repeated division of the big integer.
int binom_valuation_oracle(int p, int l, long long b);

struct Check {
    std::string name;
    nlohmann::json formula_value, oracle_value;
    std::string status;  // pass | fail | skipped
};

struct Report {
    std::vector<Check> checks;
    bool pass() const;
    nlohmann::json to_json() const;
};

// Formula-side values; computed once, editable for negative controls.
struct FormulaValues {
    mpz_class size;
    GeneratedIdeal gens, dual;
    bool has_distances = false;
    Distances dist;
    std::vector<int> kappa;  // per component, -1 when not applicable
};
FormulaValues formula_values(const CodeSpec& code);
Report verify_values(const CodeSpec& code, const FormulaValues& f, std::size_t cap = 1u << 20);
Report verify_report(const CodeSpec& code, std::size_t cap = 1u << 20);

}  // namespace chaincode
