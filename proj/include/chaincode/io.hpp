#pragma once

#include <json.hpp>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chaincode/oracle.hpp"

namespace chaincode {

struct Job {
    std::string command;  // factor classify size dual dist wdist isodual verify
    // ring
    std::string family = "gr";
    int p = 2, e = 2, m = 1;
    std::vector<int> modulus;  // empty: bundled default
    // code
    int n = 1, s = 1;
    std::string lambda = "1";
    std::optional<std::string> type;
    std::optional<int> nu, tau, omega, t, mu;
    std::string G;  // literal, empty means G = 0
    std::optional<int> j;
    std::string metric = "rt";
    std::string grid;  // verify --grid small
    std::string format = "json";
    std::string out;   // empty: stdout
    std::size_t cap = 1u << 20;
};

// Cap from CHAINCODE_CAP when set, else the default.
std::size_t default_cap();

RingPtr job_ring(const Job& job);
// Integer (applied to the constant coordinate) or a coordinate list "[a,b,...]".
RingElem parse_elem(const RingPtr& ring, const std::string& text);
// Ascending coefficient list, each entry an integer or a coordinate list, e.g. "[1,[0,1]]".
Poly parse_poly(const RingPtr& ring, const std::string& text);
// Ideal parameters of the job for component j (defaults to 1).
IdealSpec parse_ideal(const Decomposition& dec, const Job& job);

nlohmann::json elem_json(const RingPtr& ring, RingElem a);
nlohmann::json ideal_json(const IdealSpec& sp);
nlohmann::json dist_json(const WeightDist& w);

// JSON document for a job; throws DomainError. Sets verify_failed for failing verify jobs.
nlohmann::json run_job(const Job& job, bool& verify_failed);
// Human-readable rendering of a run_job document.
std::string render_tables(const nlohmann::json& doc);

// Full command line entry point; returns the exit code.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace chaincode
