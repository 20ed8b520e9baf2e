#include "chaincode/io.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace chaincode {

using nlohmann::json;

namespace {

json big(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json poly_json(const Poly& f) { return f.to_string(); }

json polys_json(const std::vector<Poly>& v) {
    auto a = json::array();
    for (const auto& f : v) a.push_back(poly_json(f));
    return a;
}

std::string lit_error(const std::string& what, const std::string& text, std::size_t pos) {
    return what + " at position " + std::to_string(pos) + " in '" + text + "'";
}

RingElem elem_from_json(const RingPtr& ring, const json& v, const std::string& text) {
    if (v.is_number_integer()) return ring->from_int(v.get<long long>());
    if (v.is_array()) {
        if (static_cast<int>(v.size()) > ring->coord_count())
            throw DomainError("element literal '" + text + "' has more than " + std::to_string(ring->coord_count()) +
                              " coordinates");
        std::vector<std::uint32_t> c;
        for (const auto& x : v) {
            if (!x.is_number_integer()) throw DomainError("coordinates must be integers in '" + text + "'");
            long long r = x.get<long long>() % static_cast<long long>(ring->coord_modulus());
            if (r < 0) r += ring->coord_modulus();
            c.push_back(static_cast<std::uint32_t>(r));
        }
        return ring->from_coords(c);
    }
    throw DomainError("expected an integer or a coordinate list in '" + text + "'");
}

json parse_literal(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(lit_error("parse error", text, e.byte));
    }
}

std::optional<IdealKind> kind_from(const std::string& s) {
    if (s == "zero") return IdealKind::Zero;
    if (s == "unit") return IdealKind::Unit;
    if (s == "chain") return IdealKind::ChainPower;
    if (s == "ii") return IdealKind::TypeII;
    if (s == "iii") return IdealKind::TypeIII;
    if (s == "iv") return IdealKind::TypeIV;
    return std::nullopt;
}

struct Setup {
    RingPtr ring;
    Decomposition dec;
};

Setup setup(const Job& job) {
    Setup st;
    st.ring = job_ring(job);
    RingElem lam = parse_elem(st.ring, job.lambda);
    if (!st.ring->is_unit(lam)) throw NonUnit("lambda = " + job.lambda + " is not a unit");
    if (job.n < 1) throw DomainError("n must be positive");
    if (job.n % job.p == 0) throw DomainError("p divides n");
    st.dec = analyze(st.ring, job.n, job.s, lam);
    return st;
}

// The job's ideal sits in component j; the remaining components are zero.
CodeSpec job_code(const Decomposition& dec, const Job& job) {
    IdealSpec sp = parse_ideal(dec, job);
    std::vector<IdealSpec> parts(dec.r());
    for (int i = 0; i < dec.r(); ++i) {
        parts[i].j = i + 1;
        parts[i].kind = IdealKind::Zero;
    }
    parts[sp.j - 1] = sp;
    return crt_compose(dec, parts);
}

json header(const Job& job, const Decomposition& dec) {
    json h = {{"schema", "1"},
              {"command", job.command},
              {"ring", dec.ring->name()},
              {"n", dec.n},
              {"s", dec.s},
              {"N", dec.N},
              {"lambda", elem_json(dec.ring, dec.lambda)}};
    return h;
}

json code_json(const CodeSpec& c) {
    auto a = json::array();
    for (const auto& p : c.parts) a.push_back(ideal_json(p));
    return a;
}

json factor_doc(const Job& job, const Decomposition& dec) {
    json d = header(job, dec);
    d["beta_zero"] = dec.beta_zero;
    d["chain"] = dec.chain();
    d["irreducible"] = dec.irreducible;
    auto comps = json::array();
    Poly prod = Poly::constant(dec.ring, dec.ring->one());
    for (const auto& c : dec.comps) {
        json cj = {{"j", c.index}, {"d", c.d}, {"f", poly_json(c.f)}, {"g", poly_json(c.g)}, {"k", poly_json(c.k)}};
        if (!c.M.is_zero()) cj["M"] = poly_json(c.M);
        comps.push_back(cj);
        prod = prod * c.k;
    }
    d["components"] = comps;
    Poly target = Poly::monomial(dec.ring, dec.ring->one(), dec.N) - Poly::constant(dec.ring, dec.lambda);
    d["product_matches"] = prod == target;
    d["code_count"] = big(code_count(dec));
    return d;
}

json classify_doc(const Job& job, const Decomposition& dec) {
    json d = header(job, dec);
    auto comps = json::array();
    for (int j = 1; j <= dec.r(); ++j) {
        if (job.j && *job.j != j) continue;
        Census c = census(dec, j);
        mpz_class ksize;
        mpz_ui_pow_ui(ksize.get_mpz_t(), dec.ring->size(), dec.comps[j - 1].k.degree());
        json cj = {{"j", j},
                   {"d", dec.comps[j - 1].d},
                   {"component_size", big(ksize)},
                   {"census",
                    {{"trivial", c.trivial},
                     {"chain", c.chain},
                     {"ii", c.type2},
                     {"iii", c.type3},
                     {"iv", c.type4},
                     {"total", c.total()}}}};
        if (job.j) {
            auto ideals = json::array();
            for (const auto& sp : classify_ideals(dec, j, job.cap)) ideals.push_back(ideal_json(sp));
            cj["ideals"] = ideals;
        }
        comps.push_back(cj);
    }
    if (job.j && (*job.j < 1 || *job.j > dec.r())) throw DomainError("component index out of range");
    d["components"] = comps;
    d["code_count"] = big(code_count(dec));
    return d;
}

json isodual_doc(const Job& job, const Decomposition& dec) {
    json d = header(job, dec);
    auto fams = json::array();
    for (const auto& ic : isodual_codes(dec, job.cap)) {
        const auto& sp = ic.code.parts[0];
        fams.push_back({{"family", ic.family}, {"ideal", ideal_json(sp)}, {"size", big(code_size(ic.code))}});
    }
    d["codes"] = fams;
    return d;
}

// Distances: closed forms when available, else the oracle within the cap.
json dist_doc(const Job& job, const Decomposition& dec, bool weights) {
    CodeSpec code = job_code(dec, job);
    json d = header(job, dec);
    d["code"] = code_json(code);
    d["size"] = big(code_size(code));
    d["metric"] = job.metric;
    const bool closed = dec.r() == 1 && dec.irreducible;
    if (job.metric != "rt" && job.metric != "hamming") throw DomainError("metric must be rt or hamming");
    if (closed && (!weights || job.metric == "rt")) {
        Distances ds = code_distances(code);
        d["source"] = "formula";
        if (weights) {
            d["distribution"] = dist_json(ds.rt);
        } else {
            d["d_H"] = ds.d_H;
            d["d_RT"] = ds.d_RT;
        }
        return d;
    }
    if (!closed)
        d["note"] = "closed forms assume x^n - alpha0bar irreducible; values below come from the oracle";
    auto gens = code_generators(code);
    auto C = Submodule::ideal(dec.ring, gens.modulus, gens.gens);
    d["source"] = "oracle";
    if (weights) {
        if (job.metric == "rt") d["distribution"] = dist_json(C.rt_histogram());
        else d["distribution"] = dist_json(hamming_histogram(C.elements(job.cap)));
    } else {
        d["d_H"] = C.min_hamming(job.cap);
        d["d_RT"] = C.min_rt();
    }
    return d;
}

struct GridCase {
    Family family;
    int p, e, m, n, s;
    long long lambda;
};

json grid_doc(const Job& job, bool& failed) {
    if (job.grid != "small") throw DomainError("unknown grid '" + job.grid + "' (available: small)");
    const std::vector<GridCase> cases = {
        {Family::GaloisRing, 2, 2, 1, 1, 1, 3},  {Family::GaloisRing, 2, 2, 1, 1, 2, 3},
        {Family::GaloisRing, 2, 2, 1, 1, 1, 1},  {Family::GaloisRing, 2, 2, 1, 1, 2, 1},
        {Family::EisensteinU, 2, 2, 1, 1, 1, 1}, {Family::EisensteinU, 2, 2, 1, 1, 2, 1},
        {Family::GaloisRing, 2, 3, 1, 1, 1, 3},  {Family::GaloisRing, 3, 2, 1, 1, 1, 1},
    };
    json d = {{"schema", "1"}, {"command", "verify"}, {"grid", job.grid}};
    auto rows = json::array();
    std::uint64_t codes = 0, passed = 0;
    for (const auto& gc : cases) {
        auto ring = make_ring(gc.family, gc.p, gc.e, gc.m);
        auto dec = analyze(ring, gc.n, gc.s, ring->from_int(gc.lambda));
        std::uint64_t here = 0, ok = 0;
        for (const auto& sp : classify_ideals(dec, 1, job.cap)) {
            auto rep = verify_report(crt_compose(dec, {sp}), job.cap);
            ++here;
            if (rep.pass()) ++ok;
        }
        codes += here;
        passed += ok;
        rows.push_back({{"ring", ring->name()},
                        {"n", gc.n},
                        {"s", gc.s},
                        {"lambda", elem_json(ring, dec.lambda)},
                        {"codes", here},
                        {"passed", ok}});
    }
    d["instances"] = rows;
    d["codes"] = codes;
    d["passed"] = passed;
    failed = passed != codes;
    d["status"] = failed ? "fail" : "pass";
    return d;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Plain aligned table.
std::string table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        std::string l;
        for (std::size_t i = 0; i < r.size(); ++i) l += (i ? " | " : "") + pad(r[i], w[i]);
        while (!l.empty() && l.back() == ' ') l.pop_back();
        os << l << "\n";
    };
    line(head);
    std::string sep;
    for (std::size_t i = 0; i < w.size(); ++i) sep += (i ? "-+-" : "") + std::string(w[i], '-');
    os << sep << "\n";
    if (rows.empty()) {
        std::vector<std::string> r(head.size());
        r[0] = "no codes";
        line(r);
    }
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string title(const json& doc) {
    std::ostringstream os;
    os << doc.value("command", "") << ": " << doc.value("ring", "");
    if (doc.contains("N"))
        os << ", N = " << doc["N"] << " (n = " << doc["n"] << ", s = " << doc["s"] << "), lambda = " << cell(doc["lambda"]);
    os << "\n";
    return os.str();
}

std::string ideal_label(const json& sp) {
    std::string s = sp.value("type", "");
    for (const char* k : {"nu", "tau", "omega", "t", "mu"})
        if (sp.contains(k)) s += std::string(" ") + k + "=" + sp[k].dump();
    if (sp.contains("G")) s += " G=" + sp["G"].get<std::string>();
    return s;
}

}  // namespace

std::size_t default_cap() {
    if (const char* v = std::getenv("CHAINCODE_CAP")) {
        try {
            std::size_t pos = 0;
            unsigned long long c = std::stoull(v, &pos);
            if (pos == std::string(v).size() && c > 0) return static_cast<std::size_t>(c);
        } catch (const std::exception&) {
        }
        throw DomainError(std::string("CHAINCODE_CAP must be a positive integer, got '") + v + "'");
    }
    return 1u << 20;
}

RingPtr job_ring(const Job& job) {
    Family f;
    if (job.family == "gr") f = Family::GaloisRing;
    else if (job.family == "eu") f = Family::EisensteinU;
    else throw DomainError("family must be gr or eu");
    return make_ring(f, job.p, job.e, job.m, job.modulus);
}

RingElem parse_elem(const RingPtr& ring, const std::string& text) {
    return elem_from_json(ring, parse_literal(text), text);
}

Poly parse_poly(const RingPtr& ring, const std::string& text) {
    json v = parse_literal(text);
    if (!v.is_array()) throw DomainError("polynomial literal must be a coefficient list, got '" + text + "'");
    std::vector<RingElem> c;
    for (const auto& x : v) c.push_back(elem_from_json(ring, x, text));
    return Poly(ring, std::move(c));
}

IdealSpec parse_ideal(const Decomposition& dec, const Job& job) {
    IdealKind kind;
    if (job.type) {
        auto k = kind_from(*job.type);
        if (!k) throw DomainError("unknown ideal type '" + *job.type + "' (zero, unit, chain, ii, iii, iv)");
        kind = *k;
    } else if (job.nu) {
        kind = IdealKind::ChainPower;
    } else {
        throw DomainError("no ideal given: use --nu or --type");
    }
    auto need = [&](const std::optional<int>& v, const char* name) {
        if (!v) throw DomainError(std::string("--") + name + " is required for type " + kind_name(kind));
        return *v;
    };
    int nu = 0, tau = 0, omega = 0, t = 0, mu = 0;
    switch (kind) {
        case IdealKind::ChainPower: nu = need(job.nu, "nu"); break;
        case IdealKind::TypeII: tau = need(job.tau, "tau"); break;
        case IdealKind::TypeIV: mu = need(job.mu, "mu"); [[fallthrough]];
        case IdealKind::TypeIII:
            omega = need(job.omega, "omega");
            t = job.t.value_or(0);
            break;
        default: break;
    }
    Poly G(dec.ring);
    if (!job.G.empty()) G = parse_poly(dec.ring, job.G);
    if (G.is_zero() && job.t && (kind == IdealKind::TypeIII || kind == IdealKind::TypeIV))
        throw DomainError("--t needs a nonzero --G");
    return make_ideal(dec, job.j.value_or(1), kind, nu, tau, omega, t, mu, G);
}

json elem_json(const RingPtr& ring, RingElem a) {
    if (ring->coord_count() == 1) return a.code;
    return ring->coords(a);
}

json ideal_json(const IdealSpec& sp) {
    json j = {{"j", sp.j}, {"type", kind_name(sp.kind)}};
    switch (sp.kind) {
        case IdealKind::ChainPower: j["nu"] = sp.nu; break;
        case IdealKind::TypeII: j["tau"] = sp.tau; break;
        case IdealKind::TypeIV: j["mu"] = sp.mu; [[fallthrough]];
        case IdealKind::TypeIII:
            j["omega"] = sp.omega;
            if (!sp.G.is_zero()) {
                j["t"] = sp.t;
                j["G"] = sp.G.to_string();
            }
            j["kappa"] = sp.kappa;
            break;
        default: break;
    }
    return j;
}

json dist_json(const WeightDist& w) {
    auto a = json::array();
    for (const auto& x : w) a.push_back(big(x));
    return a;
}

json run_job(const Job& job, bool& verify_failed) {
    verify_failed = false;
    if (job.command == "verify" && !job.grid.empty()) return grid_doc(job, verify_failed);
    Setup st = setup(job);
    const auto& dec = st.dec;
    if (job.command == "factor") return factor_doc(job, dec);
    if (job.command == "classify") return classify_doc(job, dec);
    if (job.command == "isodual") return isodual_doc(job, dec);
    if (job.command == "dist") return dist_doc(job, dec, false);
    if (job.command == "wdist") return dist_doc(job, dec, true);
    CodeSpec code = job_code(dec, job);
    json d = header(job, dec);
    d["code"] = code_json(code);
    if (job.command == "size") {
        d["size"] = big(code_size(code));
        mpz_class total;
        mpz_ui_pow_ui(total.get_mpz_t(), dec.ring->size(), dec.N);
        d["dual_size"] = big(total / code_size(code));
        return d;
    }
    if (job.command == "dual") {
        auto g = code_generators(code);
        auto du = code_dual(code);
        d["generators"] = polys_json(g.gens);
        d["modulus"] = poly_json(g.modulus);
        d["dual_generators"] = polys_json(du.gens);
        d["dual_modulus"] = poly_json(du.modulus);
        return d;
    }
    if (job.command == "verify") {
        Report rep = verify_report(code, job.cap);
        json r = rep.to_json();
        d["checks"] = r["checks"];
        d["status"] = r["status"];
        verify_failed = !rep.pass();
        return d;
    }
    throw DomainError("unknown command '" + job.command + "'");
}

std::string render_tables(const json& doc) {
    std::ostringstream os;
    const std::string cmd = doc.value("command", "");
    if (cmd == "verify" && doc.contains("grid")) {
        os << "verify: grid " << cell(doc["grid"]) << "\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : doc["instances"])
            rows.push_back({cell(r["ring"]), cell(r["n"]), cell(r["s"]), cell(r["lambda"]), cell(r["codes"]),
                            cell(r["passed"])});
        os << table({"Ring", "n", "s", "lambda", "Codes", "Passed"}, rows);
        os << "status: " << cell(doc["status"]) << " (" << doc["passed"] << "/" << doc["codes"] << ")\n";
        return os.str();
    }
    os << title(doc);
    if (doc.contains("code")) {
        for (const auto& sp : doc["code"])
            if (sp["type"] != "zero" || doc["code"].size() == 1) os << "ideal in K_" << sp["j"] << ": " << ideal_label(sp) << "\n";
    }
    if (cmd == "factor") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : doc["components"])
            rows.push_back({cell(c["j"]), cell(c["d"]), cell(c["f"]), cell(c["g"]), cell(c["k"]),
                            c.contains("M") ? cell(c["M"]) : "-"});
        os << table({"j", "d", "f_j", "g_j", "k_j", "M_j"}, rows);
        os << "product matches x^N - lambda: " << (doc["product_matches"].get<bool>() ? "yes" : "no") << "\n";
        os << "codes: " << cell(doc["code_count"]) << "\n";
    } else if (cmd == "classify") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : doc["components"]) {
            const auto& k = c["census"];
            auto principal = k["chain"].get<std::uint64_t>() + k["ii"].get<std::uint64_t>() + k["iii"].get<std::uint64_t>();
            rows.push_back({"K_" + cell(c["j"]), cell(c["component_size"]), cell(k["trivial"]), std::to_string(principal),
                            cell(k["iv"]), cell(k["total"])});
        }
        os << table({"Component", "Size", "Trivial", "Principal", "Non-principal", "Total"}, rows);
        for (const auto& c : doc["components"]) {
            if (!c.contains("ideals")) continue;
            std::vector<std::vector<std::string>> ir;
            for (const auto& sp : c["ideals"]) ir.push_back({ideal_label(sp)});
            os << "\nideals of K_" << c["j"] << "\n" << table({"Ideal"}, ir);
        }
        os << "codes: " << cell(doc["code_count"]) << "\n";
    } else if (cmd == "isodual") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : doc["codes"]) rows.push_back({cell(c["family"]), ideal_label(c["ideal"]), cell(c["size"])});
        os << table({"Family", "Ideal", "Size"}, rows);
    } else if (cmd == "size") {
        os << "size: " << cell(doc["size"]) << "\ndual size: " << cell(doc["dual_size"]) << "\n";
    } else if (cmd == "dual") {
        os << "generators mod " << cell(doc["modulus"]) << ":";
        for (const auto& g : doc["generators"]) os << " " << cell(g);
        os << "\ndual generators mod " << cell(doc["dual_modulus"]) << ":";
        for (const auto& g : doc["dual_generators"]) os << " " << cell(g);
        os << "\n";
    } else if (cmd == "dist" || cmd == "wdist") {
        if (doc.contains("note")) os << "note: " << cell(doc["note"]) << "\n";
        os << "size: " << cell(doc["size"]) << "\nsource: " << cell(doc["source"]) << "\n";
        if (cmd == "dist") {
            os << "d_H: " << cell(doc["d_H"]) << "\nd_RT: " << cell(doc["d_RT"]) << "\n";
        } else {
            std::vector<std::vector<std::string>> rows;
            int w = 0;
            for (const auto& a : doc["distribution"]) rows.push_back({std::to_string(w++), cell(a)});
            os << table({"Weight", cmd == "wdist" && doc["metric"] == "hamming" ? "Hamming count" : "RT count"}, rows);
        }
    } else if (cmd == "verify") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : doc["checks"])
            rows.push_back({cell(c["name"]), cell(c["formula_value"]), cell(c["oracle_value"]), cell(c["status"])});
        os << table({"Check", "Formula", "Oracle", "Status"}, rows);
        os << "status: " << cell(doc["status"]) << "\n";
    }
    return os.str();
}

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Repeated-root constacyclic codes over finite chain rings"};
    app.require_subcommand(1);
    Job job;
    std::string modulus, lambda_opt;
    std::optional<std::size_t> cap_opt;
    auto common = [&](CLI::App* sc, bool code) {
        sc->add_option("--family", job.family, "gr (Galois ring) or eu (F_q[u]/<u^e>)")->check(CLI::IsMember({"gr", "eu"}));
        sc->add_option("--p", job.p, "residue characteristic");
        sc->add_option("--e", job.e, "nilpotency index");
        sc->add_option("--m", job.m, "residue degree");
        sc->add_option("--modulus", modulus, "residue field modulus, ascending, e.g. [1,1,0,1]");
        sc->add_option("--n", job.n, "n, coprime to p");
        sc->add_option("--s", job.s, "s >= 1, length N = n p^s");
        sc->add_option("--lambda", job.lambda, "unit: integer or coordinate list");
        sc->add_option("--j", job.j, "component index (1-based)");
        if (code) {
            sc->add_option("--type", job.type, "zero, unit, chain, ii, iii, iv");
            sc->add_option("--nu", job.nu);
            sc->add_option("--tau", job.tau);
            sc->add_option("--omega", job.omega);
            sc->add_option("--t", job.t);
            sc->add_option("--mu", job.mu);
            sc->add_option("--G", job.G, "coefficient list, e.g. [1]");
        }
        sc->add_option("--format", job.format, "json or table")->check(CLI::IsMember({"json", "table"}));
        sc->add_option("--out", job.out, "write the document here instead of stdout");
        sc->add_option("--cap", cap_opt, "enumeration cap (overrides CHAINCODE_CAP)");
    };
    struct Cmd {
        const char* name;
        const char* help;
        bool code;
    };
    const Cmd cmds[] = {{"factor", "factor x^N - lambda into coprime components", false},
                        {"classify", "census (and with --j, a listing) of component ideals", false},
                        {"size", "code size", true},
                        {"dual", "generators of the code and its dual", true},
                        {"dist", "minimum Hamming and RT distances", true},
                        {"wdist", "weight distribution", true},
                        {"isodual", "isodual code families", false},
                        {"verify", "compare formulas with the brute-force oracle", true}};
    for (const auto& c : cmds) {
        auto* sc = app.add_subcommand(c.name, c.help);
        common(sc, c.code);
        if (std::string(c.name) == "dist" || std::string(c.name) == "wdist")
            sc->add_option("--metric", job.metric, "rt or hamming")->check(CLI::IsMember({"rt", "hamming"}));
        if (std::string(c.name) == "verify") sc->add_option("--grid", job.grid, "built-in grid: small");
        sc->callback([&job, name = std::string(c.name)] { job.command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }
    try {
        job.cap = cap_opt ? *cap_opt : default_cap();
        if (!modulus.empty()) {
            json v = parse_literal(modulus);
            if (!v.is_array()) throw DomainError("--modulus must be a list");
            for (const auto& x : v) {
                if (!x.is_number_integer()) throw DomainError("--modulus entries must be integers");
                job.modulus.push_back(x.get<int>());
            }
        }
        bool failed = false;
        json doc = run_job(job, failed);
        std::string text = job.format == "table" ? render_tables(doc) : doc.dump() + "\n";
        if (job.out.empty()) {
            out << text;
        } else {
            std::ofstream f(job.out);
            if (!f) throw DomainError("cannot write " + job.out);
            f << text;
        }
        return failed ? 2 : 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace chaincode
