#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "chaincode/io.hpp"

using namespace chaincode;

namespace {

Job base(const std::string& family, int s, const std::string& lambda) {
    Job j;
    j.family = family;
    j.p = 2;
    j.e = 2;
    j.m = 1;
    j.n = 1;
    j.s = s;
    j.lambda = lambda;
    return j;
}

int run(std::vector<std::string> args, std::string& out, std::string& err) {
    args.insert(args.begin(), "chaincode");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream o, e;
    int rc = cli_main(static_cast<int>(argv.size()), argv.data(), o, e);
    out = o.str();
    err = e.str();
    return rc;
}

}  // namespace

TEST(Io, ParseIdeal) {
    Job j = base("eu", 2, "1");
    auto ring = job_ring(j);
    auto dec = analyze(ring, 1, 2, parse_elem(ring, j.lambda));
    j.type = "iii";
    j.omega = 2;
    j.t = 1;
    j.G = "[1]";
    auto sp = parse_ideal(dec, j);
    EXPECT_EQ(sp.kind, IdealKind::TypeIII);
    EXPECT_EQ(sp.omega, 2);
    EXPECT_EQ(sp.t, 1);
    EXPECT_EQ(sp.G, Poly::constant(ring, ring->one()));

    Job k = base("gr", 2, "1");
    auto z = job_ring(k);
    auto d0 = analyze(z, 1, 2, z->one());
    k.type = "iv";
    k.omega = 3;
    k.mu = 1;
    auto iv = parse_ideal(d0, k);
    EXPECT_EQ(iv.kind, IdealKind::TypeIV);
    EXPECT_TRUE(iv.G.is_zero());
    EXPECT_EQ(iv.mu, 1);

    Job u = base("gr", 2, "3");
    auto du = analyze(z, 1, 2, parse_elem(z, "3"));
    u.nu = 7;
    auto ch = parse_ideal(du, u);
    EXPECT_EQ(ch.kind, IdealKind::ChainPower);
    EXPECT_EQ(ch.nu, 7);
}

TEST(Io, Literals) {
    auto r = make_ring(Family::GaloisRing, 2, 2, 3);
    EXPECT_EQ(parse_elem(r, "-1"), r->from_int(3));
    EXPECT_EQ(parse_elem(r, "[1,2]"), r->from_coords({1, 2, 0}));
    EXPECT_EQ(parse_poly(r, "[1,[0,1]]").coeff(1), r->from_coords({0, 1}));
    try {
        parse_elem(r, "[1,");
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
    }
    EXPECT_THROW(parse_elem(r, "[1,2,3,4]"), DomainError);
    EXPECT_THROW(parse_elem(r, "\"x\""), DomainError);
}

TEST(Io, ExitCodesAndSchema) {
    std::string out, err;
    EXPECT_EQ(run({"wdist", "--p", "2", "--e", "2", "--n", "1", "--s", "2", "--lambda", "3", "--nu", "1"}, out, err), 0);
    auto doc = nlohmann::json::parse(out);
    EXPECT_EQ(doc["schema"], "1");
    EXPECT_EQ(doc["distribution"], nlohmann::json::parse("[1,1,6,24,96]"));
    std::string again;
    run({"wdist", "--p", "2", "--e", "2", "--n", "1", "--s", "2", "--lambda", "3", "--nu", "1"}, again, err);
    EXPECT_EQ(out, again);

    EXPECT_EQ(run({"size", "--lambda", "2", "--nu", "1"}, out, err), 1);
    EXPECT_NE(err.find("not a unit"), std::string::npos);
    EXPECT_EQ(run({"size", "--lambda", "3"}, out, err), 1);
    EXPECT_EQ(run({"bogus"}, out, err), 1);
    EXPECT_EQ(run({"verify", "--grid", "small"}, out, err), 0);
    EXPECT_EQ(nlohmann::json::parse(out)["status"], "pass");
}

TEST(Io, CapFromEnvironment) {
    setenv("CHAINCODE_CAP", "2", 1);
    EXPECT_EQ(default_cap(), 2u);
    std::string out, err;
    // 4 codewords do not fit under a cap of 2
    EXPECT_EQ(run({"wdist", "--n", "3", "--s", "1", "--lambda", "3", "--nu", "2", "--metric", "hamming"}, out, err), 1);
    EXPECT_NE(err.find("cap"), std::string::npos);
    setenv("CHAINCODE_CAP", "junk", 1);
    EXPECT_THROW(default_cap(), DomainError);
    unsetenv("CHAINCODE_CAP");
    EXPECT_EQ(default_cap(), 1u << 20);
}

TEST(Io, RenderTables) {
    nlohmann::json empty = {{"schema", "1"}, {"command", "isodual"}, {"ring", "Z_4"}, {"codes", nlohmann::json::array()}};
    EXPECT_NE(render_tables(empty).find("no codes"), std::string::npos);

    Job j = base("gr", 1, "1");
    j.m = 3;
    j.n = 5;
    j.command = "classify";
    bool failed = true;
    auto doc = run_job(j, failed);
    EXPECT_FALSE(failed);
    EXPECT_EQ(doc["components"][0]["census"]["total"], 13);
    auto text = render_tables(doc);
    for (const char* col : {"Trivial", "Principal", "Non-principal"}) EXPECT_NE(text.find(col), std::string::npos);
}
