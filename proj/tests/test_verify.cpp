#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "mtf/verify.hpp"

using namespace mtf;

TEST_CASE("verify_case: nonsep g=2 k=1 in absolute mode") {
    FamilySpec s{Family::nonsep, 2, 1, 1, 0, 0};
    auto r = verify_case(s, IsoMode::absolute);
    CHECK(r.pass);
    CHECK(r.shift_witness == 0);
    CHECK(r.torsion_free);
    // k = g-1: the circle summand vanishes, leaving the single Lambda term
    GradedGroup expect;
    expect.add_rank(2, 1);
    CHECK(r.computed == expect);
    CHECK(std::abs(r.euler_computed) == sw_euler(2, 1));
}

TEST_CASE("verify_case: pair g=3 m=1 n=-1 k=1") {
    FamilySpec s{Family::pair, 3, 1, -1, 1, 0, 0, 0};
    auto r = verify_case(s, IsoMode::relative);
    CHECK(r.pass);
    // X(2,0)[-1] + Lambda^3 H1(Sigma_2)_{(1)}: rank 5 in a single degree
    CHECK(r.computed.total_rank() == 5);
    CHECK(r.computed.ranks.size() == 1);
}

TEST_CASE("verify_case: negative control fails with mismatch detail") {
    FamilySpec s{Family::nonsep, 3, 1, 1, 0, 0};
    auto r = verify_case(s, IsoMode::absolute);
    REQUIRE(r.pass);
    // shift one summand of the prediction by a degree and recompare
    GradedGroup tampered = r.predicted;
    tampered.ranks.begin()->second -= 1;
    tampered.add_rank(tampered.ranks.rbegin()->first + 1, 1);
    CHECK_FALSE(graded_iso(r.computed, tampered, IsoMode::relative).has_value());
    CHECK(first_mismatch(r.computed, tampered).find("degree") != std::string::npos);
}

TEST_CASE("verify_case: absolute mode rejected off the pinned families") {
    CHECK_THROWS_AS(verify_case({Family::sep, 3, 1, 1}, IsoMode::absolute),
                    std::domain_error);
    CHECK_THROWS_AS(verify_case({Family::nonsep, 3, 1, 2, 0, 1}, IsoMode::absolute),
                    std::domain_error);
    CHECK_NOTHROW(verify_case({Family::identity, 3, 1}, IsoMode::absolute));
}

TEST_CASE("verify_case is conjugation symmetric in k") {
    for (FamilySpec s : {FamilySpec{Family::nonsep, 4, 2, -1, 0, 0},
                         FamilySpec{Family::pair, 3, 1, 1, -2, 0, 0, 0},
                         FamilySpec{Family::sep, 4, 2, 1}}) {
        auto pos = verify_case(s, IsoMode::relative);
        s.k = -s.k;
        auto neg = verify_case(s, IsoMode::relative);
        CHECK(pos.computed == neg.computed);
        CHECK(pos.predicted == neg.predicted);
        CHECK(pos.generators == neg.generators);
    }
}

TEST_CASE("rank bookkeeping for passing nonsep i=0 cases") {
    for (int g = 2; g <= 5; ++g)
        for (int k = 1; k <= g - 1; ++k)
            for (int n : {-1, 1}) {
                auto r = verify_case({Family::nonsep, g, k, n, 0, 0}, IsoMode::absolute);
                REQUIRE(r.pass);
                int d = g - 1 - k;
                CHECK(r.computed.total_rank() ==
                      ranks_x(g, d).total_rank() - 2 * ranks_x(g - 1, d - 1).total_rank());
            }
}

TEST_CASE("sweep: empty ranges and identity-only") {
    SweepOptions empty;
    auto rep = sweep(empty);
    CHECK(rep.cases.empty());
    CHECK(rep.passed == 0);
    CHECK(rep.failed == 0);

    SweepOptions id_only;
    id_only.genera = {2};
    id_only.families = {Family::identity};
    auto rep2 = sweep(id_only);
    REQUIRE(rep2.cases.size() == 1);
    CHECK(rep2.passed == 1);
    CHECK(rep2.cases[0].computed == ranks_x(2, 0));
}

TEST_CASE("sweep: g in [2,4], all families, relative -> all pass") {
    SweepOptions opt;
    opt.genera = {2, 3, 4};
    opt.families = {Family::identity, Family::nonsep, Family::pair, Family::sep};
    opt.exponents = {-2, -1, 1, 2};
    opt.jobs = 4;
    auto rep = sweep(opt);
    CHECK(rep.failed == 0);
    CHECK(rep.passed == static_cast<long long>(rep.cases.size()));
    CHECK(rep.cases.size() > 100);
    // deterministic lexicographic ordering
    for (std::size_t t = 1; t < rep.cases.size(); ++t)
        CHECK(rep.cases[t - 1].spec < rep.cases[t].spec);
}

TEST_CASE("sweep in absolute mode downgrades unsupported families") {
    SweepOptions opt;
    opt.genera = {3};
    opt.families = {Family::sep, Family::nonsep};
    opt.exponents = {1};
    opt.mode = IsoMode::absolute;
    auto rep = sweep(opt);
    CHECK(rep.failed == 0);
    CHECK(!rep.cases.empty());
}

TEST_CASE("report emission formats") {
    SweepOptions opt;
    opt.genera = {2};
    opt.families = {Family::identity, Family::nonsep};
    opt.exponents = {1};
    auto rep = sweep(opt);

    auto j = nlohmann::json::parse(emit_json(rep));
    CHECK(j["version"] == MTF_VERSION);
    CHECK(j["passed"].get<long long>() == rep.passed);
    CHECK(j["failed"] == 0);
    REQUIRE(j["cases"].is_array());
    const auto& c0 = j["cases"][0];
    for (const char* key : {"spec", "computed", "predicted", "verdict", "shift", "euler",
                            "torsion_free", "module_condition", "generators", "millis"})
        CHECK(c0.contains(key));
    CHECK(c0["verdict"] == "pass");
    CHECK(c0["euler"].contains("computed"));
    CHECK(c0["euler"].contains("expected_abs"));

    auto csv = emit_csv(rep);
    CHECK(csv.rfind("case,family,g,m,n,i,a,b,k,verdict,degree,rank\n", 0) == 0);
    // one row per (case, degree)
    long long rows = 0;
    for (const auto& c : rep.cases)
        rows += std::max<std::size_t>(1, c.computed.ranks.size());
    CHECK(std::count(csv.begin(), csv.end(), '\n') == rows + 1);

    auto text = emit_text(rep);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("passed " + std::to_string(rep.passed)) != std::string::npos);

    CHECK_THROWS_AS(emit_report(rep, "yaml"), std::invalid_argument);
}

TEST_CASE("text format marks failures with the first mismatching degree") {
    VerificationReport rep;
    CaseResult r;
    r.spec = {Family::identity, 2, 1};
    r.pass = false;
    r.detail = "degree 0: computed rank 1, predicted 2";
    rep.cases.push_back(r);
    rep.failed = 1;
    auto text = emit_text(rep);
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("degree 0") != std::string::npos);
}

TEST_CASE("sweep JSON is byte-identical across runs") {
    SweepOptions opt;
    opt.genera = {2, 3};
    opt.families = {Family::identity, Family::nonsep, Family::pair, Family::sep};
    opt.exponents = {-2, -1, 1, 2};
    opt.jobs = 4;
    auto first = emit_json(sweep(opt));
    opt.jobs = 1;
    auto second = emit_json(sweep(opt));
    CHECK(first == second);
}

TEST_CASE("complex dump format") {
    auto c = build_e1({Family::nonsep, 2, 1, 1, 0, 0});
    auto dump = dump_complex_csv(c);
    CHECK(dump.rfind("name,degree,filtration,uexp\n", 0) == 0);
    CHECK(dump.find("# boundary row,col,entry\n") != std::string::npos);
    CHECK(dump.find("e1^e2^e3^e4*U0") != std::string::npos);
}

TEST_CASE("golden filenames are filesystem-safe") {
    FamilySpec s{Family::pair, 3, 2, -1, 2, 0, 1, 0};
    auto name = golden_filename(s);
    CHECK(name == "pair_g3_m2_n-1_a1_b0_k2.csv");
    CHECK(name.find(':') == std::string::npos);
}

TEST_CASE("golden regression: computed homology matches committed files") {
    SweepOptions opt;
    opt.genera = {2, 3};
    opt.families = {Family::identity, Family::nonsep, Family::pair, Family::sep};
    opt.exponents = {-2, -1, 1, 2};
    auto specs = enumerate_cases(opt);
    REQUIRE(!specs.empty());
    for (const auto& s : specs) {
        std::string path = std::string(MTF_GOLDEN_DIR) + "/" + golden_filename(s);
        std::ifstream f(path);
        INFO("golden file " << path);
        REQUIRE(f.good());
        std::stringstream buf;
        buf << f.rdbuf();
        auto c = build_e1(s);
        CHECK(to_csv(homology(c.cc)) == buf.str());
    }
}
