#include "doctest.h"

#include "folichar/suites.hpp"

#include <fstream>
#include <map>

using namespace folichar;

namespace {

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!text.empty() && text.back() == '\n') text.pop_back();
    return text;
}

std::string golden(const std::string &name) {
    return slurp(std::string(TEST_GOLDEN_DIR) + "/" + name);
}

} // namespace

TEST_CASE("polynomial grammar") {
    CHECK(parse_c_poly("c1^2", 1) == std::vector<unsigned>{1, 1});
    CHECK(parse_c_poly("c1*c2", 2) == std::vector<unsigned>{1, 2});
    CHECK(parse_c_poly("c2^2*c1", 2) == std::vector<unsigned>{2, 2, 1});
    CHECK_THROWS_AS(parse_c_poly("c2", 1), config_error);  // range
    CHECK_THROWS_AS(parse_c_poly("x1", 1), config_error);  // unknown symbol
    CHECK_THROWS_AS(parse_c_poly("c", 1), config_error);
    CHECK_THROWS_AS(parse_c_poly("", 1), config_error);
}

TEST_CASE("level range grammar") {
    LevelRange r = parse_level_range("0..2");
    CHECK(r.lo == 0);
    CHECK(r.hi == 2);
    LevelRange single = parse_level_range("3");
    CHECK(single.lo == 3);
    CHECK(single.hi == 3);
    CHECK_THROWS_AS(parse_level_range("x..y"), config_error);
    CHECK_THROWS_AS(parse_level_range("2..1"), config_error);
}

TEST_CASE("golden dumps for (q,i) <= (3,3)") {
    for (unsigned q = 1; q <= 3; ++q) {
        for (unsigned i = 1; i <= q; ++i)
            CHECK(dump_element("c" + std::to_string(i), q) ==
                  golden("q" + std::to_string(q) + "_c" + std::to_string(i) + ".txt"));
        for (unsigned i = 1; i <= q; i += 2)
            CHECK(dump_element("h" + std::to_string(i), q) ==
                  golden("q" + std::to_string(q) + "_h" + std::to_string(i) + ".txt"));
    }
    // psi(h1 c1) at level 1
    WeilContext wc(make_gl(1));
    WOAlphabet wo(1);
    FormalFamily fam(1, 1);
    std::vector<Cochain> psi = char_cochain(wedge(wo.h(1), wo.c(1)), 1, wo, wc, fam);
    CHECK(psi[1].element.dump() == golden("gv_level1.txt"));
}

TEST_CASE("weil suite passes for q=1 and q=2") {
    for (unsigned q : {1u, 2u}) {
        Report rep = run_verify_weil(q);
        CHECK(rep.all_passed());
        // report schema: stable check names, each at most once per run
        std::map<std::string, int> seen;
        for (const CheckRecord &r : rep.records) seen[r.name + "|" + r.params]++;
        for (auto &[k, v] : seen) CHECK(v == 1);
    }
    CHECK_THROWS_AS(run_verify_weil(0), config_error);
}

TEST_CASE("bott suite and parse errors surface") {
    Report rep = run_verify_bott(1, LevelRange{0, 2}, "c1^2");
    CHECK(rep.all_passed());
    CHECK(rep.records.size() == 3);
    CHECK_THROWS_AS(run_verify_bott(1, LevelRange{0, 1}, "c2"), config_error);
}

TEST_CASE("config parsing: defaults, overrides, and rejection") {
    ModelConfig def = ModelConfig::defaults();
    CHECK(def.grid.nx == 64);
    CHECK(def.kernels.count("a0") == 1);

    ModelConfig c = ModelConfig::from_json_text(R"({
        "diffeo": {"constant": 0.0, "sin": [0.25], "cos": [0.1]},
        "grid": {"nx": 32},
        "tolerances": {"pairing_defect": 5e-4},
        "kernels": {"a0": {"windings": [{"n": 0, "amp": 2.0}],
                            "tau": {"center": 0.1, "width": 0.9}}}
    })");
    CHECK(c.grid.nx == 32);
    CHECK(c.grid.nz == 64); // untouched default
    CHECK(c.tol.pairing_defect == 5e-4);
    CHECK(c.kernels.at("a0").windings.size() == 1);
    CHECK_NOTHROW(c.make_model());

    CHECK_THROWS_AS(ModelConfig::from_json_text("{nonsense"), config_error);

    ModelConfig bad = ModelConfig::defaults();
    bad.diffeo_sin = {1.2};
    Report rep = run_verify_model(bad);
    CHECK_FALSE(rep.all_passed());
    CHECK(rep.records.size() == 1);
    CHECK(rep.records[0].name == "model.construct");
}

TEST_CASE("report serialization") {
    Report rep = run_verify_bott(1, LevelRange{1, 1}, "c1");
    std::string text = rep.text();
    CHECK(text.find("bott.vanishing") != std::string::npos);
    CHECK(text.find("summary:") != std::string::npos);
    std::string js = rep.json();
    CHECK(js.find("\"all_passed\": true") != std::string::npos);
    CHECK(js.find("\"name\": \"bott.vanishing\"") != std::string::npos);
}

TEST_CASE("check selection: restriction and up-front rejection") {
    Report rep = run_verify_weil(2, true, {"weil.d_squared", "weil.dh_eq_c"});
    CHECK(rep.all_passed());
    int ran = 0, skipped = 0;
    for (const CheckRecord &r : rep.records) {
        if (r.status == CheckRecord::Status::Pass) {
            ++ran;
            CHECK((r.name == "weil.d_squared" || r.name == "weil.dh_eq_c"));
        }
        if (r.status == CheckRecord::Status::Skipped) ++skipped;
    }
    CHECK(ran == 2); // d_squared once, dh_eq_c once for q=2
    CHECK(skipped > 0);
    CHECK_THROWS_AS(run_verify_weil(2, true, {"weil.nonexistent"}), std::invalid_argument);
}

TEST_CASE("parallel fan-out matches serial record order") {
    Report serial = run_verify_weil(2, true);
    Report parallel = run_verify_weil(2, false);
    REQUIRE(serial.records.size() == parallel.records.size());
    for (size_t i = 0; i < serial.records.size(); ++i) {
        CHECK(serial.records[i].name == parallel.records[i].name);
        CHECK(serial.records[i].status == parallel.records[i].status);
    }
}
