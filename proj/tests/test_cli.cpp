#include <cstdio>
#include <sys/wait.h>

#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run_forge(const std::string& args) {
    const std::string cmd = std::string(FORGE_BINARY) + " " + args + " 2>/dev/null";
    Run r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

SuiteConfig small_config() {
    SuiteConfig c = default_suite_config();
    c.lequality = {{rational_params(2, 3, {2, 5}), {101, 5}}};
    c.trials = 5;
    c.g3_trials = 2;
    c.normalize_sets = 5;
    return c;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("pair JSON round trip") {
        const auto pair = pair_at(2, 101, 3, {2, 5});
        const json j = to_json(pair);
        CHECK(j["b"][0] == "12");
        CHECK(j["p"] == "101");
        const auto back = pair_from_json(j);
        CHECK(back.C.f == pair.C.f);
        CHECK(back.Cprime.f == pair.Cprime.f);
        json bad = j;
        bad["C"]["coeffs"][0] = "1";
        CHECK_THROWS_AS(pair_from_json(bad), Error);
    }

    TEST_CASE("element and polynomial serialization") {
        const auto& W = ext_build(11, 2);
        const Fq a = W.generator() + W.from_int(3);
        CHECK(to_json(a) == json::array({"3", "1"}));
        CHECK(fq_from_json(to_json(a), W) == a);
        CHECK(to_json(Fp(11).from_int(-1)) == "10");
        const FqPoly f = FqPoly::from_ints(Fp(11).zero(), {1, 0, 3});
        CHECK(fqpoly_from_json(to_json(f), Fp(11)) == f);
        LPoly L{1, 11, {Integer(1), Integer(0), Integer(11)}};
        CHECK(lpoly_from_json(to_json(L), 1, 11) == L);
        CHECK_THROWS_AS(lpoly_from_json(json::array({1, 2}), 1, 11), Error);
    }

    TEST_CASE("fixtures load") {
        const auto all = load_fixtures(FORGE_FIXTURE_DIR);
        REQUIRE(all.size() == 3);
        for (const auto& fx : all) {
            CHECK(fx.L_C.has_value());
            CHECK(fixture_check(fx, 5, 1).status == CheckStatus::Passed);
        }
    }

    TEST_CASE("check status mapping") {
        CHECK(run_check("a", [](json&) { return CheckStatus::Passed; }).status == CheckStatus::Passed);
        CHECK(run_check("b", [](json&) -> CheckStatus { raise(ErrorKind::PrimeUnsuitable, "x"); }).status == CheckStatus::Skipped);
        CHECK(run_check("c", [](json&) -> CheckStatus { raise(ErrorKind::DecompositionFailure, "x"); }).status == CheckStatus::Failed);
        RunReport r;
        CHECK_FALSE(r.passed());
        r.checks.push_back({"x", CheckStatus::Skipped, {}, 0});
        CHECK_FALSE(r.passed());
        r.checks.push_back({"y", CheckStatus::Passed, {}, 0});
        CHECK(r.passed());
    }

    TEST_CASE("suite is deterministic and records skipped primes") {
        const auto cfg = small_config();
        const auto a = run_suite(cfg), b = run_suite(cfg);
        CHECK(to_json(a, false).dump() == to_json(b, false).dump());
        bool saw_skip = false;
        for (const auto& c : a.checks)
            if (c.name == "L-equality g=2")
                for (const auto& e : c.details["entries"]) saw_skip = saw_skip || e["skipped"].get<bool>();
        CHECK(saw_skip);
        CHECK(a.seed == cfg.seed);
    }

    TEST_CASE("exit codes") {
        const auto gen = run_forge("gen --genus 2 --prime 101 --v 3 --a 2,5 --json");
        CHECK(gen.code == 0);
        const json j = json::parse(gen.out);
        CHECK(j["b"][0] == "12");
        CHECK(run_forge("gen --genus 2 --prime 101 --v 1 --a 2,5").code == 2);
        CHECK(run_forge("gen --genus 2 --prime 100 --v 3 --a 2,5").code == 2);
        CHECK(run_forge("nonsense").code == 2);
        CHECK(run_forge("verify split --json").code == 0);
        CHECK(run_forge("moduli criterion --points 0,1,2,3,3,5").code == 2);
        const auto crit = run_forge("moduli criterion --points 2,1/2,3,1/3,5,1/5 --json");
        CHECK(crit.code == 0);
        CHECK(json::parse(crit.out)["criterion"] == true);
        const auto iso = run_forge("verify isogeny --genus 2 --prime 101 --v 3 --a 2,5 --trials 5 --json");
        CHECK(iso.code == 0);
        CHECK(json::parse(iso.out)["passed"] == true);
    }

    TEST_CASE("zeta on a curve file") {
        const auto r = run_forge(std::string("zeta --k 2 --curve-json ") + FORGE_FIXTURE_DIR + "/g2_p101.json --json");
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)[0]["counts"] == json::array({96, 10186}));
        CHECK(run_forge("zeta --curve-json /nonexistent.json").code == 2);
        const auto g = run_forge("zeta --genus 2 --prime 101 --v 3 --a 2,5 --json");
        REQUIRE(g.code == 0);
        CHECK(json::parse(g.out)[0]["L"] == json::array({1, -6, 10, -606, 10201}));
    }
}
