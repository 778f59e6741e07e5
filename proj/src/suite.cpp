#include "forge/suite.hpp"

#include <chrono>

#include "forge/family_ff.hpp"

namespace forge {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Passed: return "passed";
        case CheckStatus::Failed: return "failed";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

bool RunReport::passed() const {
    bool ran = false;
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Failed) return false;
        ran = ran || c.status == CheckStatus::Passed;
    }
    return ran;
}

json to_json(const RunReport& r, bool timings) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j{{"name", c.name}, {"status", to_string(c.status)}, {"passed", c.status == CheckStatus::Passed}, {"details", c.details}};
        if (timings) j["seconds"] = c.seconds;
        checks.push_back(j);
    }
    return json{{"command", r.command}, {"params", r.params}, {"seed", r.seed}, {"checks", checks}, {"passed", r.passed()}};
}

CheckResult run_check(const std::string& name, const std::function<CheckStatus(json&)>& body) {
    CheckResult r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.status = body(r.details);
    } catch (const Error& e) {
        const auto k = e.kind();
        const bool skip = k == ErrorKind::PrimeUnsuitable || k == ErrorKind::DegenerateParams || k == ErrorKind::ScaleGuard;
        r.status = skip ? CheckStatus::Skipped : CheckStatus::Failed;
        r.details["error"] = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

FamilyParams<Rational> rational_params(int g, long v, const std::vector<long>& a) {
    std::vector<Rational> ar;
    for (long x : a) ar.push_back(Rational(x));
    return validate_params(g, Rational(v), ar, ValidationLevel::Pair);
}

std::uint64_t find_square_prime(const FamilyParams<Rational>& params, std::uint64_t start) {
    for (std::uint64_t p = std::max<std::uint64_t>(start, 3); p < 100000; ++p) {
        if (!is_prime_u64(p)) continue;
        const FiniteField& F = FiniteField::prime(p);
        try {
            const auto red = reduce_params(params, F);
            bool all = true;
            for (const auto& ai : red.a) all = all && !ai.is_zero() && ai.is_square();
            if (all) return p;
        } catch (const Error&) {
        }
    }
    raise(ErrorKind::PrimeUnsuitable, "no prime below 100000 makes every a_i a square");
}

SuiteConfig default_suite_config() {
    SuiteConfig c;
    c.lequality = {{rational_params(1, 3, {2}), {101, 103}},
                   {rational_params(2, 3, {2, 5}), {101, 103}},
                   {rational_params(3, 3, {2, 5, 7}), {67, 101}}};
    c.isogeny_g2 = rational_params(2, 3, {2, 5});
    c.isogeny_g3 = rational_params(3, 3, {2, 5, 7});
    c.kernel_params = {rational_params(1, 3, {2}), rational_params(2, 3, {2, 5}), rational_params(3, 3, {2, 5, 7})};
    return c;
}

CheckResult identities_check() {
    return run_check("base identities", [](json& d) {
        const auto r = verify_base_identities();
        d = to_json(r);
        return status_of(r.passed);
    });
}

CheckResult m_congruence_check(int g, std::uint64_t p, int trials, std::uint64_t seed) {
    return run_check("M-congruence g=" + std::to_string(g), [&](json& d) {
        const auto r = verify_M_congruence(g, p, trials, seed);
        d = to_json(r);
        return status_of(r.passed);
    });
}

CheckResult gamma_consistency_check(int g, std::uint64_t p, int trials, std::uint64_t seed) {
    return run_check("gamma consistency g=" + std::to_string(g), [&](json& d) {
        const auto r = verify_gamma_consistency(g, p, trials, seed);
        d = to_json(r);
        return status_of(r.passed);
    });
}

CheckResult lequality_check(const LEqualityCase& c) {
    return run_check("L-equality g=" + std::to_string(c.params.g), [&](json& d) {
        const auto r = check_l_equality(c.params, c.primes);
        d = to_json(r);
        bool any = false;
        for (const auto& e : r.entries) any = any || !e.skipped;
        if (!any) return CheckStatus::Skipped;
        return status_of(r.passed);
    });
}

CheckResult mult_by_two_check(const std::string& name, const PairContext& ctx, int trials, std::uint64_t seed) {
    return run_check(name, [&](json& d) {
        const auto r = check_mult_by_two(ctx, trials, seed);
        d = to_json(r);
        return status_of(r.ok());
    });
}

CheckResult kernel_check(const std::string& name, const PairContext& ctx, std::uint64_t seed) {
    return run_check(name, [&](json& d) {
        const auto r = check_kernel(ctx, seed);
        d = to_json(r);
        d["p"] = ctx.pair.v().field().characteristic();
        return status_of(r.ok());
    });
}

CheckResult proposition_check(const std::string& name, const PairContext& ctx, int points, std::uint64_t seed) {
    return run_check(name, [&](json& d) {
        Rng rng(seed);
        int ok = 0;
        json fails = json::array();
        for (int i = 0; i < points; ++i) {
            const auto P = random_good_point(ctx, rng);
            const auto r = check_point_proposition(ctx, P);
            if (r.matches)
                ++ok;
            else
                fails.push_back(to_json(r));
        }
        d = json{{"points", points}, {"matches", ok}, {"failures", fails}};
        return status_of(points > 0 && ok == points);
    });
}

CheckResult charpoly_check() {
    return run_check("genus-3 charpoly at 13", [](json& d) {
        const auto r = reproduce_genus3_charpoly();
        d = to_json(r);
        return status_of(r.passed);
    });
}

CheckResult sqrt2_check(long v, long a1, std::uint64_t p, int trials, std::uint64_t seed) {
    return run_check("sqrt2 family", [&](json& d) {
        const FiniteField& F = FiniteField::prime(p);
        const auto params = sqrt2_params(2, F.from_int(v), {F.from_int(a1)});
        const auto ctx = PairContext::make(build_pair(params));
        const auto r = measure_sqrt2(ctx, trials, seed);
        d = to_json(r);
        d["pair"] = to_json(ctx.pair);
        return status_of(r.roots_match && r.mult_by_two.ok() && r.observed != SquareRelation::Other);
    });
}

CheckResult split_check(const std::vector<std::int64_t>& a, std::uint64_t p) {
    return run_check("split at i", [&](json& d) {
        const auto r = check_split_at_i(static_cast<int>(a.size()), a, p);
        d = to_json(r);
        return status_of(r.passed);
    });
}

CheckResult criterion_check(std::uint64_t p, std::uint64_t seed) {
    return run_check("involution criterion", [&](json& d) {
        const auto r = run_criterion_battery(p, 100, 100, 500, seed);
        d = to_json(r);
        return status_of(r.ok());
    });
}

CheckResult normalization_check(std::uint64_t p, int sets, std::uint64_t seed) {
    return run_check("genus-2 normalization", [&](json& d) {
        const auto r = run_normalization_battery(p, sets, seed);
        d = to_json(r);
        return status_of(r.ok());
    });
}

CheckResult fixture_check(const ZetaFixture& fx, int classes, std::uint64_t seed) {
    return run_check("fixture " + fx.name, [&](json& d) {
        const LPoly L = l_polynomial(fx.pair.C);
        const LPoly Lp = l_polynomial(fx.pair.Cprime);
        bool ok = L.weil_roots_ok() && Lp.weil_roots_ok();
        d["L_C"] = to_json(L);
        d["L_Cprime"] = to_json(Lp);
        if (fx.L_C) ok = ok && *fx.L_C == L;
        if (fx.L_Cprime) ok = ok && *fx.L_Cprime == Lp;
        d["matches_stored"] = ok;
        const Integer order = L.at_one();
        const auto ctx = PairContext::make(fx.pair);
        const Rng rng(seed);
        int killed = 0;
        for (int i = 0; i < classes; ++i) {
            const DivClass D = random_class(ctx.odd_C, rng.child(static_cast<std::uint64_t>(i)).seed());
            if (class_scalar_mul(order, D).is_identity()) ++killed;
        }
        d["order"] = to_json(order);
        d["classes"] = classes;
        d["annihilated"] = killed;
        return status_of(ok && killed == classes);
    });
}

namespace {

std::optional<PairContext> context_at(const FamilyParams<Rational>& params, std::uint64_t p, CheckResult& fail) {
    try {
        return PairContext::make(build_any_pair(reduce_params(params, FiniteField::prime(p))));
    } catch (const Error& e) {
        fail.status = CheckStatus::Skipped;
        fail.details["error"] = e.what();
        return std::nullopt;
    }
}

}  // namespace

RunReport run_suite(const SuiteConfig& cfg) {
    RunReport rep;
    rep.command = "suite";
    rep.seed = cfg.seed;
    rep.params = json{{"trials", cfg.trials}, {"identity_prime", cfg.identity_prime}, {"isogeny_prime", cfg.isogeny_prime}};
    const Rng root(cfg.seed);
    auto seed_for = [&](const std::string& label) { return root.child(label).seed(); };

    rep.checks.push_back(identities_check());
    rep.checks.push_back(run_check("M-congruence exact g=2", [](json& d) {
        const auto r = verify_M_congruence_exact();
        d = to_json(r);
        return status_of(r.passed);
    }));
    for (int g : {2, 4})
        rep.checks.push_back(m_congruence_check(g, cfg.identity_prime, cfg.identity_trials, seed_for("M-congruence g=" + std::to_string(g))));
    for (int g : {2, 4})
        rep.checks.push_back(gamma_consistency_check(g, cfg.identity_prime, cfg.identity_trials, seed_for("gamma g=" + std::to_string(g))));
    for (const auto& c : cfg.lequality) rep.checks.push_back(lequality_check(c));

    CheckResult missing{"isogeny context", CheckStatus::Skipped, json::object(), 0.0};
    const auto ctx2 = context_at(cfg.isogeny_g2, cfg.isogeny_prime, missing);
    const auto ctx3 = context_at(cfg.isogeny_g3, cfg.isogeny_prime, missing);
    if (ctx2) rep.checks.push_back(mult_by_two_check("mult-by-two g=2", *ctx2, cfg.trials, seed_for("mult2 g=2")));
    if (ctx3) rep.checks.push_back(mult_by_two_check("mult-by-two g=3", *ctx3, cfg.g3_trials, seed_for("mult2 g=3")));
    if (!ctx2 || !ctx3) rep.checks.push_back(missing);

    for (const auto& kp : cfg.kernel_params) {
        const std::string name = "kernel g=" + std::to_string(kp.g);
        CheckResult skip{name, CheckStatus::Skipped, json::object(), 0.0};
        std::optional<PairContext> ctx;
        try {
            ctx = context_at(kp, find_square_prime(kp, cfg.kernel_search_start), skip);
        } catch (const Error& e) {
            skip.details["error"] = e.what();
        }
        rep.checks.push_back(ctx ? kernel_check(name, *ctx, seed_for(name)) : skip);
    }

    if (ctx2) rep.checks.push_back(proposition_check("pointwise proposition g=2", *ctx2, cfg.trials, seed_for("proposition")));
    rep.checks.push_back(charpoly_check());
    rep.checks.push_back(sqrt2_check(cfg.sqrt2_v, cfg.sqrt2_a, cfg.sqrt2_prime, cfg.trials, seed_for("sqrt2")));
    rep.checks.push_back(split_check(cfg.split_a, cfg.split_prime));
    rep.checks.push_back(criterion_check(cfg.moduli_prime, seed_for("criterion")));
    rep.checks.push_back(normalization_check(cfg.normalize_prime, cfg.normalize_sets, seed_for("normalize")));
    if (!cfg.fixtures_dir.empty()) {
        try {
            for (const auto& fx : load_fixtures(cfg.fixtures_dir))
                rep.checks.push_back(fixture_check(fx, cfg.fixture_classes, seed_for("fixture " + fx.name)));
        } catch (const std::exception& e) {
            rep.checks.push_back(CheckResult{"fixtures", CheckStatus::Failed, json{{"error", e.what()}}, 0.0});
        }
    }
    return rep;
}

}  // namespace forge
