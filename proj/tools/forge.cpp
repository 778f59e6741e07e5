// forge: command-line front end.
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "forge/family_ff.hpp"
#include "forge/suite.hpp"

using namespace forge;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
    int genus = 2;
    std::uint64_t prime = 0;
    std::string v = "3";
    std::vector<std::string> a;
    int trials = 20;
    std::uint64_t seed = 20240601;
    bool json_out = false;
};

bool is_parameter_error(ErrorKind k) {
    switch (k) {
        case ErrorKind::DegenerateParams:
        case ErrorKind::InvalidArgument:
        case ErrorKind::DivisionByZero:
        case ErrorKind::GenusParity:
        case ErrorKind::DuplicateInput:
        case ErrorKind::NotSquarefree:
        case ErrorKind::InvalidDegree:
        case ErrorKind::PrimeUnsuitable:
        case ErrorKind::ScaleGuard:
        case ErrorKind::NoRationalRoot:
            return true;
        default:
            return false;
    }
}

const FiniteField& prime_field(std::uint64_t p) {
    if (p < 3 || !is_prime_u64(p)) raise(ErrorKind::InvalidArgument, "--prime must be an odd prime, got " + std::to_string(p));
    return FiniteField::prime(p);
}

FamilyParams<Rational> q_params(const Common& c) {
    std::vector<Rational> a;
    for (const auto& s : c.a) a.push_back(Rational::parse(s));
    return validate_params(c.genus, Rational::parse(c.v), a, ValidationLevel::Pair);
}

FamilyParams<Fq> ff_params(const Common& c) {
    const FiniteField& F = prime_field(c.prime);
    std::vector<Fq> a;
    for (const auto& s : c.a) a.push_back(F.from_rational(Rational::parse(s)));
    return validate_params(c.genus, F.from_rational(Rational::parse(c.v)), a, ValidationLevel::Pair);
}

void add_family_options(CLI::App* cmd, Common& c, bool need_prime) {
    cmd->add_option("--genus", c.genus, "genus g")->check(CLI::Range(1, 12));
    auto* p = cmd->add_option("--prime", c.prime, "odd prime p");
    if (need_prime) p->required();
    cmd->add_option("--v", c.v, "parameter v (integer or n/d)");
    cmd->add_option("--a", c.a, "parameters a_1,...,a_g")->delimiter(',');
    cmd->add_option("--trials", c.trials, "random trials")->check(CLI::Range(1, 100000));
    cmd->add_option("--seed", c.seed, "root seed");
    cmd->add_flag("--json", c.json_out, "single-line JSON output");
}

int emit(const RunReport& rep, bool json_out, bool timings = true) {
    if (json_out) {
        std::cout << to_json(rep, timings).dump() << "\n";
    } else {
        for (const auto& c : rep.checks) {
            std::cout << (c.status == CheckStatus::Passed ? "PASS " : c.status == CheckStatus::Failed ? "FAIL " : "SKIP ")
                      << c.name;
            if (timings) std::cout << " (" << c.seconds << " s)";
            std::cout << "\n";
            if (c.status != CheckStatus::Passed) std::cout << "  " << c.details.dump() << "\n";
        }
        std::cout << (rep.passed() ? "passed" : "FAILED") << "\n";
    }
    return rep.passed() ? kExitPass : kExitFail;
}

json rpoly(const UPoly<Rational>& f) {
    json c = json::array();
    for (const auto& e : f.coeffs()) c.push_back(e.to_string());
    return json{{"coeffs", c}};
}

int cmd_gen(const Common& c, bool sqrt2) {
    if (c.prime == 0) {
        FamilyParams<Rational> params = q_params(c);
        if (sqrt2) params = sqrt2_params(c.genus, params.v, std::vector<Rational>(params.a.begin(), params.a.begin() + c.genus / 2));
        const auto pair = build_any_pair(params);
        json a = json::array(), b = json::array();
        for (const auto& x : pair.params.a) a.push_back(x.to_string());
        for (const auto& x : pair.b) b.push_back(x.to_string());
        const json j{{"g", pair.genus()}, {"p", "0"}, {"v", pair.v().to_string()}, {"a", a}, {"b", b},
                     {"C", rpoly(pair.C.f)}, {"Cprime", rpoly(pair.Cprime.f)}, {"A", pair.A.to_string()}};
        std::cout << (c.json_out ? j.dump() : j.dump(2)) << "\n";
        return kExitPass;
    }
    FamilyParams<Fq> params;
    if (sqrt2) {
        const FiniteField& F = prime_field(c.prime);
        std::vector<Fq> half;
        for (const auto& s : c.a) half.push_back(F.from_rational(Rational::parse(s)));
        params = sqrt2_params(c.genus, F.from_rational(Rational::parse(c.v)), half);
    } else {
        params = ff_params(c);
    }
    const json j = to_json(build_any_pair(params));
    std::cout << (c.json_out ? j.dump() : j.dump(2)) << "\n";
    return kExitPass;
}

int cmd_identities(const Common& c) {
    RunReport rep;
    rep.command = "verify identities";
    rep.seed = c.seed;
    const std::uint64_t p = c.prime ? c.prime : 10007;
    prime_field(p);
    rep.params = json{{"genus", c.genus}, {"prime", p}, {"trials", c.trials}};
    const Rng root(c.seed);
    rep.checks.push_back(identities_check());
    if (c.genus % 2 == 0) {
        rep.checks.push_back(m_congruence_check(c.genus, p, c.trials, root.child("M-congruence").seed()));
        rep.checks.push_back(gamma_consistency_check(c.genus, p, c.trials, root.child("gamma").seed()));
    }
    return emit(rep, c.json_out);
}

int cmd_isogeny(const Common& c) {
    const auto ctx = PairContext::make(build_any_pair(ff_params(c)));
    RunReport rep;
    rep.command = "verify isogeny";
    rep.seed = c.seed;
    rep.params = json{{"pair", to_json(ctx.pair)}, {"trials", c.trials}};
    const Rng root(c.seed);
    rep.checks.push_back(mult_by_two_check("mult-by-two", ctx, c.trials, root.child("mult2").seed()));
    rep.checks.push_back(kernel_check("kernel", ctx, root.child("kernel").seed()));
    rep.checks.push_back(proposition_check("pointwise proposition", ctx, c.trials, root.child("proposition").seed()));
    return emit(rep, c.json_out);
}

int cmd_lpoly_equal(const Common& c, std::vector<std::uint64_t> primes) {
    if (c.prime) primes.push_back(c.prime);
    if (primes.empty()) raise(ErrorKind::InvalidArgument, "give --prime or --primes");
    for (auto p : primes) prime_field(p);
    RunReport rep;
    rep.command = "verify lpoly-equal";
    rep.seed = c.seed;
    rep.params = json{{"genus", c.genus}, {"v", c.v}, {"a", c.a}, {"primes", primes}};
    rep.checks.push_back(lequality_check(LEqualityCase{q_params(c), primes}));
    return emit(rep, c.json_out);
}

int cmd_split(const Common& c) {
    std::vector<std::int64_t> a;
    for (const auto& s : c.a) a.push_back(std::stoll(s));
    if (a.empty()) a = {2, 3};
    const std::uint64_t p = c.prime ? c.prime : 13;
    prime_field(p);
    RunReport rep;
    rep.command = "verify split";
    rep.seed = c.seed;
    rep.params = json{{"prime", p}, {"a", a}};
    rep.checks.push_back(split_check(a, p));
    return emit(rep, c.json_out);
}

int cmd_sqrt2(const Common& c) {
    if (c.a.size() != 1) raise(ErrorKind::InvalidArgument, "--a takes the single free parameter a_1");
    const std::uint64_t p = c.prime ? c.prime : 101;
    prime_field(p);
    RunReport rep;
    rep.command = "verify sqrt2";
    rep.seed = c.seed;
    rep.params = json{{"prime", p}, {"v", c.v}, {"a", c.a}, {"trials", c.trials}};
    rep.checks.push_back(sqrt2_check(std::stol(c.v), std::stol(c.a[0]), p, c.trials, Rng(c.seed).child("sqrt2").seed()));
    return emit(rep, c.json_out);
}

int cmd_zeta(const Common& c, const std::string& curve_file, int k) {
    std::vector<HyperCurve<Fq>> curves;
    if (!curve_file.empty()) {
        curves.push_back(curve_from_json(read_json_file(curve_file)));
    } else {
        const auto pair = build_any_pair(ff_params(c));
        curves = {pair.C, pair.Cprime};
    }
    json out = json::array();
    for (const auto& C : curves) {
        if (c.prime && C.f.zero_element().field().characteristic() != c.prime)
            raise(ErrorKind::InvalidArgument, "--prime does not match the curve file");
        json j{{"label", C.label}, {"genus", C.genus}, {"f", to_json(C.f)}};
        json counts = json::array();
        for (int i = 1; i <= k; ++i) counts.push_back(count_points(C, i));
        j["counts"] = counts;
        if (C.genus <= 3) {
            const LPoly L = l_polynomial(C);
            j["L"] = to_json(L);
            j["L(1)"] = to_json(L.at_one());
            j["weil_ok"] = L.weil_roots_ok();
            j["charpoly"] = json::array();
            for (const auto& e : frobenius_charpoly(C)) j["charpoly"].push_back(to_json(e));
        }
        out.push_back(j);
    }
    if (c.json_out) {
        std::cout << out.dump() << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    for (const auto& j : out)
        if (j.contains("weil_ok") && !j["weil_ok"].get<bool>()) return kExitFail;
    return kExitPass;
}

template <class T, class Parse>
std::array<T, 6> six(const std::vector<std::string>& pts, Parse&& parse) {
    if (pts.size() != 6) raise(ErrorKind::InvalidArgument, "--points needs exactly six values");
    std::array<T, 6> out;
    for (std::size_t i = 0; i < 6; ++i) out[i] = parse(pts[i]);
    return out;
}

int cmd_criterion(const std::vector<std::string>& pts, std::uint64_t p, bool json_out) {
    json j;
    if (p == 0) {
        const auto a = six<Rational>(pts, [](const std::string& s) { return Rational::parse(s); });
        const auto r = pairing_involution(a);
        j = json{{"field", "Q"}, {"criterion", involution_criterion(a)}, {"defect", criterion_defect(a).to_string()},
                 {"determinant", r.determinant.to_string()}, {"exists", r.exists}};
        if (r.involution) j["involution"] = to_json(*r.involution);
    } else {
        const FiniteField& F = prime_field(p);
        const auto a = six<Fq>(pts, [&](const std::string& s) { return F.from_rational(Rational::parse(s)); });
        const auto r = pairing_involution(a);
        j = json{{"field", F.name()}, {"criterion", involution_criterion(a)}, {"defect", to_json(criterion_defect(a))},
                 {"determinant", to_json(r.determinant)}, {"exists", r.exists}};
        if (r.involution) j["involution"] = to_json(*r.involution);
    }
    std::cout << (json_out ? j.dump() : j.dump(2)) << "\n";
    return kExitPass;
}

int cmd_normalize(const std::vector<std::string>& pts, std::uint64_t p, bool json_out) {
    json j;
    auto images = [](const auto& n) {
        json arr = json::array();
        for (const auto& x : n.images) arr.push_back(to_json(x));
        return arr;
    };
    if (p == 0) {
        const auto P = six<ProjPoint<Rational>>(pts, [](const std::string& s) {
            return s == "inf" ? ProjPoint<Rational>::infinity(Rational()) : ProjPoint<Rational>::finite(Rational::parse(s));
        });
        const auto n = normalize_genus2(P);
        j = json{{"field", "Q"}, {"h", to_json(n.h)}, {"v", to_json(n.v)}, {"x1", to_json(n.x1)}, {"x2", to_json(n.x2)}, {"images", images(n)}};
    } else {
        const FiniteField& F = prime_field(p);
        const auto P = six<ProjPoint<Fq>>(pts, [&](const std::string& s) {
            return s == "inf" ? ProjPoint<Fq>::infinity(F.zero()) : ProjPoint<Fq>::finite(F.from_rational(Rational::parse(s)));
        });
        const auto n = normalize_genus2_ff(P);
        j = json{{"field", n.v.field().name()}, {"h", to_json(n.h)}, {"v", to_json(n.v)}, {"x1", to_json(n.x1)}, {"x2", to_json(n.x2)}, {"images", images(n)}};
    }
    std::cout << (json_out ? j.dump() : j.dump(2)) << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forge: correspondences between hyperelliptic Jacobians"};
    app.require_subcommand(1);
    Common c;

    bool sqrt2 = false;
    auto* gen = app.add_subcommand("gen", "build the curve pair for given parameters");
    add_family_options(gen, c, false);
    gen->add_flag("--sqrt2", sqrt2, "use the sqrt 2 family; --a gives a_1..a_{g/2}");

    auto* verify = app.add_subcommand("verify", "run one verification");
    verify->require_subcommand(1);
    auto* v_id = verify->add_subcommand("identities", "base identities, M-congruence, gamma consistency");
    add_family_options(v_id, c, false);
    auto* v_iso = verify->add_subcommand("isogeny", "mult-by-two, kernel, pointwise proposition");
    add_family_options(v_iso, c, true);
    std::vector<std::uint64_t> primes;
    auto* v_leq = verify->add_subcommand("lpoly-equal", "L(C) = L(C') at each prime");
    add_family_options(v_leq, c, false);
    v_leq->add_option("--primes", primes, "comma separated primes")->delimiter(',');
    auto* v_split = verify->add_subcommand("split", "splitting at v = sqrt(-1)");
    add_family_options(v_split, c, false);
    auto* v_sqrt2 = verify->add_subcommand("sqrt2", "sqrt 2 family");
    add_family_options(v_sqrt2, c, false);

    std::string curve_file;
    int k = 1;
    auto* zeta = app.add_subcommand("zeta", "point counts and L-polynomials");
    add_family_options(zeta, c, false);
    zeta->add_option("--curve-json", curve_file, "curve or pair JSON file");
    zeta->add_option("--k", k, "count over F_{p^1}..F_{p^k}")->check(CLI::Range(1, 6));

    std::vector<std::string> points;
    std::uint64_t mprime = 0;
    bool mjson = false;
    auto* moduli = app.add_subcommand("moduli", "six-point criterion and genus-2 normalization");
    moduli->require_subcommand(1);
    auto* m_crit = moduli->add_subcommand("criterion", "involution criterion");
    auto* m_norm = moduli->add_subcommand("normalize", "normalize to {v, 1/v, +-x1, +-x2}");
    for (auto* m : {m_crit, m_norm}) {
        m->add_option("--points", points, "six values (n, n/d or inf)")->delimiter(',')->required();
        m->add_option("--prime", mprime, "work over F_p (default Q)");
        m->add_flag("--json", mjson, "single-line JSON");
    }

    bool no_timings = false;
    std::string fixtures;
    auto* suite = app.add_subcommand("suite", "full verification battery");
    suite->add_option("--seed", c.seed, "root seed");
    suite->add_option("--trials", c.trials, "trials per randomized check")->check(CLI::Range(1, 100000));
    suite->add_option("--fixtures", fixtures, "directory of zeta fixtures");
    suite->add_flag("--json", c.json_out, "single-line JSON output");
    suite->add_flag("--no-timings", no_timings, "omit timings (byte-identical reruns)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(c, sqrt2);
        if (*v_id) return cmd_identities(c);
        if (*v_iso) return cmd_isogeny(c);
        if (*v_leq) return cmd_lpoly_equal(c, primes);
        if (*v_split) return cmd_split(c);
        if (*v_sqrt2) return cmd_sqrt2(c);
        if (*zeta) return cmd_zeta(c, curve_file, k);
        if (*m_crit) return cmd_criterion(points, mprime, mjson);
        if (*m_norm) return cmd_normalize(points, mprime, mjson);
        if (*suite) {
            SuiteConfig cfg = default_suite_config();
            cfg.seed = c.seed;
            cfg.trials = c.trials;
            cfg.fixtures_dir = fixtures;
            return emit(run_suite(cfg), c.json_out, !no_timings);
        }
    } catch (const DegenerateParamsError& e) {
        std::cerr << "forge: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "forge: " << e.what() << "\n";
        return is_parameter_error(e.kind()) ? kExitUsage : kExitFail;
    } catch (const json::exception& e) {
        std::cerr << "forge: bad JSON input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "forge: bad number: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "forge: number out of range: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
