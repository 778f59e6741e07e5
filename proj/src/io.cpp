#include "forge/io.hpp"

#include <algorithm>
#include <fstream>

namespace forge {

json to_json(const Fq& a) {
    if (a.field().is_prime_field()) return std::to_string(a.coeff(0));
    json arr = json::array();
    for (auto c : a.coeffs()) arr.push_back(std::to_string(c));
    return arr;
}

namespace {

std::uint64_t parse_u64(const json& j, const char* what) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer()) {
        const auto n = j.get<std::int64_t>();
        if (n < 0) raise(ErrorKind::InvalidArgument, std::string(what) + " must be non-negative");
        return static_cast<std::uint64_t>(n);
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t used = 0;
        const auto n = std::stoull(s, &used);
        if (used != s.size()) raise(ErrorKind::InvalidArgument, std::string("bad ") + what + ": " + s);
        return n;
    }
    raise(ErrorKind::InvalidArgument, std::string("expected an integer for ") + what);
}

Fq scalar_from_json(const json& j, const FiniteField& F) {
    if (j.is_string()) return F.from_rational(Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return F.from_int(j.get<std::int64_t>());
    raise(ErrorKind::InvalidArgument, "expected a field element");
}

}  // namespace

Fq fq_from_json(const json& j, const FiniteField& F) {
    if (!j.is_array()) return scalar_from_json(j, F);
    if (static_cast<int>(j.size()) != F.degree())
        raise(ErrorKind::InvalidArgument, "extension element has " + std::to_string(j.size()) + " coefficients");
    std::vector<std::uint64_t> c;
    for (const auto& e : j) c.push_back(parse_u64(e, "coefficient") % F.characteristic());
    return F.from_coeffs(c);
}

json to_json(const Rational& r) { return r.to_string(); }
Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    return Rational::parse(j.get<std::string>());
}
json to_json(const Integer& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

json to_json(const FqPoly& f) {
    json c = json::array();
    for (const auto& e : f.coeffs()) c.push_back(to_json(e));
    return json{{"coeffs", c}};
}

FqPoly fqpoly_from_json(const json& j, const FiniteField& F) {
    const json& arr = j.is_object() ? j.at("coeffs") : j;
    std::vector<Fq> c;
    for (const auto& e : arr) c.push_back(fq_from_json(e, F));
    return FqPoly(F.zero(), std::move(c));
}

json to_json(const MPolyZ& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(json{{"e", e}, {"c", c.get_str()}});
    return json{{"vars", f.vars()}, {"terms", terms}};
}

MPolyZ mpoly_from_json(const json& j) {
    MPolyZ f(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
        const auto e = t.at("e").get<Exponent>();
        if (e.size() != f.vars().size()) raise(ErrorKind::VariableMismatch, "exponent length differs from the variable list");
        f.add_term(e, Integer(t.at("c").is_string() ? t.at("c").get<std::string>() : std::to_string(t.at("c").get<std::int64_t>())));
    }
    return f;
}

json to_json(const DivClass& d) { return json{{"u", to_json(d.u())}, {"v", to_json(d.v())}}; }
json to_json(const GammaImage& g) { return json{{"u", to_json(g.u)}, {"v", to_json(g.v)}}; }
json to_json(const Point& P) { return json::array({to_json(P.first), to_json(P.second)}); }

json to_json(const CurvePair<Fq>& pair) {
    json a = json::array(), b = json::array();
    for (const auto& x : pair.params.a) a.push_back(to_json(x));
    for (const auto& x : pair.b) b.push_back(to_json(x));
    const FiniteField& F = pair.v().field();
    return json{{"g", pair.genus()},
                {"p", std::to_string(F.characteristic())},
                {"v", to_json(pair.v())},
                {"a", a},
                {"b", b},
                {"C", to_json(pair.C.f)},
                {"Cprime", to_json(pair.Cprime.f)},
                {"A", to_json(pair.A)}};
}

CurvePair<Fq> pair_from_json(const json& j) {
    const int g = j.at("g").get<int>();
    const std::uint64_t p = parse_u64(j.at("p"), "p");
    if (!is_prime_u64(p)) raise(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    const FiniteField& F = FiniteField::prime(p);
    std::vector<Fq> a;
    for (const auto& e : j.at("a")) a.push_back(fq_from_json(e, F));
    const auto params = validate_params(g, fq_from_json(j.at("v"), F), a, ValidationLevel::Pair);
    auto pair = build_any_pair(params);
    if (j.contains("C") && !(fqpoly_from_json(j.at("C"), F) == pair.C.f))
        raise(ErrorKind::CurveMismatch, "stored C does not match the parameters");
    if (j.contains("Cprime") && !(fqpoly_from_json(j.at("Cprime"), F) == pair.Cprime.f))
        raise(ErrorKind::CurveMismatch, "stored C' does not match the parameters");
    return pair;
}

json to_json(const LPoly& L) {
    json arr = json::array();
    for (const auto& c : L.c) arr.push_back(to_json(c));
    return arr;
}

LPoly lpoly_from_json(const json& j, int g, std::uint64_t p) {
    LPoly L{g, p, {}};
    for (const auto& e : j) L.c.push_back(e.is_string() ? Integer(e.get<std::string>()) : Integer(static_cast<long>(e.get<std::int64_t>())));
    if (static_cast<int>(L.c.size()) != 2 * g + 1)
        raise(ErrorKind::InvalidArgument, "L-polynomial needs " + std::to_string(2 * g + 1) + " coefficients");
    return L;
}

HyperCurve<Fq> curve_from_json(const json& j) {
    if (j.contains("pair")) return pair_from_json(j.at("pair")).C;
    if (j.contains("g") && j.contains("a")) return pair_from_json(j).C;
    const std::uint64_t p = parse_u64(j.at("p"), "p");
    if (!is_prime_u64(p)) raise(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    return HyperCurve<Fq>::make(fqpoly_from_json(j, FiniteField::prime(p)), j.value("label", std::string("C")));
}

json to_json(const IdentityReport& r) {
    json j{{"name", r.name},
           {"mode", r.mode == IdentityMode::Exact ? "exact" : "sampled"},
           {"trials", r.trials},
           {"passed", r.passed},
           {"seed", r.seed},
           {"prime", r.prime},
           {"lhs_terms", r.lhs_terms},
           {"rhs_terms", r.rhs_terms},
           {"error_bound", r.error_bound}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (!r.parts.empty()) {
        json parts = json::array();
        for (const auto& p : r.parts) parts.push_back(to_json(p));
        j["parts"] = parts;
    }
    return j;
}

json to_json(const LEqualityReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json x{{"p", e.p}, {"skipped", e.skipped}};
        if (e.skipped) {
            x["reason"] = e.reason;
        } else {
            x["L_C"] = to_json(*e.L_C);
            x["L_Cprime"] = to_json(*e.L_Cprime);
            x["equal"] = e.equal;
            x["theorem_models"] = to_string(e.thm_relation);
        }
        entries.push_back(x);
    }
    return json{{"g", r.g}, {"passed", r.passed}, {"entries", entries}};
}

json to_json(const SplitReport& r) {
    json combos = json::array();
    for (const auto& c : r.combinations)
        combos.push_back(json{{"twist_q1", c.twist_q1}, {"twist_q2", c.twist_q2}, {"holds", c.holds}});
    return json{{"p", r.p},           {"i", to_json(r.i)},           {"i_is_square", r.i_is_square},
                {"L_C", to_json(r.L_C)}, {"L_Q1", to_json(r.L_Q1)}, {"L_Q2", to_json(r.L_Q2)},
                {"combinations", combos}, {"passed", r.passed}};
}

json to_json(const CharpolyReproduction& r) {
    json cands = json::array();
    for (const auto& c : r.candidates) {
        json x{{"reading", c.reading}, {"with_A", c.with_A}, {"smooth", c.smooth}, {"matches", c.matches}};
        if (!c.reason.empty()) x["reason"] = c.reason;
        if (c.smooth) {
            json cp = json::array();
            for (const auto& e : c.charpoly) cp.push_back(to_json(e));
            x["charpoly"] = cp;
        }
        cands.push_back(x);
    }
    json target = json::array();
    for (const auto& e : r.target) target.push_back(to_json(e));
    return json{{"p", r.p}, {"target", target}, {"candidates", cands}, {"passed", r.passed}};
}

json to_json(const MultByTwoReport& r) {
    return json{{"trials", r.trials}, {"passed", r.passed}, {"failures", r.failures}, {"ok", r.ok()}};
}

json to_json(const KernelReport& r) {
    return json{{"g", r.g},
                {"generator_nonzero", r.generator_nonzero},
                {"nontrivial_sums", r.nontrivial_sums},
                {"nontrivial_sums_nonzero", r.nontrivial_sums_nonzero},
                {"image_is_identity", r.image_is_identity},
                {"ok", r.ok()}};
}

json to_json(const PropositionReport& r) {
    json img = json::array();
    for (const auto& P : r.image) img.push_back(to_json(P));
    json j{{"P", to_json(r.P)}, {"image", img}, {"matches", r.matches}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

json to_json(const Sqrt2Report& r) {
    return json{{"roots_match", r.roots_match}, {"A_is_square", r.A_is_square},
                {"mult_by_two", to_json(r.mult_by_two)}, {"samples", r.samples},
                {"plus_two", r.plus_two}, {"minus_two", r.minus_two},
                {"observed", to_string(r.observed)}};
}

json to_json(const CriterionBattery& r) {
    return json{{"p", r.p},
                {"involution_tuples", r.involution_tuples},
                {"involution_satisfied", r.involution_satisfied},
                {"symmetry_checked", r.symmetry_checked},
                {"symmetry_ok", r.symmetry_ok},
                {"random_tuples", r.random_tuples},
                {"random_satisfied", r.random_satisfied},
                {"max_random_satisfied", r.max_random_satisfied},
                {"equivalence_samples", r.equivalence_samples},
                {"equivalence_agree", r.equivalence_agree},
                {"ok", r.ok()}};
}

json to_json(const NormalizationBattery& r) {
    return json{{"p", r.p},           {"sets", r.sets},           {"normalized", r.normalized},
                {"pattern_ok", r.pattern_ok}, {"stabilizer_ok", r.stabilizer_ok}, {"redraws", r.redraws},
                {"failures", r.failures}, {"ok", r.ok()}};
}

json read_json_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) raise(ErrorKind::InvalidArgument, "cannot open " + file.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        raise(ErrorKind::InvalidArgument, file.string() + ": " + e.what());
    }
}

ZetaFixture load_fixture(const std::filesystem::path& file) {
    const json j = read_json_file(file);
    ZetaFixture fx{j.value("name", file.stem().string()), pair_from_json(j.at("pair")), std::nullopt, std::nullopt};
    const int g = fx.pair.genus();
    const std::uint64_t p = fx.pair.v().field().characteristic();
    if (j.contains("L_C")) fx.L_C = lpoly_from_json(j.at("L_C"), g, p);
    if (j.contains("L_Cprime")) fx.L_Cprime = lpoly_from_json(j.at("L_Cprime"), g, p);
    return fx;
}

std::vector<ZetaFixture> load_fixtures(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<ZetaFixture> out;
    for (const auto& f : files) out.push_back(load_fixture(f));
    return out;
}

}  // namespace forge
