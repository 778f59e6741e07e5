#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "forge/corresp.hpp"
#include "forge/family.hpp"
#include "forge/identities.hpp"
#include "forge/jacobian.hpp"
#include "forge/moduli.hpp"
#include "forge/mpoly.hpp"
#include "forge/zeta.hpp"

namespace forge {

using json = nlohmann::ordered_json;

// Field elements: decimal strings; extension elements: arrays low to high.
json to_json(const Fq& a);
Fq fq_from_json(const json& j, const FiniteField& F);
json to_json(const Rational& r);
Rational rational_from_json(const json& j);
json to_json(const Integer& n);

json to_json(const FqPoly& f);  // {"coeffs": [...]}
FqPoly fqpoly_from_json(const json& j, const FiniteField& F);

json to_json(const MPolyZ& f);  // {"vars": [...], "terms": [{"e": [...], "c": "..."}]}
MPolyZ mpoly_from_json(const json& j);

json to_json(const DivClass& d);  // {"u": ..., "v": ...}
json to_json(const GammaImage& g);
json to_json(const Point& P);

json to_json(const CurvePair<Fq>& pair);
/// Rebuilds the pair from g, p, v, a and checks any stored C/C' coefficients.
CurvePair<Fq> pair_from_json(const json& j);

json to_json(const LPoly& L);  // integer array c_0..c_2g
LPoly lpoly_from_json(const json& j, int g, std::uint64_t p);

/// {"p", "coeffs"}, a CurvePair, or a fixture; for pairs C is used.
HyperCurve<Fq> curve_from_json(const json& j);

json to_json(const IdentityReport& r);
json to_json(const LEqualityReport& r);
json to_json(const SplitReport& r);
json to_json(const CharpolyReproduction& r);
json to_json(const MultByTwoReport& r);
json to_json(const KernelReport& r);
json to_json(const PropositionReport& r);
json to_json(const Sqrt2Report& r);
json to_json(const CriterionBattery& r);
json to_json(const NormalizationBattery& r);

template <class T>
json to_json(const Homography<T>& h) {
    return json{{"a", to_json(h.a())}, {"b", to_json(h.b())}, {"c", to_json(h.c())}, {"d", to_json(h.d())}};
}

struct ZetaFixture {
    std::string name;
    CurvePair<Fq> pair;
    std::optional<LPoly> L_C;
    std::optional<LPoly> L_Cprime;
};

ZetaFixture load_fixture(const std::filesystem::path& file);
/// Every *.json in dir, sorted by file name.
std::vector<ZetaFixture> load_fixtures(const std::filesystem::path& dir);
json read_json_file(const std::filesystem::path& file);

}  // namespace forge
