#pragma once

#include "forge/family.hpp"
#include "forge/finite_field.hpp"
#include "forge/rng.hpp"
#include "forge/upoly_ff.hpp"

namespace forge {

/// Uniform draw of pair-valid parameters over F; throws ParamDrawFailure
/// after `max_tries` rejected draws.
inline FamilyParams<Fq> random_pair_params(int g, const FiniteField& F, Rng& rng, int max_tries = 1000) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        const Fq v = F.random(rng);
        std::vector<Fq> a;
        for (int i = 0; i < g; ++i) a.push_back(F.random(rng));
        try {
            return validate_params(g, v, a, ValidationLevel::Pair);
        } catch (const DegenerateParamsError&) {
        }
    }
    raise(ErrorKind::ParamDrawFailure, "no pair-valid parameters over " + F.name() + " after " + std::to_string(max_tries) + " draws");
}

inline FamilyParams<Fq> lift_params(const FamilyParams<Fq>& params, const FiniteField& W) {
    return map_params<Fq>(params, [&](const Fq& x) { return lift(x, W); });
}

/// Reduction of rational parameters mod p; throws DivisionByZero when a
/// denominator vanishes and DegenerateParamsError when validation fails.
inline FamilyParams<Fq> reduce_params(const FamilyParams<Rational>& params, const FiniteField& F) {
    auto mapped = map_params<Fq>(params, [&](const Rational& x) { return F.from_rational(x); });
    return validate_params(mapped.g, mapped.v, mapped.a, params.level);
}

/// The same pair with every coefficient moved into W.
inline CurvePair<Fq> pair_over(const CurvePair<Fq>& pair, const FiniteField& W) {
    if (&pair.v().field() == &W) return pair;
    return build_any_pair(lift_params(pair.params, W));
}

}  // namespace forge
