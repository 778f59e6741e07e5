#pragma once

#include <set>
#include <string>

#include "forge/family_ff.hpp"
#include "forge/suite.hpp"

namespace testing {

using namespace forge;

inline const FiniteField& Fp(std::uint64_t p) { return FiniteField::prime(p); }

inline std::set<std::uint64_t> as_set(const std::vector<Fq>& xs) {
    std::set<std::uint64_t> s;
    for (const auto& x : xs) s.insert(x.to_u64());
    return s;
}

inline CurvePair<Fq> pair_at(int g, std::uint64_t p, long v, const std::vector<long>& a) {
    return build_any_pair(reduce_params(rational_params(g, v, a), Fp(p)));
}

/// Points of the smooth model of y^2 = f(x) over F_p by enumerating (x, y).
inline std::uint64_t naive_count(const FqPoly& f) {
    const FiniteField& F = f.zero_element().field();
    const std::uint64_t p = F.characteristic();
    std::uint64_t n = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        const Fq fx = f.eval(F.from_u64(x));
        for (std::uint64_t y = 0; y < p; ++y) {
            const Fq Y = F.from_u64(y);
            if (Y * Y == fx) ++n;
        }
    }
    if (f.degree() % 2 == 1) return n + 1;
    std::uint64_t inf = 0;
    for (std::uint64_t y = 0; y < p; ++y)
        if (F.from_u64(y) * F.from_u64(y) == f.lead()) ++inf;
    return n + inf;
}

}  // namespace testing
