#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "forge/family.hpp"
#include "forge/finite_field.hpp"
#include "forge/mpoly.hpp"
#include "forge/rng.hpp"

namespace forge {

enum class IdentityMode { Exact, Sampled };

struct IdentityReport {
    std::string name;
    IdentityMode mode = IdentityMode::Exact;
    int trials = 0;
    bool passed = false;
    std::uint64_t seed = 0;
    std::uint64_t prime = 0;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    /// Sampled mode: (degree / p)^trials.
    double error_bound = 0.0;
    std::string witness;
    std::vector<std::string> notes;
    std::vector<IdentityReport> parts;
};

/// The symbolic ingredients in Z[a1, a2, v, x, z]. Q1, Q2 are q1, q2 with the
/// denominators (a_i - v^2) cleared.
struct BaseIdentityPolys {
    std::vector<std::string> vars;
    MPolyZ S, p0x, q0z, p1x, p2x, p1v, p2v, Q1, Q2, D1, D2;
};

BaseIdentityPolys base_identity_polys();

/// Checks both base identities exactly, in the form they are usually printed
///   p2(v)p1(x)q2(z) - p1(v)p2(x)q1(z) + (a1 - a2) S = 0,
///   (1 - v^2) S = 2 p0(x) q0(z) - (v^2 + 1)(1 - xv - zv + xz)^2,
/// and with the opposite sign on the S-term. `passed` reflects the printed
/// forms; `parts` carries all four checks with residuals.
IdentityReport verify_base_identities();
IdentityReport verify_base_identities(const BaseIdentityPolys& polys);

/// Exact g = 2 check: (LHS - M^2) * D^2 has zero pseudo-remainder by S in z.
IdentityReport verify_M_congruence_exact();

/// Sampled congruence prod p_i(v)p_i(x)q_i(z) = M(x,z)^2 on S = 0 (g even),
/// plus the exact check when g = 2. Throws ParamDrawFailure, GenusParity.
IdentityReport verify_M_congruence(int g, std::uint64_t p, int trials, std::uint64_t seed);

using PairMutator = std::function<void(CurvePair<Fq>&)>;

/// Sampled check of [M (v^2+1)(1 - xv - zv + xz)]^2 = f_C(x) f_C'(z) on S = 0.
/// `mutate` is applied to each drawn pair before evaluation.
IdentityReport verify_gamma_consistency(int g, std::uint64_t p, int trials, std::uint64_t seed,
                                        const PairMutator& mutate = {});

struct PointCheck {
    bool on_variety;
    bool congruence_holds;
    bool gamma_holds;
    /// Evaluating off S = 0 proves nothing; flagged rather than counted.
    bool misuse() const noexcept { return !on_variety; }
};

/// Evaluates both sampled relations at one (x0, z0), which should satisfy S = 0.
PointCheck check_point(const CurvePair<Fq>& pair, const Fq& x0, const Fq& z0);

/// A point (x0, z0) on S = 0 over F_p or F_{p^2} with x0 in F_p outside the
/// ramified and empty fibers; the pair is re-expressed over the field of z0.
struct VarietySample {
    CurvePair<Fq> pair;
    Fq x0;
    Fq z0;
};

VarietySample sample_variety(const CurvePair<Fq>& pair, Rng& rng);

}  // namespace forge
