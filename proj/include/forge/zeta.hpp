#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forge/family.hpp"
#include "forge/finite_field.hpp"
#include "forge/rational.hpp"
#include "forge/upoly_ff.hpp"

namespace forge {

inline constexpr std::uint64_t kCountScaleGuard = 100'000'000;
inline constexpr double kWeilTolerance = 1e-6;

/// Numerator of the zeta function: 1 + c1 T + ... + c_{2g} T^{2g}.
struct LPoly {
    int g = 0;
    std::uint64_t p = 0;
    std::vector<Integer> c;

    Integer at_one() const;
    /// L(-T): the L-polynomial of a quadratic twist.
    LPoly twisted() const;
    /// c_{g+j} = p^j c_{g-j}.
    bool functional_equation_holds() const;
    /// Point counts N_1..N_kmax implied by the polynomial.
    std::vector<Integer> counts(int kmax) const;
    /// Every reciprocal root has absolute value sqrt(p) up to a relative tolerance.
    bool weil_roots_ok(double tol = kWeilTolerance) const;
    std::string to_string() const;

    friend bool operator==(const LPoly& a, const LPoly& b) { return a.p == b.p && a.c == b.c; }
};

LPoly operator*(const LPoly& a, const LPoly& b);

/// Points of the smooth model over F_{p^k}. Even-degree models are counted on
/// their odd model at a rational root. Throws ScaleGuard when p^k > 1e8,
/// NoRationalRoot, InvalidArgument when the curve is not over a prime field.
std::uint64_t count_points(const HyperCurve<Fq>& curve, int k);

/// Newton reconstruction from N_1..N_g; g <= 3.
LPoly l_polynomial(const HyperCurve<Fq>& curve);
LPoly l_polynomial_from_counts(int g, std::uint64_t p, const std::vector<std::uint64_t>& counts);

/// y^{2g} L(1/y) as coefficients of y^{2g}, ..., y^0.
std::vector<Integer> frobenius_charpoly(const HyperCurve<Fq>& curve);

/// y^2 = c f(x).
HyperCurve<Fq> quadratic_twist(const HyperCurve<Fq>& curve, const Fq& c);

/// Smallest quadratic non-residue of a prime field.
Fq non_residue(const FiniteField& F);

enum class TwistRelation { Direct, Twist, Neither };
std::string to_string(TwistRelation r);

/// Direct if equal, Twist if a = b(-T).
TwistRelation twist_relation(const LPoly& a, const LPoly& b);

struct LEqualityEntry {
    std::uint64_t p = 0;
    bool skipped = false;
    std::string reason;
    std::optional<LPoly> L_C;
    std::optional<LPoly> L_Cprime;
    bool equal = false;
    TwistRelation thm_relation = TwistRelation::Neither;
};

struct LEqualityReport {
    int g = 0;
    std::vector<LEqualityEntry> entries;
    /// All non-skipped primes agree and at least one prime was checked.
    bool passed = false;
};

/// L(C) = L(C') for the working models at each prime, plus the relation of
/// the theorem models. Degenerate primes are skipped with a reason.
LEqualityReport check_l_equality(const FamilyParams<Rational>& params, const std::vector<std::uint64_t>& primes);
LEqualityEntry check_l_equality_at(const CurvePair<Fq>& pair);

struct SplitCombination {
    bool twist_q1 = false;
    bool twist_q2 = false;
    bool holds = false;
};

struct SplitReport {
    std::uint64_t p = 0;
    Fq i;
    LPoly L_C, L_Q1, L_Q2;
    std::vector<SplitCombination> combinations;
    /// Dropping the constant i from both quotients is a twist iff i is a non-square.
    bool i_is_square = false;
    bool passed = false;
};

/// C: y^2 = i(x^2+1) prod(x^2 - a_j) over F_p with i^2 = -1, and its quotients
/// by x -> -x. Throws PrimeUnsuitable unless p = 1 mod 4.
SplitReport check_split_at_i(int g, const std::vector<std::int64_t>& a, std::uint64_t p);

struct CharpolyCandidate {
    std::string reading;  // "a_i literal" or "a_i = x_i^2"
    bool with_A = false;
    bool smooth = false;
    std::string reason;
    std::vector<Integer> charpoly;
    bool matches = false;
};

struct CharpolyReproduction {
    std::uint64_t p = 0;
    std::vector<Integer> target;
    std::vector<CharpolyCandidate> candidates;
    /// Exactly one smooth candidate matches the target.
    bool passed = false;
};

/// Genus-3 specialization v = 2, (1, 3, 4) at p = 13 under both parameter
/// readings and with or without the constant A.
CharpolyReproduction reproduce_genus3_charpoly();

}  // namespace forge
