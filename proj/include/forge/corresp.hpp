#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "forge/family.hpp"
#include "forge/jacobian.hpp"

namespace forge {

enum class Direction { Forward, Transpose };

using Point = std::pair<Fq, Fq>;

/// Even-model Mumford pair on the target curve: u monic of degree 2 with
/// v^2 = f_target mod u.
struct GammaImage {
    FqPoly u;
    FqPoly v;
    const FiniteField& field() const { return u.zero_element().field(); }
};

/// A pair together with odd models of both curves anchored at x = v.
struct PairContext {
    CurvePair<Fq> pair;
    OddModel odd_C;
    OddModel odd_Cprime;

    static PairContext make(CurvePair<Fq> pair);
    const OddModel& source(Direction d) const { return d == Direction::Forward ? odd_C : odd_Cprime; }
    const OddModel& target(Direction d) const { return d == Direction::Forward ? odd_Cprime : odd_C; }
};

/// Image of a point of C (forward) or C' (transpose). The pair is re-expressed
/// over the field of X when needed. Errors: NotOnCurve, WeierstrassPoint,
/// EmptyFiber (X = +-v), RamifiedFiber (X = +-1/v), BadFiber (odd g: the
/// parent point or the transport factor degenerates).
GammaImage gamma_point(const CurvePair<Fq>& pair, const Fq& X, const Fq& Y, Direction dir);

/// The defining equations evaluated without fiber checks. Used where the
/// fiber is ramified and only the support of the image matters.
GammaImage gamma_point_raw(const CurvePair<Fq>& pair, const Fq& X, const Fq& Y, Direction dir);

/// x outside {0, +-v, +-1/v} and y != 0.
bool is_good_point(const CurvePair<Fq>& pair, const Fq& x, const Fq& y);

inline constexpr int kDefaultDecompositionRetries = 200;
inline constexpr int kMaxSplitDegree = 3;

struct GoodDecomposition {
    const FiniteField* field = nullptr;  // field of definition of T
    std::vector<Point> T;                // even-model points over `field`
    std::vector<Point> Q;                // even-model points over F_p
    int attempts = 0;
};

/// c = class(sum T - sum Q) with all points good. Throws DecompositionFailure.
GoodDecomposition decompose_class(const PairContext& ctx, const DivClass& c, Direction dir, std::uint64_t seed,
                                  int retries = kDefaultDecompositionRetries);

/// The homomorphism induced by the correspondence, on classes over F_p.
DivClass gamma_class(const PairContext& ctx, const DivClass& c, Direction dir, std::uint64_t seed,
                     int retries = kDefaultDecompositionRetries);

struct MultByTwoReport {
    int trials = 0;
    int passed = 0;
    std::vector<std::string> failures;
    bool ok() const { return trials > 0 && passed == trials; }
};

/// gamma'(gamma(c)) = 2c for random classes c.
MultByTwoReport check_mult_by_two(const PairContext& ctx, int trials, std::uint64_t seed);

struct KernelReport {
    int g = 0;
    std::vector<bool> generator_nonzero;
    int nontrivial_sums = 0;
    int nontrivial_sums_nonzero = 0;
    std::vector<bool> image_is_identity;
    bool ok() const;
};

/// Kernel generators e_i = [(sqrt a_i, 0) - (-sqrt a_i, 0)]. Throws
/// PrimeUnsuitable when some a_i is not a square.
KernelReport check_kernel(const PairContext& ctx, std::uint64_t seed);

/// The kernel classes e_1..e_g on the odd model of C.
std::vector<DivClass> kernel_generators(const PairContext& ctx);

struct PropositionReport {
    Point P;
    std::vector<Point> image;  // four points of C, over a quadratic extension
    bool matches = false;
    std::string detail;
};

/// gamma'(gamma(P)) as a degree-4 divisor, compared with 2P + P1 + w(P1)
/// where x(P1) = -x(P).
PropositionReport check_point_proposition(const PairContext& ctx, const Point& P);

/// A random good point of C over F_p.
Point random_good_point(const PairContext& ctx, Rng& rng, Direction dir = Direction::Forward);

enum class SquareRelation { PlusTwo, MinusTwo, Other };
std::string to_string(SquareRelation r);

struct Sqrt2Report {
    bool roots_match = false;
    bool A_is_square = false;
    MultByTwoReport mult_by_two;
    int samples = 0;
    int plus_two = 0;
    int minus_two = 0;
    SquareRelation observed = SquareRelation::Other;
};

/// For a pair with the same root set on both sides, psi = iota o gamma with
/// iota(z, t) = (z, sqrt(A) t) is an endomorphism of J(C); measures psi o psi.
/// Requires A to be a square in the base field (PrimeUnsuitable otherwise).
Sqrt2Report measure_sqrt2(const PairContext& ctx, int trials, std::uint64_t seed);

}  // namespace forge
