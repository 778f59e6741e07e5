#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

/// A point of C over F_{p^2} with the given abscissa.
std::pair<CurvePair<Fq>, Point> point_over_quadratic(const CurvePair<Fq>& pair, const Fq& X) {
    const auto& W = ext_build(X.characteristic(), 2);
    const auto pw = pair_over(pair, W);
    const Fq XW = lift(X, W);
    const auto r = field_sqrt(pw.C.f.eval(XW));
    REQUIRE_FALSE(r.empty());
    return {pw, Point{XW, r[0]}};
}

}  // namespace

TEST_SUITE("corresp") {
    TEST_CASE("gamma image satisfies the Mumford relation on C'") {
        const auto ctx = PairContext::make(pair_at(2, 101, 3, {2, 5}));
        Rng rng(1);
        for (int i = 0; i < 20; ++i) {
            const auto P = random_good_point(ctx, rng);
            const auto img = gamma_point(ctx.pair, P.first, P.second, Direction::Forward);
            CHECK(img.u.degree() == 2);
            CHECK(img.u.lead().is_one());
            const FqPoly fz = lift(ctx.pair.Cprime.f, img.field());
            CHECK(((img.v * img.v - fz) % img.u).is_zero());
        }
    }

    TEST_CASE("gamma errors at special fibers") {
        const auto pair = pair_at(2, 101, 3, {2, 5});
        const auto& F = Fp(101);
        const Fq v = pair.v();
        CHECK_THROWS_AS(gamma_point(pair, v, F.zero(), Direction::Forward), Error);
        try {
            gamma_point(pair, v, F.zero(), Direction::Forward);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::WeierstrassPoint);
        }
        auto kind_at = [&](const Fq& X) {
            const auto [pw, P] = point_over_quadratic(pair, X);
            try {
                gamma_point(pw, P.first, P.second, Direction::Forward);
            } catch (const Error& e) {
                return e.kind();
            }
            return ErrorKind::InvalidArgument;
        };
        CHECK(kind_at(-v) == ErrorKind::EmptyFiber);
        // x = 1/v is a root of p0, so the point there is a Weierstrass point.
        CHECK(kind_at(v.inv()) == ErrorKind::WeierstrassPoint);
        CHECK(kind_at(-v.inv()) == ErrorKind::RamifiedFiber);
        CHECK_THROWS_AS(gamma_point(pair, F.from_int(7), F.from_int(1), Direction::Forward), Error);
    }

    TEST_CASE("good points") {
        const auto pair = pair_at(2, 101, 3, {2, 5});
        const auto& F = Fp(101);
        CHECK_FALSE(is_good_point(pair, F.zero(), F.one()));
        CHECK_FALSE(is_good_point(pair, pair.v(), F.one()));
        CHECK_FALSE(is_good_point(pair, F.from_int(5), F.zero()));
        CHECK(is_good_point(pair, F.from_int(5), F.one()));
    }

    TEST_CASE("gamma' o gamma = 2 on classes") {
        const auto ctx2 = PairContext::make(pair_at(2, 101, 3, {2, 5}));
        const auto r2 = check_mult_by_two(ctx2, 20, 11);
        CHECK(r2.passed == 20);
        const auto ctx1 = PairContext::make(pair_at(1, 101, 3, {2}));
        CHECK(check_mult_by_two(ctx1, 20, 12).ok());
        const auto ctx3 = PairContext::make(pair_at(3, 101, 3, {2, 5, 7}));
        CHECK(check_mult_by_two(ctx3, 10, 13).ok());
    }

    TEST_CASE("gamma on classes is a homomorphism") {
        const auto ctx = PairContext::make(pair_at(2, 101, 3, {2, 5}));
        for (std::uint64_t i = 0; i < 10; ++i) {
            const auto a = random_class(ctx.odd_C, 2 * i), b = random_class(ctx.odd_C, 2 * i + 1);
            const auto ga = gamma_class(ctx, a, Direction::Forward, 100 + i);
            const auto gb = gamma_class(ctx, b, Direction::Forward, 200 + i);
            const auto gab = gamma_class(ctx, a + b, Direction::Forward, 300 + i);
            CHECK(gab == ga + gb);
        }
    }

    TEST_CASE("kernel of gamma") {
        const auto params = rational_params(2, 3, {2, 5});
        const auto p = find_square_prime(params, 41);
        const auto ctx = PairContext::make(build_any_pair(reduce_params(params, Fp(p))));
        const auto r = check_kernel(ctx, 5);
        CHECK(r.ok());
        CHECK(r.nontrivial_sums == 3);
        const auto bad = PairContext::make(pair_at(2, 101, 3, {2, 5}));
        CHECK_THROWS_AS(kernel_generators(bad), Error);
    }

    TEST_CASE("pointwise proposition") {
        const auto ctx = PairContext::make(pair_at(2, 101, 3, {2, 5}));
        Rng rng(8);
        for (int i = 0; i < 20; ++i) {
            const auto P = random_good_point(ctx, rng);
            const auto r = check_point_proposition(ctx, P);
            CHECK(r.matches);
            CHECK(r.image.size() == 4);
        }
    }

    TEST_CASE("pointwise proposition at x = 0") {
        const auto ctx = PairContext::make(pair_at(2, 107, 3, {2, 5}));
        const auto& F = Fp(107);
        const auto r = field_sqrt(ctx.pair.C.f.eval(F.zero()));
        if (!r.empty()) {
            const auto rep = check_point_proposition(ctx, Point{F.zero(), r[0]});
            CHECK(rep.matches);
        }
    }

    TEST_CASE("sqrt 2 family") {
        const auto& F = Fp(101);
        const auto ctx = PairContext::make(build_pair(sqrt2_params(2, F.from_int(3), {F.from_int(2)})));
        const auto r = measure_sqrt2(ctx, 20, 3);
        CHECK(r.roots_match);
        CHECK(r.mult_by_two.ok());
        CHECK(r.observed != SquareRelation::Other);
        CHECK(r.plus_two + r.minus_two >= r.samples);
    }
}
