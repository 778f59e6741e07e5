#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

ZetaFixture fixture(const std::string& name) { return load_fixture(std::string(FORGE_FIXTURE_DIR) + "/" + name + ".json"); }

}  // namespace

TEST_SUITE("jacobian") {
    TEST_CASE("odd model transport") {
        const auto pair = pair_at(2, 101, 3, {2, 5});
        const auto model = to_odd_model(pair.C, pair.v());
        CHECK(model.F().degree() == 5);
        CHECK(model.genus() == 2);
        const auto& F = Fp(101);
        int seen = 0;
        for (int xi = 0; xi < 101 && seen < 10; ++xi) {
            const Fq x = F.from_int(xi);
            const auto r = field_sqrt(pair.C.f.eval(x));
            if (r.empty() || x == pair.v()) continue;
            const auto odd = model.to_odd(x, r[0]);
            REQUIRE(odd.has_value());
            CHECK(odd->second * odd->second == model.F().eval(odd->first));
            const auto back = model.to_even(odd->first, odd->second);
            CHECK(back.first == x);
            CHECK(back.second == r[0]);
            ++seen;
        }
        CHECK_THROWS_AS(to_odd_model(pair.C, F.from_int(4)), Error);
    }

    TEST_CASE("group axioms on 200 random triples") {
        for (const char* name : {"g1_p11", "g2_p101", "g3_p23"}) {
            const auto fx = fixture(name);
            const auto model = to_odd_model(fx.pair.C, fx.pair.v());
            const auto O = DivClass::identity(model.curve());
            for (std::uint64_t i = 0; i < 200; ++i) {
                const auto a = random_class(model, 3 * i), b = random_class(model, 3 * i + 1), c = random_class(model, 3 * i + 2);
                CHECK((a + b) + c == a + (b + c));
                CHECK(a + b == b + a);
                CHECK((a - a).is_identity());
                CHECK(a + O == a);
                CHECK((a + b).is_reduced_valid());
            }
        }
    }

    TEST_CASE("L(1) annihilates classes (orders divide L(1))") {
        const auto fx = fixture("g2_p101");
        REQUIRE(fx.L_C.has_value());
        const Integer N = fx.L_C->at_one();
        CHECK(N == Integer(9600));
        const auto model = to_odd_model(fx.pair.C, fx.pair.v());
        for (std::uint64_t i = 0; i < 100; ++i) {
            const auto d = random_class(model, 1000 + i);
            CHECK(class_scalar_mul(N, d).is_identity());
        }
    }

    TEST_CASE("point classes") {
        const auto fx = fixture("g2_p101");
        const auto model = to_odd_model(fx.pair.C, fx.pair.v());
        Rng rng(4);
        const auto P = random_odd_point(*model.curve(), rng);
        const auto c = odd_point_class(model.curve(), P.first, P.second);
        CHECK(c.weight() == 1);
        CHECK((c + odd_point_class(model.curve(), P.first, -P.second)).is_identity());
        CHECK_THROWS_AS(odd_point_class(model.curve(), P.first, P.second + P.second.one()), Error);
        CHECK(even_point_class(model, fx.pair.v(), fx.pair.v().zero()).is_identity());
        const auto Q = random_odd_point(*model.curve(), rng);
        const auto s = c + odd_point_class(model.curve(), Q.first, Q.second);
        CHECK(s.weight() <= 2);
        CHECK(s.is_reduced_valid());
    }

    TEST_CASE("from_mumford rejects pairs off the curve") {
        const auto fx = fixture("g2_p101");
        const auto model = to_odd_model(fx.pair.C, fx.pair.v());
        const auto& F = Fp(101);
        const FqPoly u = FqPoly::from_ints(F.zero(), {3, 0, 1});
        const FqPoly v = FqPoly::from_ints(F.zero(), {1, 1});
        CHECK_THROWS_AS(DivClass::from_mumford(model.curve(), u, v), Error);
    }

    TEST_CASE("classes on different curves do not mix") {
        const auto f1 = fixture("g2_p101");
        const auto m1 = to_odd_model(f1.pair.C, f1.pair.v());
        const auto ctx = PairContext::make(f1.pair);
        const auto& m2 = ctx.odd_Cprime;
        REQUIRE_FALSE(m1.F() == m2.F());
        CHECK_THROWS_AS(random_class(m1, 1) + random_class(m2, 2), Error);
    }

    TEST_CASE("scalar multiplication matches repeated addition") {
        const auto fx = fixture("g3_p23");
        const auto model = to_odd_model(fx.pair.C, fx.pair.v());
        const auto d = random_class(model, 77);
        auto acc = DivClass::identity(model.curve());
        for (int k = 1; k <= 12; ++k) {
            acc = acc + d;
            CHECK(class_scalar_mul(Integer(k), d) == acc);
        }
        CHECK(class_scalar_mul(Integer(-3), d) == -class_scalar_mul(Integer(3), d));
    }
}
