#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

bool mentions(const DegenerateParamsError& e, const std::string& what) {
    for (const auto& c : e.conditions())
        if (c == what) return true;
    return false;
}

template <class F>
DegenerateParamsError degenerate(F&& f) {
    try {
        f();
    } catch (const DegenerateParamsError& e) {
        return e;
    }
    FAIL("expected DegenerateParamsError");
    return DegenerateParamsError({});
}

}  // namespace

TEST_SUITE("family") {
    TEST_CASE("b map values") {
        CHECK(b_map(Rational(3), Rational(2)) == Rational(-11));
        CHECK(b_map(Fp(101).from_int(2), Fp(101).from_int(3)) == Fp(101).from_int(12));
        CHECK_THROWS_AS(b_map(Rational(4), Rational(2)), Error);
    }

    TEST_CASE("b map is an involution") {
        const auto& F = Fp(1009);
        const Fq v = F.from_int(7);
        for (int a = 0; a < 200; ++a) {
            const Fq A = F.from_int(a);
            if (A == v * v) continue;
            const Fq b = b_map(A, v);
            if (b == v * v) continue;
            CHECK(b_map(b, v) == A);
        }
    }

    TEST_CASE("validation reports every violation") {
        auto e = degenerate([] { rational_params(2, 1, {2, 5}); });
        CHECK(mentions(e, "v^4 = 1"));
        e = degenerate([] { rational_params(2, 3, {2, 2}); });
        CHECK(mentions(e, "a1 = a2"));
        e = degenerate([] { rational_params(3, 2, {1, 3, 4}); });
        CHECK(mentions(e, "a3 = v^2"));
        e = degenerate([] { rational_params(2, 0, {2, 5}); });
        CHECK(mentions(e, "v = 0"));
        CHECK_NOTHROW(rational_params(2, 3, {2, 5}));
    }

    TEST_CASE("even pair matches the defining products") {
        const auto pair = pair_at(2, 101, 3, {2, 5});
        const auto& F = Fp(101);
        const Fq v = F.from_int(3), a1 = F.from_int(2), a2 = F.from_int(5);
        auto p0 = [&](const Fq& x) { return (x - v) * (v * x - F.one()); };
        const Fq A = F.from_int(2) * (v * v + F.one()) * (v * v - a1) * (v * v - a2);
        CHECK(pair.A == A);
        CHECK(pair.b[0] == F.from_int(12));
        for (int xi = 0; xi < 101; ++xi) {
            const Fq x = F.from_int(xi);
            CHECK(pair.C.f.eval(x) == A * p0(x) * (x * x - a1) * (x * x - a2));
        }
        CHECK(pair.C.genus == 2);
        CHECK(pair.Cprime.genus == 2);
        CHECK(is_squarefree(pair.Cprime.f));
    }

    TEST_CASE("S is symmetric and M is separable") {
        const auto pair = pair_at(4, 1009, 3, {2, 5, 7, 11});
        const auto& F = Fp(1009);
        Rng rng(1);
        for (int i = 0; i < 20; ++i) {
            const Fq x = F.random(rng), z = F.random(rng);
            CHECK(pair.S.eval(x, z) == pair.S.eval(z, x));
        }
        // Separable M has rank one: M(x,z) M(x',z') = M(x,z') M(x',z).
        for (int i = 0; i < 20; ++i) {
            const Fq x = F.random(rng), z = F.random(rng), x2 = F.random(rng), z2 = F.random(rng);
            CHECK(pair.M.eval(x, z) * pair.M.eval(x2, z2) == pair.M.eval(x, z2) * pair.M.eval(x2, z));
        }
    }

    TEST_CASE("odd genus through the parent pair") {
        for (int g : {1, 3}) {
            std::vector<long> a{2, 5, 7};
            a.resize(static_cast<std::size_t>(g));
            const auto pair = pair_at(g, 101, 3, a);
            CHECK(pair.C.genus == g);
            CHECK(pair.Cprime.genus == g);
            CHECK(pair.corr.genus == g + 1);
        }
        CHECK_THROWS_AS(build_pair(reduce_params(rational_params(3, 3, {2, 5, 7}), Fp(101))), Error);
    }

    TEST_CASE("sqrt 2 family has equal root sets") {
        const auto& F = Fp(101);
        const auto params = sqrt2_params(2, F.from_int(3), {F.from_int(2)});
        const auto pair = build_pair(params);
        CHECK(pair.Cprime.f * pair.A == pair.C.f);
        CHECK_THROWS_AS(sqrt2_params(3, F.from_int(3), {F.from_int(2)}), Error);
    }

    TEST_CASE("seeded parameter draws are reproducible") {
        Rng r1(17), r2(17);
        const auto a = random_pair_params(2, Fp(10007), r1);
        const auto b = random_pair_params(2, Fp(10007), r2);
        CHECK(a.v == b.v);
        CHECK(a.a == b.a);
    }
}
