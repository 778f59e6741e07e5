#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

TEST_SUITE("identities") {
    TEST_CASE("printed base identities fail by twice the S-term") {
        const auto r = verify_base_identities();
        CHECK_FALSE(r.passed);
        REQUIRE(r.parts.size() == 4);
        CHECK_FALSE(r.parts[0].passed);
        CHECK_FALSE(r.parts[1].passed);
        CHECK(r.parts[2].passed);
        CHECK(r.parts[3].passed);
    }

    TEST_CASE("sign-flipped identities hold (independent expansion)") {
        const auto P = base_identity_polys();
        const auto& vars = P.vars;
        const MPolyZ one = MPolyZ::constant(vars, Integer(1));
        const MPolyZ v = MPolyZ::variable(vars, "v"), x = MPolyZ::variable(vars, "x"), z = MPolyZ::variable(vars, "z");
        const MPolyZ S = x * x * z * z - v * v * (x * x + z * z) + one;
        CHECK(S == P.S);
        const MPolyZ L = one - x * v - z * v + x * z;
        // (v^2 - 1) S = 2 p0(x) q0(z) - (v^2 + 1) L^2
        CHECK(mpoly_expand_equal((v * v - one) * S, Integer(2) * P.p0x * P.q0z - (v * v + one) * L * L));
        // The printed form differs by 2 (v^2 - 1) S.
        const MPolyZ printed = (one - v * v) * S - (Integer(2) * P.p0x * P.q0z - (v * v + one) * L * L);
        CHECK(mpoly_expand_equal(printed, Integer(2) * (one - v * v) * S));
    }

    TEST_CASE("numeric specialization at (2, 5, 3, 7, 11) in F_101") {
        const auto P = base_identity_polys();
        const auto& F = Fp(101);
        std::vector<Fq> pt;
        for (const auto& name : P.vars) {
            const long val = name == "a1" ? 2 : name == "a2" ? 5 : name == "v" ? 3 : name == "x" ? 7 : 11;
            pt.push_back(F.from_int(val));
        }
        const Fq S = P.S.evaluate(pt);
        const Fq v = F.from_int(3), x = F.from_int(7), z = F.from_int(11);
        const Fq L = F.one() - x * v - z * v + x * z;
        const Fq rhs = F.from_int(2) * P.p0x.evaluate(pt) * P.q0z.evaluate(pt) - (v * v + F.one()) * L * L;
        CHECK((v * v - F.one()) * S == rhs);
        CHECK_FALSE(S.is_zero());
        CHECK_FALSE((F.one() - v * v) * S == rhs);
    }

    TEST_CASE("M-congruence exact and sampled") {
        CHECK(verify_M_congruence_exact().passed);
        CHECK(verify_M_congruence(2, 10007, 40, 1).passed);
        CHECK(verify_M_congruence(4, 10007, 40, 2).passed);
        CHECK_THROWS_AS(verify_M_congruence(3, 10007, 5, 1), Error);
    }

    TEST_CASE("gamma consistency and mutation detection") {
        CHECK(verify_gamma_consistency(2, 10007, 40, 3).passed);
        CHECK(verify_gamma_consistency(4, 10007, 40, 4).passed);
        const auto bad_A = verify_gamma_consistency(2, 10007, 40, 3, [](CurvePair<Fq>& p) { p.A = p.A + p.A.one(); });
        CHECK_FALSE(bad_A.passed);
        CHECK_FALSE(bad_A.witness.empty());
        const auto bad_a = verify_gamma_consistency(2, 10007, 40, 3, [](CurvePair<Fq>& p) {
            p.C_thm.f = p.C_thm.f * FqPoly::linear_root(p.A.one() + p.A.one());
        });
        CHECK_FALSE(bad_a.passed);
    }

    TEST_CASE("evaluation off the variety is flagged") {
        const auto pair = pair_at(2, 10007, 3, {2, 5});
        const auto& F = Fp(10007);
        const Fq x = F.from_int(7), z = F.from_int(11);
        REQUIRE_FALSE(pair.S.eval(x, z).is_zero());
        CHECK(check_point(pair, x, z).misuse());
        Rng rng(3);
        const auto s = sample_variety(pair, rng);
        CHECK(s.pair.S.eval(s.x0, s.z0).is_zero());
        const auto pc = check_point(s.pair, s.x0, s.z0);
        CHECK_FALSE(pc.misuse());
        CHECK(pc.congruence_holds);
        CHECK(pc.gamma_holds);
    }
}
