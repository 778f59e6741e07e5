#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

std::array<Rational, 6> Q6(std::initializer_list<const char*> xs) {
    std::array<Rational, 6> out;
    std::size_t i = 0;
    for (const char* s : xs) out[i++] = Rational::parse(s);
    return out;
}

/// LHS and RHS of the criterion by direct summation over index triples.
std::pair<long, long> sides(const std::array<long, 6>& a) {
    auto t = [&](int i, int j, int k) { return a[i - 1] * a[j - 1] * a[k - 1]; };
    const long lhs = t(6, 5, 3) + t(6, 5, 4) + t(6, 2, 1) + t(5, 2, 1) + t(1, 4, 3) + t(2, 4, 3);
    const long rhs = t(6, 5, 1) + t(6, 5, 2) + t(6, 4, 3) + t(5, 4, 3) + t(2, 1, 3) + t(2, 1, 4);
    return {lhs, rhs};
}

}  // namespace

TEST_SUITE("moduli") {
    TEST_CASE("criterion examples") {
        CHECK(involution_criterion(Q6({"1", "-1", "2", "-2", "3", "-3"})));
        CHECK_FALSE(involution_criterion(Q6({"0", "1", "2", "3", "4", "5"})));
        CHECK(sides({0, 1, 2, 3, 4, 5}) == std::pair<long, long>{106, 74});
        CHECK(criterion_defect(Q6({"0", "1", "2", "3", "4", "5"})) == Rational(32));
        CHECK(involution_criterion(Q6({"2", "1/2", "3", "1/3", "5", "1/5"})));
        CHECK_THROWS_AS(involution_criterion(Q6({"1", "1", "2", "3", "4", "5"})), Error);
    }

    TEST_CASE("pairing involution examples") {
        const auto neg = pairing_involution(Q6({"1", "-1", "2", "-2", "3", "-3"}));
        REQUIRE(neg.exists);
        CHECK(*neg.involution == Homography<Rational>(Rational(1), Rational(0), Rational(0), Rational(-1)));
        const auto inv = pairing_involution(Q6({"2", "1/2", "3", "1/3", "5", "1/5"}));
        REQUIRE(inv.exists);
        CHECK(*inv.involution == Homography<Rational>(Rational(0), Rational(1), Rational(1), Rational(0)));
        CHECK(inv.involution->is_involution());
        const auto none = pairing_involution(Q6({"0", "1", "2", "3", "4", "5"}));
        CHECK_FALSE(none.exists);
        CHECK_FALSE(none.determinant.is_zero());
    }

    TEST_CASE("determinant is +-(LHS - RHS) on integer tuples") {
        Rng rng(3);
        for (int i = 0; i < 200; ++i) {
            std::array<long, 6> a;
            std::array<Rational, 6> q;
            for (std::size_t j = 0; j < 6; ++j) {
                a[j] = static_cast<long>(rng.below(41)) - 20;
                q[j] = Rational(a[j]);
            }
            bool distinct = true;
            for (std::size_t j = 0; j < 6; ++j)
                for (std::size_t k = 0; k < j; ++k) distinct = distinct && a[j] != a[k];
            if (!distinct) continue;
            const auto [l, r] = sides(a);
            const auto rep = pairing_involution(q);
            CHECK((rep.determinant == Rational(l - r) || rep.determinant == Rational(r - l)));
        }
    }

    TEST_CASE("criterion symmetries on 100 tuples") {
        const auto& F = Fp(10007);
        Rng rng(21);
        for (int i = 0; i < 100; ++i) {
            const auto t = (i % 2) ? random_involution_tuple(F, rng) : [&] {
                std::array<Fq, 6> u;
                for (auto& x : u) x = F.from_u64(rng.below(10007));
                return u;
            }();
            bool distinct = true;
            for (std::size_t j = 0; j < 6; ++j)
                for (std::size_t k = 0; k < j; ++k) distinct = distinct && !(t[j] == t[k]);
            if (!distinct) continue;
            const bool base = involution_criterion(t);
            auto s = t;
            std::swap(s[0], s[1]);
            CHECK(involution_criterion(s) == base);
            s = t;
            std::swap(s[2], s[4]);
            std::swap(s[3], s[5]);
            CHECK(involution_criterion(s) == base);
            s = t;
            std::rotate(s.begin(), s.begin() + 2, s.end());
            CHECK(involution_criterion(s) == base);
        }
    }

    TEST_CASE("homography basics") {
        const auto& F = Fp(101);
        const Homography<Fq> h(F.from_int(2), F.from_int(3), F.from_int(5), F.from_int(7));
        CHECK(h.a().is_one());
        CHECK(h.compose(h.inverse()).is_identity());
        CHECK(h(ProjPoint<Fq>::infinity(F.zero())) == ProjPoint<Fq>::finite(F.from_int(2) / F.from_int(5)));
        CHECK(h(ProjPoint<Fq>::finite(-F.from_int(7) / F.from_int(5))).infinite);
        CHECK_THROWS_AS(Homography<Fq>(F.one(), F.one(), F.one(), F.one()), Error);
    }

    TEST_CASE("normalization of an already normalized set") {
        std::array<ProjPoint<Rational>, 6> P;
        const auto vals = Q6({"3", "-3", "5", "-5", "2", "1/2"});
        for (std::size_t i = 0; i < 6; ++i) P[i] = ProjPoint<Rational>::finite(vals[i]);
        const auto n = normalize_genus2(P);
        CHECK(has_normal_pattern(n.images, n.v, n.x1, n.x2));
        const Rational o(1), z;
        const std::array<Homography<Rational>, 4> stab{Homography<Rational>(o, z, z, o), Homography<Rational>(-o, z, z, o),
                                                       Homography<Rational>(z, o, o, z), Homography<Rational>(z, -o, o, z)};
        bool in_coset = false;
        for (const auto& s : stab) in_coset = in_coset || n.h == s;
        CHECK(in_coset);
    }

    TEST_CASE("normalization over F_101 with infinity") {
        const auto& F = Fp(101);
        std::array<ProjPoint<Fq>, 6> P{ProjPoint<Fq>::finite(F.from_int(1)), ProjPoint<Fq>::infinity(F.zero()),
                                       ProjPoint<Fq>::finite(F.from_int(7)), ProjPoint<Fq>::finite(F.from_int(9)),
                                       ProjPoint<Fq>::finite(F.from_int(4)), ProjPoint<Fq>::finite(F.from_int(12))};
        const auto n = normalize_genus2_ff(P);
        CHECK(has_normal_pattern(n.images, n.v, n.x1, n.x2));
        CHECK(n.images[5] * n.v == n.v.one());
    }

    TEST_CASE("degenerate inputs") {
        const auto& F = Fp(101);
        std::array<ProjPoint<Fq>, 6> P{ProjPoint<Fq>::finite(F.from_int(1)), ProjPoint<Fq>::finite(F.from_int(2)),
                                       ProjPoint<Fq>::finite(F.from_int(5)), ProjPoint<Fq>::finite(F.from_int(5)),
                                       ProjPoint<Fq>::finite(F.from_int(8)), ProjPoint<Fq>::finite(F.from_int(9))};
        try {
            normalize_genus2_ff(P);
            FAIL("expected SpecialPosition");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::SpecialPosition);
        }
        // P5 fixed by u = -x.
        std::array<ProjPoint<Rational>, 6> Q;
        const auto vals = Q6({"3", "-3", "5", "-5", "0", "7"});
        for (std::size_t i = 0; i < 6; ++i) Q[i] = ProjPoint<Rational>::finite(vals[i]);
        CHECK_THROWS_AS(normalize_genus2(Q), Error);
    }

    TEST_CASE("batteries") {
        CHECK(run_criterion_battery(10007, 100, 100, 500, 1).ok());
        const auto n = run_normalization_battery(101, 50, 2);
        CHECK(n.ok());
        CHECK(n.stabilizer_ok == 50);
    }
}
