#include "doctest.h"
#include "helpers.hpp"
#include "forge/rng.hpp"

using namespace testing;

TEST_SUITE("algebra") {
    TEST_CASE("prime field inverse and square roots") {
        CHECK(field_inv(Fp(101).from_int(3)) == Fp(101).from_int(34));
        CHECK_THROWS_AS(field_inv(Fp(101).zero()), Error);
        CHECK(as_set(field_sqrt(Fp(13).from_int(4))) == std::set<std::uint64_t>{2, 11});
        CHECK(field_sqrt(Fp(5).from_int(2)).empty());
        CHECK(as_set(field_sqrt(Fp(7).from_int(2))) == std::set<std::uint64_t>{3, 4});
        CHECK(field_sqrt(Fp(7).zero()).size() == 1);
    }

    TEST_CASE("square roots agree with exhaustive search") {
        const auto& F = Fp(103);
        for (std::uint64_t a = 0; a < 103; ++a) {
            std::set<std::uint64_t> brute;
            for (std::uint64_t r = 0; r < 103; ++r)
                if ((r * r) % 103 == a) brute.insert(r);
            CHECK(as_set(field_sqrt(F.from_u64(a))) == brute);
        }
    }

    TEST_CASE("extension field arithmetic") {
        const auto& W = ext_build(101, 3);
        CHECK(W.degree() == 3);
        Rng rng(5);
        const Integer q = W.order();
        for (int i = 0; i < 50; ++i) {
            const Fq a = W.random(rng);
            if (a.is_zero()) continue;
            CHECK((a * a.inv()).is_one());
            CHECK(a.pow(q - 1).is_one());
            CHECK(a.frobenius().frobenius().frobenius() == a);
            const Fq b = W.random(rng);
            CHECK((a + b) * (a - b) == a * a - b * b);
            CHECK(W.element_at(W.index_of(a)) == a);
            CHECK(a.in_prime_field() == (a.frobenius() == a));
            const auto r = field_sqrt(a * a);
            REQUIRE(r.size() == 2);
            CHECK(r[0] * r[0] == a * a);
        }
        CHECK_THROWS_AS(FiniteField::extension(101, 7), Error);
    }

    TEST_CASE("rationals") {
        const Rational a = Rational::parse("3/4"), b = Rational::parse("-5/6");
        CHECK(a + b == Rational::parse("-1/12"));
        CHECK(a * b == Rational::parse("-5/8"));
        CHECK((a / b) == Rational::parse("-9/10"));
        CHECK_THROWS_AS(Rational().inv(), Error);
        CHECK(Fp(101).from_rational(Rational::parse("1/2")) == Fp(101).from_int(51));
        CHECK_THROWS_AS(Fp(7).from_rational(Rational::parse("1/7")), Error);
    }

    TEST_CASE("univariate division, gcd, squarefreeness") {
        const auto& F = Fp(101);
        const FqPoly a = FqPoly::from_ints(F.zero(), {5, 0, 3, 1, 7});
        const FqPoly b = FqPoly::from_ints(F.zero(), {1, 2, 1});
        const auto [q, r] = FqPoly::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        const FqPoly x1 = FqPoly::linear_root(F.from_int(1));
        const FqPoly x2 = FqPoly::linear_root(F.from_int(-2));
        CHECK(gcd(x1 * x1 * x2, x1 * FqPoly::linear_root(F.from_int(9))) == x1);
        CHECK_FALSE(is_squarefree(x1 * x1 * x2));
        CHECK(is_squarefree(x1 * x2));
        const FqPoly m = x1 * x2 * FqPoly::linear_root(F.from_int(4));
        const FqPoly inv = inv_mod(b, m);
        CHECK((inv * b % m).is_one());
    }

    TEST_CASE("taylor shift and reversal") {
        const auto& F = Fp(13);
        const FqPoly f = FqPoly::from_ints(F.zero(), {1, 2, 0, 5});
        const Fq r = F.from_int(3);
        const FqPoly g = f.taylor_shift(r);
        for (int x = 0; x < 13; ++x) CHECK(g.eval(F.from_int(x)) == f.eval(F.from_int(x) + r));
        const FqPoly rev = f.reversed(3);
        for (int x = 1; x < 13; ++x) {
            const Fq X = F.from_int(x);
            CHECK(rev.eval(X) == X.pow(std::uint64_t{3}) * f.eval(X.inv()));
        }
    }

    TEST_CASE("roots and factor degrees over a prime field") {
        const auto& F = Fp(7);
        const FqPoly f = FqPoly::linear_root(F.from_int(2)) * FqPoly::linear_root(F.from_int(5)) * FqPoly::from_ints(F.zero(), {1, 0, 1});
        CHECK(as_set(roots_in_field(f)) == std::set<std::uint64_t>{2, 5});
        auto degs = factor_degrees(f);
        std::sort(degs.begin(), degs.end());
        CHECK(degs == std::vector<int>{1, 1, 2});
        CHECK(is_irreducible(FqPoly::from_ints(F.zero(), {1, 0, 1})));
        const auto ext = upoly_roots_in_ext(f, 2);
        CHECK(ext.size() == 4);
        for (const auto& r : ext) CHECK(lift(f, r.root.field()).eval(r.root).is_zero());
    }

    TEST_CASE("field embedding is a ring map") {
        const auto& F2 = ext_build(11, 2);
        const auto& F4 = ext_build(11, 4);
        const FieldEmbedding e(F2, F4);
        Rng rng(9);
        for (int i = 0; i < 30; ++i) {
            const Fq a = F2.random(rng), b = F2.random(rng);
            CHECK(e(a * b) == e(a) * e(b));
            CHECK(e(a + b) == e(a) + e(b));
        }
    }

    TEST_CASE("sparse multivariate polynomials") {
        const std::vector<std::string> vars{"x", "y"};
        const MPolyZ x = MPolyZ::variable(vars, "x"), y = MPolyZ::variable(vars, "y");
        const MPolyZ s = (x + y).pow(2);
        CHECK(s.term_count() == 3);
        CHECK(mpoly_expand_equal(s, x * x + Integer(2) * x * y + y * y));
        CHECK(s.evaluate(std::vector<Integer>{Integer(3), Integer(-5)}) == Integer(4));
        CHECK(s.swap_variables(0, 1) == s);
        CHECK((x - y).swap_variables(0, 1) == y - x);
        // (x^2 - y^2) has remainder 0 modulo (x - y) in x.
        CHECK(pseudo_remainder(x * x - y * y, x - y, 0).is_zero());
        const auto coeffs = s.coefficients_in(0);
        CHECK(MPolyZ::from_coefficients(coeffs, 0) == s);
        CHECK_THROWS_AS(x + MPolyZ::variable({"x", "z"}, "z"), Error);
        CHECK(mpoly_from_json(to_json(s)) == s);
    }

    TEST_CASE("seeded generator") {
        Rng a(42), b(42);
        for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
        CHECK(Rng(1).child("x").seed() == Rng(1).child("x").seed());
        CHECK(Rng(1).child("x").seed() != Rng(1).child("y").seed());
    }
}
