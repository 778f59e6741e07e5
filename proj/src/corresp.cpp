#include "forge/corresp.hpp"

#include <algorithm>
#include <numeric>

#include "forge/family_ff.hpp"

namespace forge {

PairContext PairContext::make(CurvePair<Fq> pair) {
    OddModel c = to_odd_model(pair.C, pair.v());
    OddModel cp = to_odd_model(pair.Cprime, pair.v());
    return PairContext{std::move(pair), std::move(c), std::move(cp)};
}

namespace {

const HyperCurve<Fq>& source_curve(const CurvePair<Fq>& pair, Direction dir) {
    return dir == Direction::Forward ? pair.C : pair.Cprime;
}
const HyperCurve<Fq>& target_curve(const CurvePair<Fq>& pair, Direction dir) {
    return dir == Direction::Forward ? pair.Cprime : pair.C;
}

}  // namespace

GammaImage gamma_point_raw(const CurvePair<Fq>& pair_in, const Fq& X, const Fq& Y, Direction dir) {
    const FiniteField& K = X.field();
    const CurvePair<Fq> pair = pair_over(pair_in, K);
    const auto& corr = pair.corr;
    const bool fwd = dir == Direction::Forward;
    const Fq& v = pair.v();
    const Fq v2 = v * v;
    const Fq one = K.one();

    const Fq Y_par = Y * (fwd ? corr.source_square : corr.target_square).eval(X);
    if (Y_par.is_zero()) raise(ErrorKind::BadFiber, "parent point has y = 0");
    const Fq X2 = X * X;
    if (X2 == v2) raise(ErrorKind::EmptyFiber, "x = +-v has an empty fiber");
    const FqPoly u(one, {-(v2 * X2 - one) / (X2 - v2), K.zero(), one});
    const FqPoly m = fwd ? corr.M.at_x(X) : corr.M.at_z(X);
    const FqPoly lin(one, {one - X * v, X - v});
    FqPoly w = (m * lin * (v2 + one) * Y_par.inv()) % u;
    const FqPoly& s = fwd ? corr.target_square : corr.source_square;
    if (s.degree() > 0) {
        try {
            w = (w * inv_mod(s, u)) % u;
        } catch (const Error&) {
            raise(ErrorKind::BadFiber, "transport factor vanishes on the fiber");
        }
    }
    return GammaImage{u, w};
}

GammaImage gamma_point(const CurvePair<Fq>& pair_in, const Fq& X, const Fq& Y, Direction dir) {
    const FiniteField& K = X.field();
    const CurvePair<Fq> pair = pair_over(pair_in, K);
    const Fq& v = pair.v();
    const Fq v2 = v * v;
    if (!(Y * Y == source_curve(pair, dir).f.eval(X)))
        raise(ErrorKind::NotOnCurve, "(" + X.to_string() + ", " + Y.to_string() + ") is not on " + source_curve(pair, dir).label);
    if (Y.is_zero()) raise(ErrorKind::WeierstrassPoint, "gamma is not evaluated at Weierstrass points");
    const Fq X2 = X * X;
    if (X2 == v2) raise(ErrorKind::EmptyFiber, "S(+-v, z) = 1 - v^4 has no roots");
    if (X2 * v2 == K.one()) raise(ErrorKind::RamifiedFiber, "x = +-1/v has a ramified fiber");
    GammaImage img = gamma_point_raw(pair, X, Y, dir);
    const FqPoly& f_target = target_curve(pair, dir).f;
    if (!((img.v * img.v - f_target) % img.u).is_zero())
        raise(ErrorKind::SingularResult, "image fails v^2 = f mod u");
    return img;
}

bool is_good_point(const CurvePair<Fq>& pair, const Fq& x, const Fq& y) {
    if (y.is_zero() || x.is_zero()) return false;
    const Fq v2 = lift(pair.v(), x.field()) * lift(pair.v(), x.field());
    const Fq x2 = x * x;
    return !(x2 == v2) && !(x2 * v2 == x.one());
}

Point random_good_point(const PairContext& ctx, Rng& rng, Direction dir) {
    const CurvePair<Fq>& pair = ctx.pair;
    const FiniteField& F = pair.v().field();
    const FqPoly& f = source_curve(pair, dir).f;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const Fq x = F.random(rng);
        auto roots = field_sqrt(f.eval(x), rng.next());
        if (roots.size() != 2) continue;
        const Fq y = rng.coin() ? roots.back() : roots.front();
        if (is_good_point(pair, x, y)) return {x, y};
    }
    raise(ErrorKind::DecompositionFailure, "no good point found");
}

GoodDecomposition decompose_class(const PairContext& ctx, const DivClass& c, Direction dir, std::uint64_t seed, int retries) {
    const OddModel& model = ctx.source(dir);
    const int g = model.genus();
    const std::uint64_t p = ctx.pair.v().characteristic();
    Rng rng(seed);
    for (int attempt = 1; attempt <= retries; ++attempt) {
        std::vector<Point> Q;
        DivClass D = c;
        for (int j = 0; j < g; ++j) {
            Q.push_back(random_good_point(ctx, rng, dir));
            D = D + even_point_class(model, Q.back().first, Q.back().second);
        }
        const FqPoly& u = D.u();
        if (u.degree() != g || !is_squarefree(u) || u.eval(u.zero_element().zero()).is_zero()) continue;
        const auto degrees = factor_degrees(u);
        if (degrees.back() > kMaxSplitDegree) continue;
        int L = 1;
        for (int d : degrees) L = std::lcm(L, d);
        const FiniteField& W = ext_build(p, L);
        const FqPoly uW = lift(u, W), vW = lift(D.v(), W);
        std::vector<Point> T;
        bool good = true;
        for (const Fq& U : roots_in_field(uW)) {
            const Point P = model.to_even(U, vW.eval(U));
            if (!is_good_point(ctx.pair, P.first, P.second)) {
                good = false;
                break;
            }
            T.push_back(P);
        }
        if (!good || static_cast<int>(T.size()) != g) continue;
        return GoodDecomposition{&W, std::move(T), std::move(Q), attempt};
    }
    raise(ErrorKind::DecompositionFailure, "no good decomposition after " + std::to_string(retries) + " attempts");
}

DivClass gamma_class(const PairContext& ctx, const DivClass& c, Direction dir, std::uint64_t seed, int retries) {
    const OddModel& target = ctx.target(dir);
    if (c.is_identity()) return DivClass::identity(target.curve());
    const GoodDecomposition dec = decompose_class(ctx, c, dir, seed, retries);
    const FiniteField& W = *dec.field;
    const CurvePair<Fq> pairW = pair_over(ctx.pair, W);
    DivClass acc = DivClass::identity(target.curve_over(W));
    for (const auto& [x, y] : dec.T) {
        const GammaImage img = gamma_point(pairW, x, y, dir);
        acc = acc + even_mumford_class(target, img.u, img.v);
    }
    for (const auto& [x, y] : dec.Q) {
        const GammaImage img = gamma_point(pairW, lift(x, W), lift(y, W), dir);
        acc = acc - even_mumford_class(target, img.u, img.v);
    }
    auto down = descend(acc, target);
    if (!down) raise(ErrorKind::DecompositionFailure, "image class is not defined over the base field");
    return *down;
}

MultByTwoReport check_mult_by_two(const PairContext& ctx, int trials, std::uint64_t seed) {
    MultByTwoReport rep;
    rep.trials = trials;
    const Rng root(seed);
    for (int t = 0; t < trials; ++t) {
        const Rng rng = root.child(static_cast<std::uint64_t>(t));
        const DivClass c = random_class(ctx.odd_C, rng.child("class").seed());
        const DivClass img = gamma_class(ctx, c, Direction::Forward, rng.child("forward").seed());
        const DivClass back = gamma_class(ctx, img, Direction::Transpose, rng.child("transpose").seed());
        if (back == c + c)
            ++rep.passed;
        else
            rep.failures.push_back("trial " + std::to_string(t) + ": u(c) = " + c.u().to_string());
    }
    return rep;
}

std::vector<DivClass> kernel_generators(const PairContext& ctx) {
    std::vector<DivClass> gens;
    for (std::size_t i = 0; i < ctx.pair.params.a.size(); ++i) {
        const Fq& ai = ctx.pair.params.a[i];
        auto roots = field_sqrt(ai);
        if (roots.size() != 2)
            raise(ErrorKind::PrimeUnsuitable, "a" + std::to_string(i + 1) + " = " + ai.to_string() + " is not a square");
        const Fq zero = ai.zero();
        gens.push_back(point_class(ctx.odd_C, {roots.front(), zero}, {roots.back(), zero}));
    }
    return gens;
}

bool KernelReport::ok() const {
    const bool gens = std::all_of(generator_nonzero.begin(), generator_nonzero.end(), [](bool b) { return b; });
    const bool imgs = std::all_of(image_is_identity.begin(), image_is_identity.end(), [](bool b) { return b; });
    return g > 0 && gens && imgs && nontrivial_sums == (1 << g) - 1 && nontrivial_sums_nonzero == nontrivial_sums;
}

KernelReport check_kernel(const PairContext& ctx, std::uint64_t seed) {
    KernelReport rep;
    rep.g = ctx.pair.genus();
    const auto gens = kernel_generators(ctx);
    for (const auto& e : gens) rep.generator_nonzero.push_back(!e.is_identity());
    for (unsigned mask = 1; mask < (1u << gens.size()); ++mask) {
        DivClass s = DivClass::identity(ctx.odd_C.curve());
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (mask & (1u << i)) s = s + gens[i];
        ++rep.nontrivial_sums;
        if (!s.is_identity()) ++rep.nontrivial_sums_nonzero;
    }
    const Rng root(seed);
    for (std::size_t i = 0; i < gens.size(); ++i)
        rep.image_is_identity.push_back(gamma_class(ctx, gens[i], Direction::Forward, root.child(i).seed()).is_identity());
    return rep;
}

PropositionReport check_point_proposition(const PairContext& ctx, const Point& P) {
    PropositionReport rep;
    rep.P = P;
    const auto& [X, Y] = P;
    const FiniteField& K = X.field();
    const FiniteField& W = ext_build(K.characteristic(), 2 * K.degree());
    const CurvePair<Fq> pairW = pair_over(ctx.pair, W);
    const Fq XW = lift(X, W), YW = lift(Y, W);
    const Fq v = pairW.v();
    const Fq inv_v2 = (v * v).inv();

    const GammaImage img = gamma_point(pairW, XW, YW, Direction::Forward);
    for (const Fq& z : roots_in_field(img.u)) {
        const Fq t = img.v.eval(z);
        if (t.is_zero()) {
            // A Weierstrass image: its fiber is stable under w, so it is {P, w(P)}.
            if (!XW.is_zero()) raise(ErrorKind::BadFiber, "Weierstrass point in the image of a point with x != 0");
            rep.image.push_back({XW, YW});
            rep.image.push_back({XW, -YW});
            continue;
        }
        if (z * z == inv_v2) {
            if (!XW.is_zero()) raise(ErrorKind::BadFiber, "ramified fiber in the image of a point with x != 0");
            const GammaImage back = gamma_point_raw(pairW, z, t, Direction::Transpose);
            const Fq y0 = back.v.eval(W.zero());
            rep.image.push_back({W.zero(), y0});
            rep.image.push_back({W.zero(), y0});
            continue;
        }
        const GammaImage back = gamma_point(pairW, z, t, Direction::Transpose);
        for (const Fq& x : roots_in_field(back.u)) rep.image.push_back({x, back.v.eval(x)});
    }
    if (rep.image.size() != 4) {
        rep.detail = "image has " + std::to_string(rep.image.size()) + " points";
        return rep;
    }
    std::vector<Point> rest;
    int copies = 0;
    for (const auto& pt : rep.image) {
        if (pt.first == XW && pt.second == YW && copies < 2)
            ++copies;
        else
            rest.push_back(pt);
    }
    if (copies != 2) {
        rep.detail = "P occurs " + std::to_string(copies) + " times";
        return rep;
    }
    const bool abscissa = rest[0].first == -XW && rest[1].first == -XW;
    const bool conjugate = rest[0].second == -rest[1].second;
    const bool on_curve = rest[0].second * rest[0].second == pairW.C.f.eval(-XW);
    rep.matches = abscissa && conjugate && on_curve;
    if (!rep.matches) rep.detail = "remaining points are not {P1, w(P1)} with x(P1) = -x(P)";
    return rep;
}

std::string to_string(SquareRelation r) {
    switch (r) {
        case SquareRelation::PlusTwo: return "psi^2 = [2]";
        case SquareRelation::MinusTwo: return "psi^2 = [-2]";
        case SquareRelation::Other: break;
    }
    return "psi^2 differs from +-[2]";
}

Sqrt2Report measure_sqrt2(const PairContext& ctx, int trials, std::uint64_t seed) {
    Sqrt2Report rep;
    const CurvePair<Fq>& pair = ctx.pair;
    rep.roots_match = pair.C.f.monic() == pair.Cprime.f.monic();
    auto sqrtA = field_sqrt(pair.A);
    rep.A_is_square = !sqrtA.empty();
    if (!rep.roots_match) raise(ErrorKind::InvalidArgument, "C and C' have different root sets");
    if (!rep.A_is_square) raise(ErrorKind::PrimeUnsuitable, "A is not a square; C' is only a twist of C");
    const Fq s = sqrtA.front();
    // Odd models at the same anchor differ by the constant A.
    if (!(ctx.odd_C.F() == ctx.odd_Cprime.F() * pair.A)) raise(ErrorKind::SingularResult, "odd models are not related by A");
    auto iota = [&](const DivClass& d) { return DivClass::from_mumford(ctx.odd_C.curve(), d.u(), d.v() * s); };

    const Rng root(seed);
    rep.mult_by_two = check_mult_by_two(ctx, trials, root.child("mult").seed());
    bool all_plus = true, all_minus = true;
    for (int t = 0; t < trials; ++t) {
        const Rng rng = root.child(static_cast<std::uint64_t>(t));
        const DivClass c = random_class(ctx.odd_C, rng.child("class").seed());
        const DivClass once = iota(gamma_class(ctx, c, Direction::Forward, rng.child("first").seed()));
        const DivClass twice = iota(gamma_class(ctx, once, Direction::Forward, rng.child("second").seed()));
        const DivClass two_c = c + c;
        const bool plus = twice == two_c;
        const bool minus = twice == -two_c;
        rep.plus_two += plus;
        rep.minus_two += minus;
        all_plus = all_plus && plus;
        all_minus = all_minus && minus;
        ++rep.samples;
    }
    rep.observed = all_plus ? SquareRelation::PlusTwo : all_minus ? SquareRelation::MinusTwo : SquareRelation::Other;
    return rep;
}

}  // namespace forge
