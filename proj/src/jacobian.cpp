#include "forge/jacobian.hpp"

namespace forge {

OddModel to_odd_model(const HyperCurve<Fq>& curve, const Fq& r) {
    if (curve.genus < 1) raise(ErrorKind::InvalidArgument, "odd model needs genus >= 1");
    if (!curve.f.eval(r).is_zero()) raise(ErrorKind::NotARoot, r.to_string() + " is not a root of " + curve.f.to_string());
    const int g = curve.genus;
    FqPoly F = curve.f.taylor_shift(r).reversed(2 * g + 2);
    if (F.degree() != 2 * g + 1 || !is_squarefree(F))
        raise(ErrorKind::SingularResult, "odd model " + F.to_string() + " is singular");
    return OddModel(curve, r, std::make_shared<const OddCurve>(OddCurve{std::move(F), g}));
}

OddCurveRef OddModel::curve_over(const FiniteField& W) const {
    if (&curve_->field() == &W) return curve_;
    return std::make_shared<const OddCurve>(OddCurve{lift(curve_->F, W), curve_->genus});
}

std::optional<std::pair<Fq, Fq>> OddModel::to_odd(const Fq& x, const Fq& y) const {
    const Fq r = lift(r_, x.field());
    if (x == r) return std::nullopt;
    const Fq U = (x - r).inv();
    return std::make_pair(U, y * U.pow(static_cast<std::uint64_t>(genus() + 1)));
}

std::pair<Fq, Fq> OddModel::to_even(const Fq& U, const Fq& Y) const {
    if (U.is_zero()) raise(ErrorKind::InvalidArgument, "U = 0 maps to infinity on the even model");
    const Fq Ui = U.inv();
    return {lift(r_, U.field()) + Ui, Y * Ui.pow(static_cast<std::uint64_t>(genus() + 1))};
}

// ---------------------------------------------------------------------------

DivClass DivClass::identity(OddCurveRef curve) {
    const Fq one = curve->field().one();
    return DivClass(curve, FqPoly::constant(one), FqPoly(one));
}

DivClass DivClass::reduce(OddCurveRef curve, FqPoly u, FqPoly v) {
    const FqPoly& F = curve->F;
    v = v % u;
    while (u.degree() > curve->genus) {
        FqPoly u2 = (F - v * v) / u;
        v = (-v) % u2;
        u = std::move(u2);
    }
    u = u.monic();
    v = v % u;
    return DivClass(std::move(curve), std::move(u), std::move(v));
}

DivClass DivClass::from_mumford(OddCurveRef curve, FqPoly u, FqPoly v) {
    if (u.is_zero()) raise(ErrorKind::InvalidArgument, "Mumford u = 0");
    u = u.monic();
    if (!((v * v - curve->F) % u).is_zero()) raise(ErrorKind::InvalidArgument, "u does not divide v^2 - F");
    return reduce(std::move(curve), std::move(u), std::move(v));
}

bool DivClass::is_reduced_valid() const {
    if (u_.is_zero() || !u_.lead().is_one()) return false;
    if (u_.degree() == 0) return v_.is_zero();
    if (u_.degree() > curve_->genus || v_.degree() >= u_.degree()) return false;
    return ((v_ * v_ - curve_->F) % u_).is_zero();
}

DivClass DivClass::operator-() const { return DivClass(curve_, u_, (-v_) % u_); }

DivClass cantor_add(const DivClass& a, const DivClass& b) {
    if (!(*a.curve_ == *b.curve_)) raise(ErrorKind::CurveMismatch, "classes live on different curves");
    if (a.is_identity()) return b;
    if (b.is_identity()) return a;
    const FqPoly& u1 = a.u_;
    const FqPoly& u2 = b.u_;
    const FqPoly& v1 = a.v_;
    const FqPoly& v2 = b.v_;
    auto [d1, e1, e2] = xgcd(u1, u2);
    FqPoly d = d1, s1 = e1, s2 = e2, s3(d1.zero_element());
    if (d1.degree() > 0) {
        auto [dd, c1, c2] = xgcd(d1, v1 + v2);
        d = dd;
        s1 = c1 * e1;
        s2 = c1 * e2;
        s3 = c2;
    }
    const FqPoly u = (u1 * u2) / (d * d);
    const FqPoly v = ((s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + a.curve_->F)) / d) % u;
    return DivClass::reduce(a.curve_, u, v);
}

DivClass class_scalar_mul(const Integer& n, const DivClass& d) {
    DivClass acc = DivClass::identity(d.curve());
    const DivClass base = n < 0 ? -d : d;
    const Integer m = abs(n);
    const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = acc + acc;
        if (mpz_tstbit(m.get_mpz_t(), i)) acc = acc + base;
    }
    return acc;
}

DivClass odd_point_class(const OddCurveRef& curve, const Fq& U, const Fq& Y) {
    if (!(Y * Y == curve->F.eval(U))) raise(ErrorKind::NotOnCurve, "(" + U.to_string() + ", " + Y.to_string() + ") is not on the odd model");
    return DivClass::from_mumford(curve, FqPoly::linear_root(U), FqPoly::constant(Y));
}

DivClass even_point_class(const OddModel& model, const Fq& x, const Fq& y) {
    const FiniteField& K = x.field();
    if (!(y * y == lift(model.source().f, K).eval(x)))
        raise(ErrorKind::NotOnCurve, "(" + x.to_string() + ", " + y.to_string() + ") is not on " + model.source().label);
    const auto odd = model.to_odd(x, y);
    if (!odd) return DivClass::identity(model.curve_over(K));
    return odd_point_class(model.curve_over(K), odd->first, odd->second);
}

DivClass point_class(const OddModel& model, const std::pair<Fq, Fq>& P, const std::pair<Fq, Fq>& Q) {
    return even_point_class(model, P.first, P.second) - even_point_class(model, Q.first, Q.second);
}

DivClass even_mumford_class(const OddModel& model, const FqPoly& u_in, const FqPoly& v_in) {
    const FiniteField& K = u_in.zero_element().field();
    const OddCurveRef curve = model.curve_over(K);
    const int g = model.genus();
    const Fq r = lift(model.anchor(), K);
    FqPoly u = u_in.monic();
    FqPoly v = v_in % u;
    // The anchor (r, 0) is the odd model's point at infinity.
    while (u.degree() > 0 && u.eval(r).is_zero()) {
        u = u / FqPoly::linear_root(r);
        v = v % u;
    }
    const int d = u.degree();
    if (d == 0) return DivClass::identity(curve);
    if (d - 1 > g + 1) raise(ErrorKind::InvalidArgument, "even-model divisor of too large degree");
    const FqPoly u_odd = u.taylor_shift(r).reversed(d).monic();
    const FqPoly v_rev = v.taylor_shift(r).reversed(d - 1);
    const FqPoly V = (v_rev * FqPoly::monomial(K.one(), g + 2 - d)) % u_odd;
    return DivClass::from_mumford(curve, u_odd, V);
}

std::pair<Fq, Fq> random_odd_point(const OddCurve& curve, Rng& rng) {
    const FiniteField& K = curve.field();
    for (;;) {
        const Fq U = K.random(rng);
        const Fq w = curve.F.eval(U);
        auto roots = field_sqrt(w, rng.next());
        if (roots.empty()) continue;
        return {U, rng.coin() ? roots.back() : roots.front()};
    }
}

DivClass random_class(const OddModel& model, std::uint64_t seed) {
    Rng rng(seed);
    DivClass acc = DivClass::identity(model.curve());
    for (int i = 0; i < model.genus(); ++i) {
        auto [U, Y] = random_odd_point(*model.curve(), rng);
        acc = acc + odd_point_class(model.curve(), U, Y);
    }
    return acc;
}

std::optional<DivClass> descend(const DivClass& d, const OddModel& base) {
    const FiniteField& F = base.curve()->field();
    if (&d.field() == &F) return d;
    if (!F.is_prime_field()) raise(ErrorKind::InvalidArgument, "descent target must be a prime field");
    auto down = [&](const FqPoly& f) -> std::optional<FqPoly> {
        std::vector<Fq> c;
        for (const auto& x : f.coeffs()) {
            if (!x.in_prime_field()) return std::nullopt;
            c.push_back(F.from_u64(x.to_u64()));
        }
        return FqPoly(F.zero(), std::move(c));
    };
    auto u = down(d.u());
    auto v = down(d.v());
    if (!u || !v) return std::nullopt;
    return DivClass::from_mumford(base.curve(), *u, *v);
}

}  // namespace forge
