#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "forge/family.hpp"
#include "forge/finite_field.hpp"
#include "forge/rng.hpp"
#include "forge/upoly_ff.hpp"

namespace forge {

/// Y^2 = F(U) with deg F = 2g+1 and a single point at infinity.
struct OddCurve {
    FqPoly F;
    int genus;

    const FiniteField& field() const { return F.zero_element().field(); }
    friend bool operator==(const OddCurve& a, const OddCurve& b) { return a.genus == b.genus && a.F == b.F; }
};

using OddCurveRef = std::shared_ptr<const OddCurve>;

/// Odd model of an even model y^2 = f(x) anchored at a rational root r:
/// x = r + 1/U, y = Y/U^{g+1}, F(U) = U^{2g+2} f(r + 1/U).
class OddModel {
public:
    const HyperCurve<Fq>& source() const noexcept { return source_; }
    const Fq& anchor() const noexcept { return r_; }
    const FqPoly& F() const noexcept { return curve_->F; }
    int genus() const noexcept { return curve_->genus; }
    const OddCurveRef& curve() const noexcept { return curve_; }

    /// The same odd curve with coefficients in W.
    OddCurveRef curve_over(const FiniteField& W) const;

    /// (x, y) -> (U, Y). Returns nullopt for x = r (the point at infinity).
    std::optional<std::pair<Fq, Fq>> to_odd(const Fq& x, const Fq& y) const;
    /// (U, Y) -> (x, y); requires U != 0.
    std::pair<Fq, Fq> to_even(const Fq& U, const Fq& Y) const;

private:
    friend OddModel to_odd_model(const HyperCurve<Fq>& curve, const Fq& r);
    OddModel(HyperCurve<Fq> source, Fq r, OddCurveRef curve) : source_(std::move(source)), r_(r), curve_(std::move(curve)) {}

    HyperCurve<Fq> source_;
    Fq r_;
    OddCurveRef curve_;
};

/// Throws NotARoot when f(r) != 0, SingularResult if F is not squarefree and
/// InvalidArgument for genus 0.
OddModel to_odd_model(const HyperCurve<Fq>& curve, const Fq& r);

/// Reduced Mumford pair (u, v): u monic, deg v < deg u <= g, u | v^2 - F.
class DivClass {
public:
    static DivClass identity(OddCurveRef curve);
    /// Builds and reduces (u, v); throws InvalidArgument if u does not divide v^2 - F.
    static DivClass from_mumford(OddCurveRef curve, FqPoly u, FqPoly v);

    const OddCurveRef& curve() const noexcept { return curve_; }
    const FiniteField& field() const { return curve_->field(); }
    const FqPoly& u() const noexcept { return u_; }
    const FqPoly& v() const noexcept { return v_; }
    int weight() const noexcept { return u_.degree(); }
    bool is_identity() const noexcept { return u_.degree() == 0; }
    /// u | v^2 - F and deg v < deg u <= g.
    bool is_reduced_valid() const;

    DivClass operator-() const;
    friend bool operator==(const DivClass& a, const DivClass& b) {
        return *a.curve_ == *b.curve_ && a.u_ == b.u_ && a.v_ == b.v_;
    }

private:
    DivClass(OddCurveRef curve, FqPoly u, FqPoly v) : curve_(std::move(curve)), u_(std::move(u)), v_(std::move(v)) {}
    friend DivClass cantor_add(const DivClass&, const DivClass&);
    static DivClass reduce(OddCurveRef curve, FqPoly u, FqPoly v);

    OddCurveRef curve_;
    FqPoly u_;
    FqPoly v_;
};

/// Cantor composition and reduction; throws CurveMismatch.
DivClass cantor_add(const DivClass& a, const DivClass& b);
inline DivClass operator+(const DivClass& a, const DivClass& b) { return cantor_add(a, b); }
inline DivClass operator-(const DivClass& a, const DivClass& b) { return cantor_add(a, -b); }

DivClass class_scalar_mul(const Integer& n, const DivClass& d);

/// [P - infinity] for an affine point of the odd model; throws NotOnCurve.
DivClass odd_point_class(const OddCurveRef& curve, const Fq& U, const Fq& Y);

/// [P] - [Q] for affine points (x, y) of the even model; coordinates may lie
/// in an extension, in which case the class lives over that field.
/// Throws NotOnCurve.
DivClass point_class(const OddModel& model, const std::pair<Fq, Fq>& P, const std::pair<Fq, Fq>& Q);

/// [P - infinity_odd] for an affine even-model point; the anchor point (r, 0)
/// gives the identity.
DivClass even_point_class(const OddModel& model, const Fq& x, const Fq& y);

/// Class of E - deg(E) infinity for the effective divisor described by an
/// even-model Mumford pair (u(x), v(x)), u monic with u | v^2 - f.
DivClass even_mumford_class(const OddModel& model, const FqPoly& u, const FqPoly& v);

/// Sum of g random affine points minus g infinity; deterministic per seed.
DivClass random_class(const OddModel& model, std::uint64_t seed);

/// A random affine point of the odd model over its base field.
std::pair<Fq, Fq> random_odd_point(const OddCurve& curve, Rng& rng);

/// Coerces a class defined over an extension whose pair has all coefficients
/// in F_p back to the base curve; nullopt if it is not Galois-stable.
std::optional<DivClass> descend(const DivClass& d, const OddModel& base);

}  // namespace forge
