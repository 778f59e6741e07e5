#include "forge/moduli.hpp"

#include "forge/upoly_ff.hpp"

namespace forge {

Normalization<Fq> normalize_genus2_ff(const std::array<ProjPoint<Fq>, 6>& points) {
    const FiniteField& base = points[0].x.field();
    if (base.degree() != 1 && base.degree() != 2 && base.degree() != 4)
        raise(ErrorKind::InvalidDegree, "points must lie in a subfield of F_{p^4}");
    const FiniteField& W = ext_build(base.characteristic(), 4);
    std::array<ProjPoint<Fq>, 6> lifted;
    for (std::size_t i = 0; i < 6; ++i) {
        if (&points[i].x.field() != &base) raise(ErrorKind::CurveMismatch, "points over different fields");
        lifted[i] = points[i].infinite ? ProjPoint<Fq>::infinity(W.zero()) : ProjPoint<Fq>::finite(lift(points[i].x, W));
    }
    return normalize_genus2(lifted);
}

}  // namespace forge

namespace forge {

namespace {

ProjPoint<Fq> draw_point(const FiniteField& F, Rng& rng) {
    const std::uint64_t p = F.characteristic();
    const std::uint64_t i = rng.below(p + 1);
    return i == p ? ProjPoint<Fq>::infinity(F.zero()) : ProjPoint<Fq>::finite(F.from_u64(i));
}

bool fixed_by(const std::array<Fq, 3>& k, const ProjPoint<Fq>& P) {
    // gamma x^2 - 2 alpha x - beta = 0, or infinity when gamma = 0.
    if (P.infinite) return k[2].is_zero();
    const Fq& x = P.x;
    return (k[2] * x * x - (k[0] + k[0]) * x - k[1]).is_zero();
}

}  // namespace

std::array<ProjPoint<Fq>, 6> random_general_position(const FiniteField& F, Rng& rng, int* redraws) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::array<ProjPoint<Fq>, 6> P;
        for (std::size_t i = 0; i < 6; ++i) {
            bool fresh = false;
            while (!fresh) {
                P[i] = draw_point(F, rng);
                fresh = std::none_of(P.begin(), P.begin() + static_cast<long>(i), [&](const auto& Q) { return Q == P[i]; });
            }
        }
        const auto ku = detail::kernel3<Fq>({detail::swap_row(P[0], P[1]), detail::swap_row(P[2], P[3])}, F.zero());
        if (ku.size() == 1 && detail::trace_zero(ku[0]).has_value() && !fixed_by(ku[0], P[4]) && !fixed_by(ku[0], P[5]))
            return P;
        if (redraws) ++*redraws;
    }
    raise(ErrorKind::SpecialPosition, "no point set in general position found");
}

std::array<Fq, 6> random_involution_tuple(const FiniteField& F, Rng& rng) {
    for (;;) {
        const std::array<Fq, 3> k{F.random(rng), F.random(rng), F.random(rng)};
        const auto h = detail::trace_zero(k);
        if (!h) continue;
        std::array<Fq, 6> t;
        bool ok = true;
        for (std::size_t i = 0; i < 3 && ok; ++i) {
            t[2 * i] = F.random(rng);
            const auto img = (*h)(ProjPoint<Fq>::finite(t[2 * i]));
            ok = !img.infinite;
            if (ok) t[2 * i + 1] = img.x;
        }
        for (std::size_t i = 0; i < 6 && ok; ++i)
            for (std::size_t j = 0; j < i && ok; ++j) ok = !(t[i] == t[j]);
        if (ok) return t;
    }
}

bool CriterionBattery::ok() const {
    return involution_tuples > 0 && involution_satisfied == involution_tuples && symmetry_ok == symmetry_checked &&
           random_satisfied <= max_random_satisfied && equivalence_agree == equivalence_samples;
}

CriterionBattery run_criterion_battery(std::uint64_t p, int involution_tuples, int random_tuples,
                                       int equivalence_samples, std::uint64_t seed) {
    const FiniteField& F = FiniteField::prime(p);
    const Rng root(seed);
    CriterionBattery rep;
    rep.p = p;

    Rng inv = root.child("involution");
    Rng sym = root.child("symmetry");
    for (int i = 0; i < involution_tuples; ++i) {
        const auto t = random_involution_tuple(F, inv);
        ++rep.involution_tuples;
        if (involution_criterion(t)) ++rep.involution_satisfied;
        // Swap within a random pair and rotate the pairs.
        auto s = t;
        const std::size_t k = sym.below(3);
        std::swap(s[2 * k], s[2 * k + 1]);
        std::rotate(s.begin(), s.begin() + 2 * static_cast<long>(sym.below(3)), s.end());
        ++rep.symmetry_checked;
        if (involution_criterion(s) == involution_criterion(t)) ++rep.symmetry_ok;
    }

    Rng uni = root.child("uniform");
    auto uniform_tuple = [&F](Rng& rng) {
        for (;;) {
            std::array<Fq, 6> t;
            for (auto& x : t) x = F.random(rng);
            bool distinct = true;
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < i; ++j) distinct = distinct && !(t[i] == t[j]);
            if (distinct) return t;
        }
    };
    for (int i = 0; i < random_tuples; ++i) {
        const auto t = uniform_tuple(uni);
        ++rep.random_tuples;
        if (involution_criterion(t)) ++rep.random_satisfied;
    }

    Rng eq = root.child("equivalence");
    for (int i = 0; i < equivalence_samples; ++i) {
        const auto t = (i % 2 == 0) ? random_involution_tuple(F, eq) : uniform_tuple(eq);
        ++rep.equivalence_samples;
        try {
            const auto r = pairing_involution(t);
            if (r.determinant.is_zero() == involution_criterion(t) && r.exists == involution_criterion(t))
                ++rep.equivalence_agree;
        } catch (const Error&) {
        }
    }
    return rep;
}

NormalizationBattery run_normalization_battery(std::uint64_t p, int sets, std::uint64_t seed) {
    const FiniteField& F = FiniteField::prime(p);
    Rng rng = Rng(seed).child("normalize");
    NormalizationBattery rep;
    rep.p = p;
    for (int i = 0; i < sets; ++i) {
        const auto P = random_general_position(F, rng, &rep.redraws);
        ++rep.sets;
        try {
            const auto n = normalize_genus2_ff(P);
            ++rep.normalized;
            const FiniteField& W = n.v.field();
            std::array<ProjPoint<Fq>, 6> lifted;
            for (std::size_t j = 0; j < 6; ++j)
                lifted[j] = P[j].infinite ? ProjPoint<Fq>::infinity(W.zero()) : ProjPoint<Fq>::finite(lift(P[j].x, W));
            auto pattern = [&](const Homography<Fq>& h) {
                std::array<Fq, 6> img;
                for (std::size_t j = 0; j < 6; ++j) {
                    const auto q = h(lifted[j]);
                    if (q.infinite) return false;
                    img[j] = q.x;
                }
                const Fq v = img[4], x1 = img[0], x2 = img[2];
                return !v.is_zero() && !x1.is_zero() && !x2.is_zero() && has_normal_pattern(img, v, x1, x2);
            };
            if (pattern(n.h)) ++rep.pattern_ok;
            const Fq o = W.one(), z = W.zero();
            const std::array<Homography<Fq>, 4> stab{Homography<Fq>(o, z, z, o), Homography<Fq>(-o, z, z, o),
                                                     Homography<Fq>(z, o, o, z), Homography<Fq>(z, -o, o, z)};
            bool all = true;
            for (const auto& s : stab) all = all && pattern(s.compose(n.h));
            if (all) ++rep.stabilizer_ok;
        } catch (const Error& e) {
            rep.failures.push_back(e.what());
        }
    }
    return rep;
}

}  // namespace forge
