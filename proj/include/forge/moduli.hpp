#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "forge/error.hpp"
#include "forge/finite_field.hpp"
#include "forge/rational.hpp"
#include "forge/rng.hpp"

namespace forge {

/// Point of the projective line.
template <class T>
struct ProjPoint {
    T x;
    bool infinite = false;

    static ProjPoint finite(const T& x) { return {x, false}; }
    static ProjPoint infinity(const T& proto) { return {proto.zero(), true}; }
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.infinite == b.infinite && (a.infinite || a.x == b.x);
    }
    std::string to_string() const { return infinite ? std::string("inf") : x.to_string(); }
};

/// x -> (a x + b) / (c x + d) up to scalars; the first nonzero entry of
/// (a, b, c, d) is scaled to 1.
template <class T>
class Homography {
public:
    Homography(T a, T b, T c, T d) : m_{a, b, c, d} {
        if ((a * d - b * c).is_zero()) raise(ErrorKind::SingularResult, "homography with zero determinant");
        for (const T& e : m_)
            if (!e.is_zero()) {
                const T s = e.inv();
                for (auto& x : m_) x = x * s;
                break;
            }
    }
    static Homography identity(const T& proto) { return Homography(proto.one(), proto.zero(), proto.zero(), proto.one()); }

    const T& a() const { return m_[0]; }
    const T& b() const { return m_[1]; }
    const T& c() const { return m_[2]; }
    const T& d() const { return m_[3]; }

    ProjPoint<T> operator()(const ProjPoint<T>& p) const {
        if (p.infinite) return c().is_zero() ? ProjPoint<T>::infinity(a()) : ProjPoint<T>::finite(a() / c());
        const T den = c() * p.x + d();
        if (den.is_zero()) return ProjPoint<T>::infinity(a());
        return ProjPoint<T>::finite((a() * p.x + b()) / den);
    }
    T operator()(const T& x) const {
        const auto r = (*this)(ProjPoint<T>::finite(x));
        if (r.infinite) raise(ErrorKind::DivisionByZero, "homography maps the point to infinity");
        return r.x;
    }

    /// (this o o)(x) = this(o(x)).
    Homography compose(const Homography& o) const {
        return Homography(a() * o.a() + b() * o.c(), a() * o.b() + b() * o.d(), c() * o.a() + d() * o.c(),
                          c() * o.b() + d() * o.d());
    }
    Homography inverse() const { return Homography(d(), -b(), -c(), a()); }
    bool is_involution() const { return !is_identity() && compose(*this).is_identity(); }
    bool is_identity() const { return b().is_zero() && c().is_zero() && a() == d(); }

    friend bool operator==(const Homography& x, const Homography& y) { return x.m_ == y.m_; }
    std::string to_string() const {
        return "x -> (" + a().to_string() + "*x + " + b().to_string() + ")/(" + c().to_string() + "*x + " + d().to_string() + ")";
    }

private:
    std::array<T, 4> m_;
};

/// LHS - RHS of the six-point criterion for pairs (a1,a2), (a3,a4), (a5,a6).
template <class T>
T criterion_defect(const std::array<T, 6>& a) {
    const T &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a5 = a[4], &a6 = a[5];
    const T lhs = a6 * a5 * a3 + a6 * a5 * a4 + a6 * a2 * a1 + a5 * a2 * a1 + a1 * a4 * a3 + a2 * a4 * a3;
    const T rhs = a6 * a5 * a1 + a6 * a5 * a2 + a6 * a4 * a3 + a5 * a4 * a3 + a2 * a1 * a3 + a2 * a1 * a4;
    return lhs - rhs;
}

template <class T>
void require_distinct(const std::array<T, 6>& a) {
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (a[i] == a[j]) raise(ErrorKind::DuplicateInput, "points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
}

/// True iff an involution swaps a1<->a2, a3<->a4, a5<->a6. Throws DuplicateInput.
template <class T>
bool involution_criterion(const std::array<T, 6>& a) {
    require_distinct(a);
    return criterion_defect(a).is_zero();
}

namespace detail {

/// Basis of the kernel of a small matrix by Gauss-Jordan elimination.
template <class T>
std::vector<std::array<T, 3>> kernel3(std::vector<std::array<T, 3>> rows, const T& proto) {
    std::array<int, 3> pivot_col_of_row{-1, -1, -1};
    std::size_t r = 0;
    std::array<bool, 3> is_pivot{false, false, false};
    for (int col = 0; col < 3 && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const T inv = rows[r][static_cast<std::size_t>(col)].inv();
        for (auto& e : rows[r]) e = e * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const T f = rows[i][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < 3; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_col_of_row[r] = col;
        is_pivot[static_cast<std::size_t>(col)] = true;
        ++r;
    }
    std::vector<std::array<T, 3>> basis;
    for (int free = 0; free < 3; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::array<T, 3> vec{proto.zero(), proto.zero(), proto.zero()};
        vec[static_cast<std::size_t>(free)] = proto.one();
        for (std::size_t i = 0; i < r; ++i)
            vec[static_cast<std::size_t>(pivot_col_of_row[i])] = -rows[i][static_cast<std::size_t>(free)];
        basis.push_back(vec);
    }
    return basis;
}

/// Row of alpha (a+b) + beta - gamma a b = 0: the trace-zero map
/// x -> (alpha x + beta)/(gamma x - alpha) sends a to b.
template <class T>
std::array<T, 3> swap_row(const ProjPoint<T>& a, const ProjPoint<T>& b) {
    const T one = a.x.one(), zero = a.x.zero();
    if (a.infinite && b.infinite) raise(ErrorKind::DuplicateInput, "both points at infinity");
    if (a.infinite) return {one, zero, -b.x};
    if (b.infinite) return {one, zero, -a.x};
    return {a.x + b.x, one, -(a.x * b.x)};
}

template <class T>
T det3(const std::array<std::array<T, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class T>
std::optional<Homography<T>> trace_zero(const std::array<T, 3>& k) {
    const T& alpha = k[0];
    const T& beta = k[1];
    const T& gamma = k[2];
    if ((alpha * alpha + beta * gamma).is_zero()) return std::nullopt;
    return Homography<T>(alpha, beta, gamma, -alpha);
}

inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < Rational()) return std::nullopt;
    Integer n = r.numerator(), d = r.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_sqrt(n.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), d.get_mpz_t());
    return Rational(n, d);
}

inline std::optional<Fq> exact_sqrt(const Fq& x) {
    auto roots = field_sqrt(x);
    if (roots.empty()) return std::nullopt;
    return roots.front();
}

}  // namespace detail

template <class T>
struct InvolutionReport {
    bool exists = false;
    std::optional<Homography<T>> involution;
    T determinant;
};

/// Solves for the trace-zero homography swapping each pair. Asserts that the
/// determinant vanishes exactly when the criterion holds and that a returned
/// involution swaps every pair. Throws DuplicateInput.
template <class T>
InvolutionReport<T> pairing_involution(const std::array<T, 6>& a) {
    require_distinct(a);
    std::array<std::array<T, 3>, 3> m;
    for (std::size_t i = 0; i < 3; ++i) m[i] = detail::swap_row(ProjPoint<T>::finite(a[2 * i]), ProjPoint<T>::finite(a[2 * i + 1]));
    InvolutionReport<T> rep{false, std::nullopt, detail::det3(m)};
    if (rep.determinant.is_zero() != criterion_defect(a).is_zero())
        raise(ErrorKind::SingularResult, "determinant and criterion disagree");
    if (!rep.determinant.is_zero()) return rep;
    const auto basis = detail::kernel3<T>({m[0], m[1], m[2]}, a[0]);
    for (const auto& k : basis) {
        auto h = detail::trace_zero(k);
        if (!h) continue;
        for (std::size_t i = 0; i < 3; ++i)
            if (!((*h)(a[2 * i]) == a[2 * i + 1])) raise(ErrorKind::SingularResult, "solved involution does not swap a pair");
        rep.exists = true;
        rep.involution = h;
        break;
    }
    return rep;
}

template <class T>
struct Normalization {
    Homography<T> h;
    T v, x1, x2;
    std::array<T, 6> images;  // h(P1), ..., h(P6)
};

/// Returns h with h(P1), h(P2) = x1, -x1; h(P3), h(P4) = x2, -x2;
/// h(P5), h(P6) = v, 1/v. All square roots must exist in T (use an extension
/// for finite fields, see normalize_genus2_ff). Throws SpecialPosition.
template <class T>
Normalization<T> normalize_genus2(const std::array<ProjPoint<T>, 6>& P) {
    const T proto = P[0].x;
    const T zero = proto.zero(), one = proto.one();
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (P[i] == P[j]) raise(ErrorKind::SpecialPosition, "points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");

    // u: the involution swapping P1<->P2 and P3<->P4.
    auto ku = detail::kernel3<T>({detail::swap_row(P[0], P[1]), detail::swap_row(P[2], P[3])}, proto);
    if (ku.size() != 1) raise(ErrorKind::SpecialPosition, "involution u is not unique");
    auto u = detail::trace_zero(ku[0]);
    if (!u) raise(ErrorKind::SpecialPosition, "involution u is degenerate");
    const T& al = ku[0][0];
    const T& be = ku[0][1];
    const T& ga = ku[0][2];

    // w: trace zero, commuting with u (2 al al' + be ga' + ga be' = 0), w(P5) = P6.
    const std::array<T, 3> commute{al + al, ga, be};
    auto kw = detail::kernel3<T>({commute, detail::swap_row(P[4], P[5])}, proto);
    if (kw.size() != 1) raise(ErrorKind::SpecialPosition, "involution w is not unique");
    auto w = detail::trace_zero(kw[0]);
    if (!w || *w == *u) raise(ErrorKind::SpecialPosition, "involution w is degenerate");

    // k sends the fixed points of u to 0 and infinity: gamma x^2 - 2 alpha x - beta = 0.
    std::optional<Homography<T>> k;
    if (ga.is_zero()) {
        // Fixed points -beta/(2 alpha) and infinity.
        k = Homography<T>(one, be / (al + al), zero, one);
    } else {
        auto disc = detail::exact_sqrt(al * al + be * ga);
        if (!disc) raise(ErrorKind::SpecialPosition, "fixed points of u are not in the coefficient field");
        const T f1 = (al + *disc) / ga, f2 = (al - *disc) / ga;
        k = Homography<T>(one, -f1, one, -f2);
    }
    const Homography<T> w_conj = k->compose(*w).compose(k->inverse());
    if (!(w_conj.a().is_zero() && w_conj.d().is_zero())) raise(ErrorKind::SpecialPosition, "w does not become x -> t/x");
    const T t = w_conj.b() / w_conj.c();
    auto s = detail::exact_sqrt(t);
    if (!s) raise(ErrorKind::SpecialPosition, "scaling needs a square root outside the coefficient field");
    const Homography<T> h = Homography<T>(one, zero, zero, *s).compose(*k);

    std::array<T, 6> img;
    for (std::size_t i = 0; i < 6; ++i) {
        const auto q = h(P[i]);
        if (q.infinite || q.x.is_zero()) raise(ErrorKind::SpecialPosition, "point " + std::to_string(i + 1) + " is fixed by u");
        img[i] = q.x;
    }
    Normalization<T> out{h, img[4], img[0], img[2], img};
    if (!(img[1] == -img[0]) || !(img[3] == -img[2]) || !(img[5] * img[4] == one))
        raise(ErrorKind::SingularResult, "normalized points do not have the expected pattern");
    return out;
}

/// Multiset check {x1, -x1, x2, -x2, v, 1/v} of six values.
template <class T>
bool has_normal_pattern(std::array<T, 6> values, const T& v, const T& x1, const T& x2) {
    std::array<T, 6> expect{x1, -x1, x2, -x2, v, v.inv()};
    auto less = [](const T& a, const T& b) { return a < b; };
    std::sort(values.begin(), values.end(), less);
    std::sort(expect.begin(), expect.end(), less);
    return values == expect;
}

/// normalize_genus2 for points over F_p, computed in F_{p^4} where the fixed
/// points of u and the scaling square root always exist.
Normalization<Fq> normalize_genus2_ff(const std::array<ProjPoint<Fq>, 6>& points);

/// Six distinct points of P^1(F) (infinity included) such that u exists, is
/// unique, and neither P5 nor P6 is fixed by u. `redraws` counts sets rejected
/// for special position.
std::array<ProjPoint<Fq>, 6> random_general_position(const FiniteField& F, Rng& rng, int* redraws = nullptr);

/// Six distinct finite values swapped pairwise by a random involution.
std::array<Fq, 6> random_involution_tuple(const FiniteField& F, Rng& rng);

struct CriterionBattery {
    std::uint64_t p = 0;
    int involution_tuples = 0;
    int involution_satisfied = 0;
    int symmetry_checked = 0;
    int symmetry_ok = 0;
    int random_tuples = 0;
    int random_satisfied = 0;
    int max_random_satisfied = 5;
    int equivalence_samples = 0;
    int equivalence_agree = 0;
    bool ok() const;
};

/// Involution-generated tuples, uniform tuples, and determinant/criterion
/// agreement (half the equivalence samples are involution-generated).
CriterionBattery run_criterion_battery(std::uint64_t p, int involution_tuples, int random_tuples,
                                       int equivalence_samples, std::uint64_t seed);

struct NormalizationBattery {
    std::uint64_t p = 0;
    int sets = 0;
    int normalized = 0;
    int pattern_ok = 0;
    int stabilizer_ok = 0;
    int redraws = 0;
    std::vector<std::string> failures;
    bool ok() const { return sets > 0 && normalized == sets && pattern_ok == sets && stabilizer_ok == sets; }
};

/// Normalizes `sets` random sets in general position and verifies the pattern
/// by applying h, and again after composing with each of +-x, +-1/x.
NormalizationBattery run_normalization_battery(std::uint64_t p, int sets, std::uint64_t seed);

}  // namespace forge
