#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forge/error.hpp"
#include "forge/upoly.hpp"

namespace forge {

enum class ValidationLevel { CurveOnly, Pair };

template <class T>
struct FamilyParams {
    int g = 0;
    T v;
    std::vector<T> a;
    ValidationLevel level = ValidationLevel::Pair;
};

/// y^2 = f(x), f squarefree of degree 2g+1 or 2g+2.
template <class T>
struct HyperCurve {
    UPoly<T> f;
    int genus;
    std::string label;  // "C", "C'", "C_thm", "C'_thm", "quotient", ...

    /// Throws NotSquarefree for singular models and InvalidArgument for degree < 3.
    static HyperCurve make(UPoly<T> f, std::string label) {
        if (f.degree() < 3) raise(ErrorKind::InvalidArgument, label + ": degree " + std::to_string(f.degree()) + " is not hyperelliptic");
        if (!is_squarefree(f)) raise(ErrorKind::NotSquarefree, label + ": f = " + f.to_string() + " is not squarefree");
        const int genus = (f.degree() - 1) / 2;
        return HyperCurve{std::move(f), genus, std::move(label)};
    }

    bool on_curve(const T& x, const T& y) const { return y * y == f.eval(x); }
    /// y^2 = c f(x).
    HyperCurve twisted(const T& c) const { return HyperCurve{f * c, genus, label + "^twist"}; }
};

/// Dense bivariate polynomial sum c[i][j] x^i z^j.
template <class T>
class BiPoly {
public:
    BiPoly(const T& proto, int deg_x, int deg_z)
        : zero_(proto.zero()), c_(static_cast<std::size_t>(deg_x) + 1, std::vector<T>(static_cast<std::size_t>(deg_z) + 1, proto.zero())) {}

    /// scale * P(x) * Q(z).
    static BiPoly separable(const T& scale, const UPoly<T>& px, const UPoly<T>& qz) {
        BiPoly r(scale, std::max(px.degree(), 0), std::max(qz.degree(), 0));
        for (int i = 0; i <= px.degree(); ++i)
            for (int j = 0; j <= qz.degree(); ++j) r.at(i, j) = scale * px.coeff(i) * qz.coeff(j);
        return r;
    }

    int degree_x() const {
        for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
            for (const auto& x : c_[static_cast<std::size_t>(i)])
                if (!x.is_zero()) return i;
        return -1;
    }
    int degree_z() const {
        int d = -1;
        for (const auto& row : c_)
            for (int j = static_cast<int>(row.size()) - 1; j > d; --j)
                if (!row[static_cast<std::size_t>(j)].is_zero()) d = j;
        return d;
    }

    T& at(int i, int j) { return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    T coeff(int i, int j) const {
        if (i < 0 || j < 0 || i >= static_cast<int>(c_.size()) || j >= static_cast<int>(c_[0].size())) return zero_;
        return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    int rows() const { return static_cast<int>(c_.size()); }
    int cols() const { return static_cast<int>(c_[0].size()); }

    T eval(const T& x, const T& z) const { return at_x(x).eval(z); }

    /// Polynomial in z obtained by fixing x.
    UPoly<T> at_x(const T& x) const {
        std::vector<T> out(c_[0].size(), zero_);
        T pw = zero_.one();
        for (const auto& row : c_) {
            for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j] * pw;
            pw = pw * x;
        }
        return UPoly<T>(zero_, std::move(out));
    }

    /// Polynomial in x obtained by fixing z.
    UPoly<T> at_z(const T& z) const { return transposed().at_x(z); }

    BiPoly transposed() const {
        BiPoly r(zero_, cols() - 1, rows() - 1);
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(); ++j) r.at(j, i) = coeff(i, j);
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

private:
    T zero_;
    std::vector<std::vector<T>> c_;
};

/// Data the correspondence is evaluated on. For even g it describes the pair
/// itself; for odd g it is the even-genus parent with a_{g+1} = 0, whose
/// models carry the square factors x^2 and (vz-1)^2/v^2.
template <class T>
struct CorrespondenceData {
    int genus;
    std::vector<T> a;
    std::vector<T> b;
    T A;
    BiPoly<T> M;
    UPoly<T> f_source;       // A * prod p_i(x) (possibly singular)
    UPoly<T> f_target;       // prod q_i(z)
    UPoly<T> source_square;  // y_parent = source_square(x) * y
    UPoly<T> target_square;  // t_parent = target_square(z) * t
};

template <class T>
struct CurvePair {
    FamilyParams<T> params;
    std::vector<T> b;
    T A;
    HyperCurve<T> C;       // y^2 = A prod p_i(x)
    HyperCurve<T> Cprime;  // t^2 = prod q_i(z)
    HyperCurve<T> C_thm;
    HyperCurve<T> Cprime_thm;
    BiPoly<T> S;
    BiPoly<T> M;
    CorrespondenceData<T> corr;

    int genus() const { return params.g; }
    const T& v() const { return params.v; }
    bool odd() const { return params.g % 2 == 1; }
};

// ---------------------------------------------------------------------------

/// b(a) = (a v^2 - 1)/(a - v^2); throws DivisionByZero when a = v^2.
template <class T>
T b_map(const T& a, const T& v) {
    const T v2 = v * v;
    const T den = a - v2;
    if (den.is_zero()) raise(ErrorKind::DivisionByZero, "b_map: a = v^2");
    return (a * v2 - a.one()) / den;
}

namespace detail {

template <class T>
std::string show(const T& x) {
    return x.to_string();
}

}  // namespace detail

/// Checks the non-degeneracy conditions of the requested level and returns the
/// validated parameters; throws DegenerateParamsError listing every violation.
template <class T>
FamilyParams<T> validate_params(int g, const T& v, const std::vector<T>& a, ValidationLevel level) {
    std::vector<std::string> bad;
    if (v.characteristic() == 2) bad.push_back("characteristic 2");
    if (g < 1) bad.push_back("g < 1");
    if (static_cast<int>(a.size()) != g)
        bad.push_back("expected " + std::to_string(g) + " values a_i, got " + std::to_string(a.size()));
    const T v2 = v * v;
    const bool v_zero = v.is_zero();
    if (v_zero) bad.push_back("v = 0");
    if (level == ValidationLevel::Pair) {
        if ((v2 * v2).is_one()) bad.push_back("v^4 = 1");
    } else if (v2.is_one()) {
        bad.push_back("v^2 = 1");
    }
    const std::optional<T> inv_v2 = v_zero ? std::nullopt : std::optional<T>(v2.inv());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string name = "a" + std::to_string(i + 1);
        if (a[i].is_zero()) bad.push_back(name + " = 0");
        if (a[i] == v2) bad.push_back(name + " = v^2");
        if (inv_v2 && a[i] == *inv_v2) bad.push_back(name + " = 1/v^2");
        for (std::size_t j = 0; j < i; ++j)
            if (a[i] == a[j]) bad.push_back("a" + std::to_string(j + 1) + " = " + name);
    }
    if (!bad.empty()) throw DegenerateParamsError(std::move(bad));
    return FamilyParams<T>{g, v, a, level};
}

/// (x - v)(v x - sign).
template <class T>
UPoly<T> p0_poly(const T& v, long sign = 1) {
    return UPoly<T>(v, {-v, v.one()}) * UPoly<T>(v, {v.from_int(-sign), v});
}

/// x^2 - c.
template <class T>
UPoly<T> even_quadratic(const T& c) {
    return UPoly<T>(c, {-c, c.zero(), c.one()});
}

/// S(x, z) = x^2 z^2 - v^2 (x^2 + z^2) + 1.
template <class T>
BiPoly<T> s_poly(const T& v) {
    BiPoly<T> s(v, 2, 2);
    const T v2 = v * v;
    s.at(2, 2) = v.one();
    s.at(2, 0) = -v2;
    s.at(0, 2) = -v2;
    s.at(0, 0) = v.one();
    return s;
}

/// M(x, z) = prod_{i=1}^{g/2} p_{2i}(v) p_{2i-1}(x) q_{2i}(z), g even.
template <class T>
BiPoly<T> m_poly(const T& v, const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() % 2 != 0) raise(ErrorKind::GenusParity, "M(x,z) needs an even number of parameters");
    const T v2 = v * v;
    T scale = v.one();
    UPoly<T> px = UPoly<T>::constant(v.one());
    UPoly<T> qz = UPoly<T>::constant(v.one());
    for (std::size_t i = 0; i + 1 < a.size(); i += 2) {
        scale *= v2 - a[i + 1];
        px *= even_quadratic(a[i]);
        qz *= even_quadratic(b[i + 1]);
    }
    return BiPoly<T>::separable(scale, px, qz);
}

/// A = 2 (v^2 + 1) prod p_i(v).
template <class T>
T a_constant(const T& v, const std::vector<T>& a) {
    const T v2 = v * v;
    T A = v.from_int(2) * (v2 + v.one());
    for (const auto& ai : a) A *= v2 - ai;
    return A;
}

template <class T>
struct StructuralPolys {
    BiPoly<T> S;
    BiPoly<T> M;
    T A;
};

template <class T>
StructuralPolys<T> structural_polys(const FamilyParams<T>& params) {
    if (params.g % 2 != 0) raise(ErrorKind::GenusParity, "structural polynomials are defined for even g");
    std::vector<T> b;
    for (const auto& ai : params.a) b.push_back(b_map(ai, params.v));
    T A = a_constant(params.v, params.a);
    if (A.is_zero()) raise(ErrorKind::DegenerateParams, "A = 0");
    return {s_poly(params.v), m_poly(params.v, params.a, b), A};
}

namespace detail {

template <class T>
void require_pair_level(const FamilyParams<T>& params) {
    if (params.level != ValidationLevel::Pair) raise(ErrorKind::DegenerateParams, "pair construction needs pair-level validation");
    validate_params(params.g, params.v, params.a, ValidationLevel::Pair);
}

template <class T>
UPoly<T> prod_quadratics(const T& proto, const std::vector<T>& roots_sq) {
    UPoly<T> f = UPoly<T>::constant(proto.one());
    for (const auto& c : roots_sq) f *= even_quadratic(c);
    return f;
}

}  // namespace detail

/// Even-genus pair: C: y^2 = A prod_{i>=0} p_i(x), C': t^2 = prod q_i(z).
template <class T>
CurvePair<T> build_pair(const FamilyParams<T>& params) {
    if (params.g % 2 != 0) raise(ErrorKind::GenusParity, "build_pair expects even g, got " + std::to_string(params.g));
    detail::require_pair_level(params);
    const T& v = params.v;
    std::vector<T> b;
    for (const auto& ai : params.a) b.push_back(b_map(ai, v));
    const auto sp = structural_polys(params);
    const UPoly<T> p0 = p0_poly(v);
    const UPoly<T> f_thm = p0 * detail::prod_quadratics(v, params.a);
    const UPoly<T> f_prime = p0 * detail::prod_quadratics(v, b);
    auto C = HyperCurve<T>::make(f_thm * sp.A, "C");
    auto Cp = HyperCurve<T>::make(f_prime, "C'");
    auto C_thm = HyperCurve<T>::make(f_thm, "C_thm");
    auto Cp_thm = HyperCurve<T>::make(f_prime, "C'_thm");
    const auto one = UPoly<T>::constant(v.one());
    CorrespondenceData<T> corr{params.g, params.a, b, sp.A, sp.M, C.f, Cp.f, one, one};
    return CurvePair<T>{params, b, sp.A, std::move(C), std::move(Cp), std::move(C_thm), std::move(Cp_thm), sp.S, sp.M, std::move(corr)};
}

/// Odd-genus pair obtained by specializing a_{g+1} = 0 in the genus g+1
/// construction. Theorem models: C: y^2 = (x-v)(vx-1) prod(x^2-a_i),
/// C': y^2 = (x-v)(vx+1) prod(x^2-b_i); the working model of C carries the
/// parent's constant A.
template <class T>
CurvePair<T> build_pair_odd(const FamilyParams<T>& params) {
    if (params.g % 2 != 1) raise(ErrorKind::GenusParity, "build_pair_odd expects odd g, got " + std::to_string(params.g));
    detail::require_pair_level(params);
    const T& v = params.v;
    std::vector<T> b;
    for (const auto& ai : params.a) b.push_back(b_map(ai, v));

    std::vector<T> parent_a = params.a;
    parent_a.push_back(v.zero());
    std::vector<T> parent_b = b;
    parent_b.push_back(b_map(v.zero(), v));  // 1/v^2
    const T parent_A = a_constant(v, parent_a);
    const BiPoly<T> parent_M = m_poly(v, parent_a, parent_b);

    const UPoly<T> f_thm = p0_poly(v) * detail::prod_quadratics(v, params.a);
    const UPoly<T> f_prime = p0_poly(v, -1) * detail::prod_quadratics(v, b);
    auto C = HyperCurve<T>::make(f_thm * parent_A, "C");
    auto Cp = HyperCurve<T>::make(f_prime, "C'");
    auto C_thm = HyperCurve<T>::make(f_thm, "C_thm");
    auto Cp_thm = HyperCurve<T>::make(f_prime, "C'_thm");

    const UPoly<T> f_source = p0_poly(v) * detail::prod_quadratics(v, parent_a) * parent_A;
    const UPoly<T> f_target = p0_poly(v) * detail::prod_quadratics(v, parent_b);
    const UPoly<T> source_square(v, {v.zero(), v.one()});                // x
    const UPoly<T> target_square(v, {-v.inv(), v.one()});                // (v z - 1)/v
    if (!(source_square * source_square * C.f == f_source) || !(target_square * target_square * Cp.f == f_target))
        raise(ErrorKind::SingularResult, "parent square factors do not match the odd models");
    CorrespondenceData<T> corr{params.g + 1, parent_a, parent_b, parent_A, parent_M, f_source, f_target, source_square, target_square};
    return CurvePair<T>{params, b, parent_A, std::move(C), std::move(Cp), std::move(C_thm), std::move(Cp_thm), s_poly(v), parent_M, std::move(corr)};
}

/// Dispatches on the parity of g.
template <class T>
CurvePair<T> build_any_pair(const FamilyParams<T>& params) {
    return params.g % 2 == 0 ? build_pair(params) : build_pair_odd(params);
}

/// Z[sqrt 2] family: a_{g/2+i} = b(a_i).
template <class T>
FamilyParams<T> sqrt2_params(int g, const T& v, const std::vector<T>& a_half) {
    if (g % 2 != 0 || g < 2) raise(ErrorKind::GenusParity, "sqrt2 family needs even g >= 2");
    if (static_cast<int>(a_half.size()) != g / 2)
        raise(ErrorKind::InvalidArgument, "expected " + std::to_string(g / 2) + " free parameters");
    std::vector<T> a = a_half;
    for (const auto& ai : a_half) a.push_back(b_map(ai, v));
    return validate_params(g, v, a, ValidationLevel::Pair);
}

/// Re-expresses parameters in another field through `map` (e.g. Q -> F_p).
template <class U, class T, class Map>
FamilyParams<U> map_params(const FamilyParams<T>& params, Map&& map) {
    std::vector<U> a;
    for (const auto& ai : params.a) a.push_back(map(ai));
    return FamilyParams<U>{params.g, map(params.v), std::move(a), params.level};
}

}  // namespace forge
