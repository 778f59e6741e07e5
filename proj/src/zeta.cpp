#include "forge/zeta.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "forge/family_ff.hpp"

namespace forge {

namespace {

Integer ipow(std::uint64_t p, int k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(k));
    return r;
}

}  // namespace

Integer LPoly::at_one() const {
    Integer s = 0;
    for (const auto& x : c) s += x;
    return s;
}

LPoly LPoly::twisted() const {
    LPoly r = *this;
    for (std::size_t j = 1; j < r.c.size(); j += 2) r.c[j] = -r.c[j];
    return r;
}

bool LPoly::functional_equation_holds() const {
    if (static_cast<int>(c.size()) != 2 * g + 1 || c[0] != 1) return false;
    for (int j = 0; j <= g; ++j)
        if (c[static_cast<std::size_t>(g + j)] != ipow(p, j) * c[static_cast<std::size_t>(g - j)]) return false;
    return true;
}

std::vector<Integer> LPoly::counts(int kmax) const {
    auto coeff = [&](int j) -> Integer { return j < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(j)] : Integer(0); };
    std::vector<Integer> s(static_cast<std::size_t>(kmax) + 1, 0);
    std::vector<Integer> out;
    for (int k = 1; k <= kmax; ++k) {
        Integer sk = -Integer(k) * coeff(k);
        for (int i = 1; i < k; ++i) sk -= s[static_cast<std::size_t>(i)] * coeff(k - i);
        s[static_cast<std::size_t>(k)] = sk;
        out.push_back(ipow(p, k) + 1 - sk);
    }
    return out;
}

bool LPoly::weil_roots_ok(double tol) const {
    const int n = 2 * g;
    if (n == 0) return true;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    // Monic charpoly y^n + c1 y^{n-1} + ... + c_n.
    for (int j = 1; j <= n; ++j) comp(n - j, n - 1) = -c[static_cast<std::size_t>(j)].get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    const double sq = std::sqrt(static_cast<double>(p));
    for (int i = 0; i < n; ++i)
        if (std::abs(std::abs(es.eigenvalues()[i]) / sq - 1.0) > tol) return false;
    return true;
}

std::string LPoly::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].get_str();
    return s + "]";
}

LPoly operator*(const LPoly& a, const LPoly& b) {
    if (a.p != b.p) raise(ErrorKind::InvalidArgument, "L-polynomials over different primes");
    LPoly r;
    r.g = a.g + b.g;
    r.p = a.p;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

// ---------------------------------------------------------------------------

std::uint64_t count_points(const HyperCurve<Fq>& curve, int k) {
    const FiniteField& F = curve.f.zero_element().field();
    if (!F.is_prime_field()) raise(ErrorKind::InvalidArgument, "count_points expects a curve over F_p");
    if (k < 1) raise(ErrorKind::InvalidDegree, "k must be >= 1");
    const std::uint64_t p = F.characteristic();
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > kCountScaleGuard / p) raise(ErrorKind::ScaleGuard, std::to_string(p) + "^" + std::to_string(k) + " exceeds the counting guard");
        q *= p;
    }

    FqPoly model = curve.f;
    if (model.degree() % 2 == 0) {
        const auto roots = roots_in_field(model);
        if (roots.empty()) raise(ErrorKind::NoRationalRoot, curve.label + " has no rational Weierstrass point");
        model = model.taylor_shift(roots.front()).reversed(model.degree());
    }
    const FiniteField& W = ext_build(p, k);
    const FqPoly Fw = lift(model, W);

    std::vector<bool> square(q, false);
    for (std::uint64_t i = 0; i < q; ++i) {
        const Fq x = W.element_at(i);
        square[W.index_of(x * x)] = true;
    }
    std::uint64_t n = 1;  // the point at infinity
    for (std::uint64_t i = 0; i < q; ++i) {
        const Fq val = Fw.eval(W.element_at(i));
        if (val.is_zero())
            n += 1;
        else if (square[W.index_of(val)])
            n += 2;
    }
    const double dev = std::abs(static_cast<double>(n) - static_cast<double>(q) - 1.0);
    if (dev > 2.0 * curve.genus * std::sqrt(static_cast<double>(q)) + 1e-9)
        raise(ErrorKind::SingularResult, "point count " + std::to_string(n) + " violates the Weil bound");
    return n;
}

LPoly l_polynomial_from_counts(int g, std::uint64_t p, const std::vector<std::uint64_t>& counts) {
    if (static_cast<int>(counts.size()) < g) raise(ErrorKind::InvalidArgument, "need N_1..N_g");
    LPoly L;
    L.g = g;
    L.p = p;
    L.c.assign(static_cast<std::size_t>(2 * g) + 1, 0);
    L.c[0] = 1;
    std::vector<Integer> s(static_cast<std::size_t>(g) + 1, 0);
    for (int k = 1; k <= g; ++k) s[static_cast<std::size_t>(k)] = ipow(p, k) + 1 - Integer(static_cast<unsigned long>(counts[static_cast<std::size_t>(k - 1)]));
    for (int j = 1; j <= g; ++j) {
        Integer acc = 0;
        for (int i = 1; i <= j; ++i) acc += s[static_cast<std::size_t>(i)] * L.c[static_cast<std::size_t>(j - i)];
        if (acc % j != 0) raise(ErrorKind::InvalidArgument, "point counts are not consistent with a curve");
        L.c[static_cast<std::size_t>(j)] = -acc / j;
    }
    for (int j = 1; j <= g; ++j) L.c[static_cast<std::size_t>(g + j)] = ipow(p, j) * L.c[static_cast<std::size_t>(g - j)];
    return L;
}

LPoly l_polynomial(const HyperCurve<Fq>& curve) {
    const int g = curve.genus;
    if (g > 3) raise(ErrorKind::InvalidArgument, "L-polynomials are computed for g <= 3 only");
    std::vector<std::uint64_t> counts;
    for (int k = 1; k <= g; ++k) counts.push_back(count_points(curve, k));
    LPoly L = l_polynomial_from_counts(g, curve.f.zero_element().characteristic(), counts);
    if (L.at_one() <= 0) raise(ErrorKind::SingularResult, "L(1) <= 0");
    return L;
}

std::vector<Integer> frobenius_charpoly(const HyperCurve<Fq>& curve) { return l_polynomial(curve).c; }

HyperCurve<Fq> quadratic_twist(const HyperCurve<Fq>& curve, const Fq& c) {
    if (c.is_zero()) raise(ErrorKind::InvalidArgument, "twist by zero");
    return curve.twisted(c);
}

Fq non_residue(const FiniteField& F) {
    for (std::int64_t n = 2;; ++n) {
        const Fq x = F.from_int(n);
        if (x.chi() == -1) return x;
    }
}

std::string to_string(TwistRelation r) {
    switch (r) {
        case TwistRelation::Direct: return "direct";
        case TwistRelation::Twist: return "quadratic twist";
        case TwistRelation::Neither: break;
    }
    return "neither";
}

TwistRelation twist_relation(const LPoly& a, const LPoly& b) {
    if (a == b) return TwistRelation::Direct;
    if (a == b.twisted()) return TwistRelation::Twist;
    return TwistRelation::Neither;
}

// ---------------------------------------------------------------------------

LEqualityEntry check_l_equality_at(const CurvePair<Fq>& pair) {
    LEqualityEntry e;
    e.p = pair.v().characteristic();
    e.L_C = l_polynomial(pair.C);
    e.L_Cprime = l_polynomial(pair.Cprime);
    e.equal = *e.L_C == *e.L_Cprime;
    e.thm_relation = twist_relation(l_polynomial(pair.C_thm), l_polynomial(pair.Cprime_thm));
    return e;
}

LEqualityReport check_l_equality(const FamilyParams<Rational>& params, const std::vector<std::uint64_t>& primes) {
    LEqualityReport rep;
    rep.g = params.g;
    bool any = false, all = true;
    for (std::uint64_t p : primes) {
        std::optional<CurvePair<Fq>> pair;
        std::string reason;
        try {
            pair = build_any_pair(reduce_params(params, FiniteField::prime(p)));
        } catch (const DegenerateParamsError& err) {
            for (const auto& c : err.conditions()) reason += (reason.empty() ? "" : "; ") + c;
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::DivisionByZero && err.kind() != ErrorKind::NotSquarefree) throw;
            reason = err.what();
        }
        if (!pair) {
            LEqualityEntry e;
            e.p = p;
            e.skipped = true;
            e.reason = "degenerate reduction: " + reason;
            rep.entries.push_back(std::move(e));
            continue;
        }
        LEqualityEntry e = check_l_equality_at(*pair);
        any = true;
        all = all && e.equal;
        rep.entries.push_back(std::move(e));
    }
    rep.passed = any && all;
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

LPoly l_poly_any(const FqPoly& f, std::uint64_t p, const char* label) {
    if (f.degree() <= 2) return LPoly{0, p, {Integer(1)}};
    return l_polynomial(HyperCurve<Fq>::make(f, label));
}

}  // namespace

SplitReport check_split_at_i(int g, const std::vector<std::int64_t>& a_int, std::uint64_t p) {
    if (p % 4 != 1) raise(ErrorKind::PrimeUnsuitable, "-1 is not a square mod " + std::to_string(p));
    const FiniteField& F = FiniteField::prime(p);
    auto roots = field_sqrt(F.from_int(-1));
    const Fq i = std::min(roots.front(), roots.back());
    std::vector<Fq> a;
    for (auto x : a_int) a.push_back(F.from_int(x));
    validate_params(g, i, a, ValidationLevel::CurveOnly);

    SplitReport rep;
    rep.p = p;
    rep.i = i;
    FqPoly prod_u = FqPoly::constant(F.one());
    for (const auto& aj : a) prod_u *= FqPoly::linear_root(aj);
    const FqPoly f_C = p0_poly(i) * detail::prod_quadratics(i, a);
    const FqPoly u_plus_1(F.one(), {F.one(), F.one()});
    const FqPoly u_var(F.one(), {F.zero(), F.one()});
    const FqPoly f_Q1 = u_plus_1 * prod_u * i;
    const FqPoly f_Q2 = u_var * u_plus_1 * prod_u * i;

    rep.L_C = l_polynomial(HyperCurve<Fq>::make(f_C, "C"));
    rep.L_Q1 = l_poly_any(f_Q1, p, "Q1");
    rep.L_Q2 = l_poly_any(f_Q2, p, "Q2");
    rep.i_is_square = i.is_square();
    for (int mask = 0; mask < 4; ++mask) {
        SplitCombination c;
        c.twist_q1 = mask & 1;
        c.twist_q2 = mask & 2;
        const LPoly l1 = c.twist_q1 ? rep.L_Q1.twisted() : rep.L_Q1;
        const LPoly l2 = c.twist_q2 ? rep.L_Q2.twisted() : rep.L_Q2;
        c.holds = rep.L_C == l1 * l2;
        rep.passed = rep.passed || c.holds;
        rep.combinations.push_back(c);
    }
    return rep;
}

CharpolyReproduction reproduce_genus3_charpoly() {
    CharpolyReproduction rep;
    rep.p = 13;
    for (long x : {1, 2, 3, 44, 39, 338, 2197}) rep.target.push_back(Integer(x));
    const FiniteField& F = FiniteField::prime(rep.p);
    const Fq v = F.from_int(2);
    const std::vector<std::pair<std::string, std::vector<std::int64_t>>> readings{
        {"a_i literal", {1, 3, 4}},
        {"a_i = x_i^2", {1, 9, 16}},
    };
    int matches = 0;
    for (const auto& [name, ints] : readings) {
        std::vector<Fq> a;
        for (auto x : ints) a.push_back(F.from_int(x));
        for (bool with_A : {false, true}) {
            CharpolyCandidate cand;
            cand.reading = name;
            cand.with_A = with_A;
            try {
                validate_params(3, v, a, ValidationLevel::CurveOnly);
                std::vector<Fq> parent_a = a;
                parent_a.push_back(F.zero());
                const Fq A = a_constant(v, parent_a);
                FqPoly f = p0_poly(v) * detail::prod_quadratics(v, a);
                if (with_A) f *= A;
                auto curve = HyperCurve<Fq>::make(f, "C");
                if (curve.genus != 3) raise(ErrorKind::SingularResult, "genus " + std::to_string(curve.genus));
                cand.smooth = true;
                cand.charpoly = frobenius_charpoly(curve);
                cand.matches = cand.charpoly == rep.target;
            } catch (const DegenerateParamsError& err) {
                for (const auto& c : err.conditions()) cand.reason += (cand.reason.empty() ? "" : "; ") + c;
            } catch (const Error& err) {
                cand.reason = err.what();
            }
            matches += cand.matches ? 1 : 0;
            rep.candidates.push_back(std::move(cand));
        }
    }
    rep.passed = matches == 1;
    return rep;
}

}  // namespace forge
