#include "forge/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "forge/error.hpp"

namespace forge {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const noexcept {
    const auto da = std::accumulate(a.begin(), a.end(), 0ULL);
    const auto db = std::accumulate(b.begin(), b.end(), 0ULL);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPolyZ MPolyZ::constant(const std::vector<std::string>& vars, const Integer& c) {
    MPolyZ r(vars);
    r.add_term(Exponent(vars.size(), 0), c);
    return r;
}

MPolyZ MPolyZ::variable(const std::vector<std::string>& vars, const std::string& name) {
    MPolyZ r(vars);
    Exponent e(vars.size(), 0);
    e[r.var_index(name)] = 1;
    r.add_term(e, 1);
    return r;
}

std::size_t MPolyZ::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) raise(ErrorKind::VariableMismatch, "unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

unsigned MPolyZ::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0U));
    return d;
}

unsigned MPolyZ::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MPolyZ::add_term(const Exponent& e, const Integer& c) {
    if (e.size() != vars_.size()) raise(ErrorKind::VariableMismatch, "exponent length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MPolyZ::check_compatible(const MPolyZ& o) const {
    if (vars_ != o.vars_) raise(ErrorKind::VariableMismatch, "polynomials over different variable lists");
}

MPolyZ& MPolyZ::operator+=(const MPolyZ& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPolyZ& MPolyZ::operator-=(const MPolyZ& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPolyZ& MPolyZ::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MPolyZ operator*(const MPolyZ& a, const MPolyZ& b) {
    a.check_compatible(b);
    MPolyZ r(a.vars_);
    Exponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPolyZ MPolyZ::operator-() const {
    MPolyZ r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPolyZ MPolyZ::pow(unsigned n) const {
    MPolyZ r = constant(vars_, 1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

MPolyZ MPolyZ::swap_variables(std::size_t i, std::size_t j) const {
    MPolyZ r(vars_);
    for (const auto& [key, c] : terms_) {
        Exponent e = key;
        std::swap(e[i], e[j]);
        r.add_term(e, c);
    }
    return r;
}

std::vector<MPolyZ> MPolyZ::coefficients_in(std::size_t var) const {
    std::vector<MPolyZ> out(degree_in(var) + 1, MPolyZ(vars_));
    for (const auto& [key, c] : terms_) {
        Exponent e = key;
        const auto d = e[var];
        e[var] = 0;
        out[d].add_term(e, c);
    }
    return out;
}

MPolyZ MPolyZ::from_coefficients(const std::vector<MPolyZ>& coeffs, std::size_t var) {
    if (coeffs.empty()) raise(ErrorKind::InvalidArgument, "empty coefficient list");
    MPolyZ r(coeffs.front().vars_);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        for (const auto& [key, c] : coeffs[d].terms_) {
            Exponent e = key;
            e[var] += static_cast<std::uint32_t>(d);
            r.add_term(e, c);
        }
    }
    return r;
}

Fq MPolyZ::evaluate(const std::vector<Fq>& point) const {
    if (point.size() != vars_.size()) raise(ErrorKind::VariableMismatch, "evaluation point has wrong arity");
    const FiniteField& F = point.front().field();
    Fq sum = F.zero();
    for (const auto& [e, c] : terms_) {
        Fq term = F.from_integer(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term *= point[i].pow(static_cast<std::uint64_t>(e[i]));
        sum += term;
    }
    return sum;
}

Integer MPolyZ::evaluate(const std::vector<Integer>& point) const {
    if (point.size() != vars_.size()) raise(ErrorKind::VariableMismatch, "evaluation point has wrong arity");
    Integer sum = 0;
    for (const auto& [e, c] : terms_) {
        Integer term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            Integer pw;
            mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), e[i]);
            term *= pw;
        }
        sum += term;
    }
    return sum;
}

std::string MPolyZ::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = abs(c);
        const bool constant_term = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (constant_term || mag != 1) {
            s += mag.get_str();
            if (!mono.empty()) s += "*";
        }
        s += mono;
    }
    return s;
}

MPolyZ pseudo_remainder(const MPolyZ& f, const MPolyZ& g, std::size_t var) {
    if (f.vars() != g.vars()) raise(ErrorKind::VariableMismatch, "pseudo_remainder over different variable lists");
    if (g.is_zero()) raise(ErrorKind::DivisionByZero, "pseudo-division by zero");
    const auto gc = g.coefficients_in(var);
    const std::size_t dg = gc.size() - 1;
    const MPolyZ& lead = gc.back();
    auto r = f.coefficients_in(var);
    while (r.size() > dg && !(r.size() == 1 && r[0].is_zero())) {
        const std::size_t dr = r.size() - 1;
        const MPolyZ top = r.back();
        if (top.is_zero()) {
            r.pop_back();
            continue;
        }
        // r <- lead * r - top * var^(dr - dg) * g
        for (auto& c : r) c = c * lead;
        for (std::size_t i = 0; i <= dg; ++i) r[dr - dg + i] -= top * gc[i];
        r.pop_back();
    }
    while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    return MPolyZ::from_coefficients(r, var);
}

bool mpoly_expand_equal(const MPolyZ& lhs, const MPolyZ& rhs) {
    if (lhs.vars() != rhs.vars()) raise(ErrorKind::VariableMismatch, "expressions over different variable lists");
    return lhs.terms() == rhs.terms();
}

}  // namespace forge
