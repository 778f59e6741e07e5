#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "forge/finite_field.hpp"
#include "forge/rational.hpp"

namespace forge {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const noexcept;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients over an ordered list of named indeterminates.
class MPolyZ {
public:
    using Terms = std::map<Exponent, Integer, GrlexLess>;

    explicit MPolyZ(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPolyZ constant(const std::vector<std::string>& vars, const Integer& c);
    static MPolyZ variable(const std::vector<std::string>& vars, const std::string& name);

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t var_index(const std::string& name) const;
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;

    /// Adds c * x^e, dropping the term if the coefficient cancels.
    void add_term(const Exponent& e, const Integer& c);

    MPolyZ& operator+=(const MPolyZ& o);
    MPolyZ& operator-=(const MPolyZ& o);
    MPolyZ& operator*=(const Integer& c);
    friend MPolyZ operator+(MPolyZ a, const MPolyZ& b) { return a += b; }
    friend MPolyZ operator-(MPolyZ a, const MPolyZ& b) { return a -= b; }
    friend MPolyZ operator*(MPolyZ a, const Integer& c) { return a *= c; }
    friend MPolyZ operator*(const Integer& c, MPolyZ a) { return a *= c; }
    friend MPolyZ operator*(const MPolyZ& a, const MPolyZ& b);
    MPolyZ operator-() const;
    MPolyZ pow(unsigned n) const;

    /// Structural equality; polynomials over different variable lists are unequal.
    friend bool operator==(const MPolyZ& a, const MPolyZ& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

    /// Exchange the roles of two variables.
    MPolyZ swap_variables(std::size_t i, std::size_t j) const;

    /// Coefficients with respect to one variable: result[d] multiplies var^d.
    std::vector<MPolyZ> coefficients_in(std::size_t var) const;
    static MPolyZ from_coefficients(const std::vector<MPolyZ>& coeffs, std::size_t var);

    Fq evaluate(const std::vector<Fq>& point) const;
    Integer evaluate(const std::vector<Integer>& point) const;

    /// Terms in descending graded-lex order, e.g. "x^2*z^2 - v^2*x^2 + 1".
    std::string to_string() const;

private:
    void check_compatible(const MPolyZ& o) const;

    std::vector<std::string> vars_;
    Terms terms_;
};

/// Pseudo-remainder of f by g with respect to `var`: lc(g)^k f = q g + r with
/// deg_var r < deg_var g. r = 0 iff g divides f over the fraction field of the
/// remaining variables (for g primitive in var).
MPolyZ pseudo_remainder(const MPolyZ& f, const MPolyZ& g, std::size_t var);

/// mpoly_expand_equal: true iff both sides expand to identical canonical forms.
/// Throws VariableMismatch when the variable lists differ.
bool mpoly_expand_equal(const MPolyZ& lhs, const MPolyZ& rhs);

}  // namespace forge
