#pragma once

#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "forge/error.hpp"
#include "forge/rational.hpp"

namespace forge {

/// Dense univariate polynomial over a field element type T (Rational or Fq).
/// Coefficients are stored low to high with no trailing zeros; the zero
/// polynomial has no coefficients. A prototype zero element pins the field.
template <class T>
class UPoly {
public:
    explicit UPoly(const T& proto) : zero_(proto.zero()) {}
    UPoly(const T& proto, std::vector<T> coeffs) : zero_(proto.zero()), c_(std::move(coeffs)) { trim(); }

    static UPoly constant(const T& c) { return UPoly(c, {c}); }
    static UPoly monomial(const T& c, int degree) {
        std::vector<T> v(static_cast<std::size_t>(degree) + 1, c.zero());
        v.back() = c;
        return UPoly(c, std::move(v));
    }
    /// The polynomial x - r.
    static UPoly linear_root(const T& r) { return UPoly(r, {-r, r.one()}); }
    static UPoly from_ints(const T& proto, std::initializer_list<long> coeffs) {
        std::vector<T> v;
        for (long c : coeffs) v.push_back(proto.from_int(c));
        return UPoly(proto, std::move(v));
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    const T& zero_element() const noexcept { return zero_; }
    T coeff(int i) const {
        if (i < 0 || i > degree()) return zero_;
        return c_[static_cast<std::size_t>(i)];
    }
    const T& lead() const {
        if (c_.empty()) raise(ErrorKind::InvalidArgument, "leading coefficient of the zero polynomial");
        return c_.back();
    }

    T eval(const T& x) const {
        T r = zero_;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    UPoly derivative() const {
        std::vector<T> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * zero_.from_int(static_cast<std::int64_t>(i)));
        return UPoly(zero_, std::move(d));
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * lead().inv();
    }

    /// f(x + r).
    UPoly taylor_shift(const T& r) const {
        std::vector<T> a = c_;
        const std::size_t n = a.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j > i; --j) a[j - 1] = a[j - 1] + r * a[j];
        return UPoly(zero_, std::move(a));
    }

    /// x^n f(1/x); requires n >= degree().
    UPoly reversed(int n) const {
        std::vector<T> r(static_cast<std::size_t>(n) + 1, zero_);
        for (int i = 0; i <= degree(); ++i) r[static_cast<std::size_t>(n - i)] = c_[static_cast<std::size_t>(i)];
        return UPoly(zero_, std::move(r));
    }

    /// f(c x).
    UPoly scale_variable(const T& c) const {
        std::vector<T> r = c_;
        T pw = zero_.one();
        for (auto& coeff : r) {
            coeff = coeff * pw;
            pw = pw * c;
        }
        return UPoly(zero_, std::move(r));
    }

    UPoly& operator+=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator*=(const T& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const T& s) { return a *= s; }
    friend UPoly operator*(const T& s, UPoly a) { return a *= s; }
    UPoly operator-() const {
        UPoly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(a.zero_);
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(a.zero_, std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    /// Euclidean division; throws DivisionByZero for a zero divisor.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
        if (a.degree() < b.degree()) return {UPoly(a.zero_), a};
        std::vector<T> r = a.c_;
        std::vector<T> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, a.zero_);
        const T lead_inv = b.lead().inv();
        const std::size_t bn = b.c_.size();
        for (std::size_t shift = q.size(); shift-- > 0;) {
            const T c = r[shift + bn - 1] * lead_inv;
            q[shift] = c;
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < bn; ++i) r[shift + i] -= c * b.c_[i];
        }
        r.resize(bn - 1, a.zero_);
        return {UPoly(a.zero_, std::move(q)), UPoly(a.zero_, std::move(r))};
    }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const T& c = c_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")";
            if (i >= 1) s += "*" + var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const UPoly& f) { return os << f.to_string(); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    T zero_;
    std::vector<T> c_;
};

/// Monic gcd (zero if both inputs are zero).
template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
    while (!b.is_zero()) {
        UPoly<T> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// (g, s, t) with g = s a + t b monic.
template <class T>
std::tuple<UPoly<T>, UPoly<T>, UPoly<T>> xgcd(const UPoly<T>& a, const UPoly<T>& b) {
    const T& z = a.zero_element();
    UPoly<T> r0 = a, r1 = b;
    UPoly<T> s0 = UPoly<T>::constant(z.one()), s1(z);
    UPoly<T> t0(z), t1 = UPoly<T>::constant(z.one());
    while (!r1.is_zero()) {
        auto [q, r] = UPoly<T>::divmod(r0, r1);
        UPoly<T> s = s0 - q * s1;
        UPoly<T> t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const T li = r0.lead().inv();
    return {r0 * li, s0 * li, t0 * li};
}

/// Inverse of a modulo m; throws ZeroInverse when gcd(a, m) != 1.
template <class T>
UPoly<T> inv_mod(const UPoly<T>& a, const UPoly<T>& m) {
    auto [g, s, t] = xgcd(a % m, m);
    if (g.degree() != 0) raise(ErrorKind::ZeroInverse, "polynomial not invertible modulo " + m.to_string());
    return s % m;
}

template <class T>
UPoly<T> mul_mod(const UPoly<T>& a, const UPoly<T>& b, const UPoly<T>& m) {
    return (a * b) % m;
}

template <class T>
UPoly<T> pow_mod(UPoly<T> base, const Integer& e, const UPoly<T>& m) {
    UPoly<T> r = UPoly<T>::constant(base.zero_element().one()) % m;
    base = base % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mul_mod(r, r, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul_mod(r, base, m);
    }
    return r;
}

template <class T>
bool is_squarefree(const UPoly<T>& f) {
    if (f.degree() <= 0) return !f.is_zero();
    return gcd(f, f.derivative()).degree() == 0;
}

/// Product of the given polynomials.
template <class T>
UPoly<T> product(const T& proto, const std::vector<UPoly<T>>& factors) {
    UPoly<T> r = UPoly<T>::constant(proto.one());
    for (const auto& f : factors) r *= f;
    return r;
}

}  // namespace forge
