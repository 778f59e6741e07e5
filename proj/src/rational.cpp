#include "forge/rational.hpp"

#include "forge/error.hpp"

namespace forge {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) raise(ErrorKind::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s, 10));
        return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        raise(ErrorKind::InvalidArgument, "not a rational number: '" + s + "'");
    }
}

Rational Rational::inv() const {
    if (is_zero()) raise(ErrorKind::ZeroInverse, "inverse of 0 in Q");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rational r(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace forge
