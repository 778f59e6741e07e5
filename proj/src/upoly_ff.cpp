#include "forge/upoly_ff.hpp"

#include <algorithm>

#include "forge/rng.hpp"

namespace forge {

Fq lift(const Fq& a, const FiniteField& W) {
    if (&a.field() == &W) return a;
    if (a.field().characteristic() != W.characteristic())
        raise(ErrorKind::InvalidArgument, "cannot lift between different characteristics");
    return W.from_u64(a.to_u64());
}

FqPoly lift(const FqPoly& f, const FiniteField& W) {
    std::vector<Fq> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(lift(x, W));
    return FqPoly(W.zero(), std::move(c));
}

FieldEmbedding::FieldEmbedding(const FiniteField& from, const FiniteField& to) : from_(&from), to_(&to) {
    if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
        raise(ErrorKind::InvalidArgument, "no embedding " + from.name() + " -> " + to.name());
    Fq image = to.zero();
    if (from.degree() == 1) {
        image = to.zero();
    } else if (&from == &to) {
        image = to.generator();
    } else {
        std::vector<Fq> m;
        for (auto c : from.modulus()) m.push_back(to.from_u64(c));
        auto roots = roots_in_field(FqPoly(to.zero(), std::move(m)));
        if (roots.empty()) raise(ErrorKind::InvalidArgument, "modulus has no root in target field");
        image = roots.front();
    }
    Fq pw = to.one();
    for (int i = 0; i < from.degree(); ++i) {
        powers_.push_back(pw);
        pw *= image;
    }
}

Fq FieldEmbedding::operator()(const Fq& a) const {
    if (&a.field() != from_) raise(ErrorKind::InvalidArgument, "element not in embedding source");
    Fq r = to_->zero();
    for (int i = 0; i < from_->degree(); ++i) r += to_->from_u64(a.coeff(i)) * powers_[static_cast<std::size_t>(i)];
    return r;
}

FqPoly x_pow_mod(const Integer& n, const FqPoly& m) {
    const Fq& z = m.zero_element();
    return pow_mod(FqPoly(z, {z.zero(), z.one()}), n, m);
}

namespace {

void split_linear(const FqPoly& h, Rng& rng, std::vector<Fq>& out) {
    if (h.degree() <= 0) return;
    if (h.degree() == 1) {
        out.push_back(-h.coeff(0) / h.coeff(1));
        return;
    }
    const FiniteField& F = h.zero_element().field();
    const Integer half = (F.order() - 1) / 2;
    const Fq one = F.one();
    for (;;) {
        const Fq a = F.random(rng);
        FqPoly base(one, {a, one});
        FqPoly t = pow_mod(base, half, h) - FqPoly::constant(one);
        FqPoly g = gcd(h, t);
        if (g.degree() > 0 && g.degree() < h.degree()) {
            split_linear(g, rng, out);
            split_linear(h / g, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Fq> roots_in_field(const FqPoly& f, std::uint64_t seed) {
    if (f.degree() <= 0) return {};
    const FiniteField& F = f.zero_element().field();
    const FqPoly m = f.monic();
    const FqPoly xq = x_pow_mod(F.order(), m);
    FqPoly h = gcd(m, xq - FqPoly(F.zero(), {F.zero(), F.one()}));
    std::vector<Fq> roots;
    Rng rng(seed);
    split_linear(h, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<DegreePart> distinct_degree_factorization(const FqPoly& f) {
    std::vector<DegreePart> parts;
    if (f.degree() <= 0) return parts;
    const FiniteField& F = f.zero_element().field();
    const FqPoly x(F.zero(), {F.zero(), F.one()});
    FqPoly rest = f.monic();
    FqPoly xpow = x;  // x^{q^e} mod rest
    const Integer q = F.order();
    for (int e = 1; rest.degree() >= 2 * e; ++e) {
        xpow = pow_mod(xpow, q, rest);
        FqPoly g = gcd(rest, xpow - x);
        if (g.degree() > 0) {
            parts.push_back({e, g});
            rest = rest / g;
            xpow = xpow % rest;
        }
    }
    if (rest.degree() > 0) parts.push_back({rest.degree(), rest});
    return parts;
}

std::vector<int> factor_degrees(const FqPoly& f) {
    std::vector<int> degrees;
    for (const auto& part : distinct_degree_factorization(f))
        for (int i = 0; i < part.product.degree() / part.degree; ++i) degrees.push_back(part.degree);
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

std::vector<ExtRoot> upoly_roots_in_ext(const FqPoly& u, int max_degree) {
    if (u.is_zero()) raise(ErrorKind::InvalidArgument, "roots of the zero polynomial");
    if (!u.zero_element().field().is_prime_field())
        raise(ErrorKind::InvalidArgument, "upoly_roots_in_ext expects a polynomial over F_p");
    if (!is_squarefree(u)) raise(ErrorKind::NotSquarefree, u.to_string() + " has a repeated factor");
    const std::uint64_t p = u.zero_element().characteristic();
    std::vector<ExtRoot> out;
    for (const auto& part : distinct_degree_factorization(u)) {
        if (part.degree > max_degree) continue;
        const FiniteField& E = ext_build(p, part.degree);
        for (const auto& r : roots_in_field(lift(part.product, E))) out.push_back({r, part.degree});
    }
    return out;
}

bool is_irreducible(const FqPoly& f) {
    if (f.degree() <= 0) return false;
    if (!is_squarefree(f)) return false;
    auto degrees = factor_degrees(f);
    return degrees.size() == 1;
}

}  // namespace forge
