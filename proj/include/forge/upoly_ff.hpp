#pragma once

#include <cstdint>
#include <vector>

#include "forge/finite_field.hpp"
#include "forge/upoly.hpp"

namespace forge {

using FqPoly = UPoly<Fq>;

/// Maps prime-field elements (or elements already in W) into W.
Fq lift(const Fq& a, const FiniteField& W);
FqPoly lift(const FqPoly& f, const FiniteField& W);

/// Embedding F_{p^e} -> F_{p^d} for e | d, fixed by sending the generator of
/// the source to the smallest root of its modulus in the target.
class FieldEmbedding {
public:
    FieldEmbedding(const FiniteField& from, const FiniteField& to);

    const FiniteField& from() const noexcept { return *from_; }
    const FiniteField& to() const noexcept { return *to_; }
    Fq operator()(const Fq& a) const;

private:
    const FiniteField* from_;
    const FiniteField* to_;
    std::vector<Fq> powers_;  // images of t^i
};

/// x^n mod m for a possibly huge exponent.
FqPoly x_pow_mod(const Integer& n, const FqPoly& m);

/// All distinct roots of f lying in f's coefficient field, sorted.
std::vector<Fq> roots_in_field(const FqPoly& f, std::uint64_t seed = kDefaultFieldSeed);

struct DegreePart {
    int degree;        // every irreducible factor of `product` has this degree
    FqPoly product;    // monic
};

/// Distinct-degree factorization of a squarefree polynomial.
std::vector<DegreePart> distinct_degree_factorization(const FqPoly& f);

/// Degrees of the irreducible factors of a squarefree f, ascending.
std::vector<int> factor_degrees(const FqPoly& f);

struct ExtRoot {
    Fq root;     // element of the minimal field F_{p^degree}
    int degree;
};

/// upoly_roots_in_ext: roots of a squarefree u over F_p lying in some
/// F_{p^e} with e <= max_degree, each tagged with its minimal field.
/// Throws NotSquarefree.
std::vector<ExtRoot> upoly_roots_in_ext(const FqPoly& u, int max_degree);

/// Monic irreducible test over the coefficient field.
bool is_irreducible(const FqPoly& f);

}  // namespace forge
