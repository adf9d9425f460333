#pragma once

#include "ringdim/polynomial.hpp"

#include <optional>
#include <vector>

namespace ringdim {

// Output of the basis construction. Over fields this is the classical
// reduced Groebner basis; over ZZ it is the reduced strong basis (every
// leading term of the ideal is term-divisible by some element's leading
// term, coefficient included). Elements are sorted ascending by leading
// monomial.
struct GroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order;
    CoefficientDomain domain;
    int nvars = 0;
    bool reduced = false;
    bool monic = false;

    std::vector<Monomial> leading_monomials() const;
};

// lcm-scaled difference cancelling the leading terms:
//   m = lcm(lm f, lm g), c = lcm(lc f, lc g)
//   S = (c/lc f)*(m/lm f)*f - (c/lc g)*(m/lm g)*g
// Over fields lcm of units is 1, giving the classical monic S-polynomial.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Bezout combination realizing gcd(lc f, lc g) on top of lcm(lm f, lm g):
//   (d, u, v) = ext_gcd(lc f, lc g)
//   G = u*(m/lm f)*f + v*(m/lm g)*g,  lt(G) = d*m
// Only meaningful over a non-field Euclidean domain; rejected over fields.
Polynomial g_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Buchberger completion with S-polynomials (and G-polynomials over ZZ),
// followed by minimalization and tail reduction. Deterministic for a given
// input list. Errors when all generators are zero.
GroebnerBasis strong_groebner(const std::vector<Polynomial>& generators, const MonomialOrder& order);

// The ideal of leading coefficients attached to one monomial: collects lc(g)
// for every basis element whose lm divides m, plus the gcd as the canonical
// single generator (fields: 1 when nonempty, 0 when empty).
struct LeadingCoeffIdeal {
    Monomial monomial;
    std::vector<Coefficient> generators;
    Coefficient gcd;
};
LeadingCoeffIdeal leading_coeff_ideal(const GroebnerBasis& basis, const Monomial& m);

// The residue ring is a free module over the coefficient ring exactly when
// the reduced basis is monic; the witness pins the first non-unit leading
// coefficient ideal otherwise.
struct FreenessReport {
    bool is_free = false;
    std::optional<LeadingCoeffIdeal> witness;
};
FreenessReport is_free_representation(const GroebnerBasis& basis);

// Diagnostic line naming the witness, for the refusal paths of the dimension
// routes.
std::string not_free_description(const GroebnerBasis& basis);

// Coefficient-wise reduction mod p of a monic basis over ZZ. The image is a
// Groebner basis over Fp with the same leading monomials; both facts are
// verified internally before returning.
GroebnerBasis extend_mod_p(const GroebnerBasis& basis, const mpz_class& p);

} // namespace ringdim
