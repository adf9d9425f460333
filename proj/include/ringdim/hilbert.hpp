#pragma once

#include "ringdim/groebner.hpp"

#include <string>
#include <vector>

namespace ringdim {

// Monomial ideal held by its unique minimal generating set (no generator
// divides another), sorted for canonical identity.
class MonomialIdeal {
public:
    MonomialIdeal(std::vector<Monomial> generators, int nvars);
    static MonomialIdeal leading_term_ideal(const GroebnerBasis& basis);

    const std::vector<Monomial>& generators() const { return gens_; }
    int nvars() const { return nvars_; }

    bool contains(const Monomial& m) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
    }

private:
    std::vector<Monomial> gens_;
    int nvars_;
};

// Cumulative Hilbert series of the residue class ring by a monomial ideal,
// written over the fixed denominator (1-t)^(n+1):
//   sum_{d>=0} (# standard monomials of degree <= d) t^d
//     = numerator(t) / (1-t)^(n+1)
struct HilbertSeries {
    std::vector<mpz_class> numerator; // index = power of t, trailing zeros trimmed
    int nvars = 0;

    // same series with (1-t) factors cancelled: numerator and denominator
    // exponent of the reduced display form
    std::pair<std::vector<mpz_class>, int> cancelled() const;
};

enum class PivotHeuristic { MaxDegree, FirstGenerator };

// Inclusion-exclusion recursion on the generators: split off one generator
// m1, recurse on the rest and on their lcms with m1. Result does not depend
// on the pivot choice.
HilbertSeries hilbert_series(const MonomialIdeal& ideal,
                             PivotHeuristic pivot = PivotHeuristic::MaxDegree);

// h(0), h(1), ..., h(count-1) by exact expansion of the series.
std::vector<mpz_class> series_coefficients(const HilbertSeries& series, int count);

// Independent check: counts monomials of total degree <= d outside the ideal
// by direct enumeration.
mpz_class hilbert_function_oracle(const MonomialIdeal& ideal, int d);

// Polynomial over QQ agreeing with the Hilbert function for all d >=
// deg(numerator); its degree equals the combinatorial dimension.
class HilbertPolynomial {
public:
    HilbertPolynomial() = default;
    explicit HilbertPolynomial(std::vector<mpq_class> ascending_coeffs);

    const std::vector<mpq_class>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    mpq_class eval(const mpz_class& x) const;
    std::string str(const std::string& var = "x") const;

    friend bool operator==(const HilbertPolynomial& a, const HilbertPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<mpq_class> coeffs_; // ascending degree, no trailing zeros
};

HilbertPolynomial hilbert_polynomial(const HilbertSeries& series);

// Krull dimension via the Hilbert route: kdim(coefficients) + degree of the
// Hilbert polynomial of the leading term ideal. Requires a reduced monic
// basis under a degree compatible order.
int krull_dimension_degcompat(const GroebnerBasis& basis);

} // namespace ringdim
