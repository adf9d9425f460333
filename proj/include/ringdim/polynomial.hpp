#pragma once

#include "ringdim/coeff.hpp"
#include "ringdim/monomial.hpp"
#include "ringdim/order.hpp"

#include <map>
#include <string>
#include <vector>

namespace ringdim {

struct Term {
    Coefficient coeff;
    Monomial mono;
};

// Sparse multivariate polynomial over a fixed coefficient domain. Terms are
// keyed structurally; ranking under a monomial order happens at use sites so
// one polynomial can be viewed under several orders.
class Polynomial {
public:
    Polynomial(CoefficientDomain domain, int nvars);
    static Polynomial zero(const CoefficientDomain& domain, int nvars) { return Polynomial(domain, nvars); }
    static Polynomial from_term(const CoefficientDomain& domain, const Term& t);
    static Polynomial constant(const CoefficientDomain& domain, int nvars, const Coefficient& c);

    const CoefficientDomain& domain() const { return domain_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Coefficient>& terms() const { return terms_; }

    // adds c*m into the polynomial, fusing with an existing term and dropping
    // zero results
    void add_term(const Monomial& m, const Coefficient& c);

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial negated() const;
    Polynomial scaled(const Coefficient& c) const;
    Polynomial times_term(const Term& t) const;

    Term leading_term(const MonomialOrder& order) const;
    Monomial leading_monomial(const MonomialOrder& order) const { return leading_term(order).mono; }
    Coefficient leading_coefficient(const MonomialOrder& order) const { return leading_term(order).coeff; }
    std::vector<Term> terms_descending(const MonomialOrder& order) const;
    int total_degree() const; // -1 for the zero polynomial

    std::string str(const VariableSet& vars, const MonomialOrder& order) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.domain_ == b.domain_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void check_compatible(const Polynomial& other) const;

    CoefficientDomain domain_;
    int nvars_;
    std::map<Monomial, Coefficient> terms_;
};

struct ReductionResult {
    Polynomial remainder;
    // one quotient per basis element: f = sum quotients[i]*basis[i] + remainder
    std::vector<Polynomial> quotients;
};

// Normal form of f modulo basis under order. Over ZZ a term c*m is reducible
// by g when lm(g) | m and euclid_divrem(c, lc(g)) has a nonzero quotient; the
// coefficient left behind is the least nonnegative remainder. Over fields
// divisibility of the monomial suffices. Deterministic: first reducer in
// basis list order wins at every step.
ReductionResult reduce_with_quotients(const Polynomial& f, const std::vector<Polynomial>& basis,
                                      const MonomialOrder& order);
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order);

} // namespace ringdim
