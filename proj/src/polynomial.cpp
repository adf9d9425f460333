#include "ringdim/polynomial.hpp"

#include "ringdim/errors.hpp"

#include <algorithm>

namespace ringdim {

Polynomial::Polynomial(CoefficientDomain domain, int nvars) : domain_(std::move(domain)), nvars_(nvars) {
    if (nvars < 1)
        throw input_error("polynomial needs at least one variable");
}

Polynomial Polynomial::from_term(const CoefficientDomain& domain, const Term& t) {
    Polynomial p(domain, t.mono.nvars());
    p.add_term(t.mono, t.coeff);
    return p;
}

Polynomial Polynomial::constant(const CoefficientDomain& domain, int nvars, const Coefficient& c) {
    Polynomial p(domain, nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Coefficient& c) {
    if (m.nvars() != nvars_)
        throw input_error("term variable count mismatch");
    Coefficient v = domain_.add(domain_.zero(), c); // canonicalize into the domain
    if (v.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, v);
        return;
    }
    Coefficient s = domain_.add(it->second, v);
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (domain_ != other.domain_)
        throw input_error("coefficient domain mismatch");
    if (nvars_ != other.nvars_)
        throw input_error("variable count mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_compatible(other);
    Polynomial out(*this);
    for (const auto& [m, c] : other.terms_)
        out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    check_compatible(other);
    Polynomial out(*this);
    for (const auto& [m, c] : other.terms_)
        out.add_term(m, domain_.neg(c));
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_compatible(other);
    Polynomial out(domain_, nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            out.add_term(ma * mb, domain_.mul(ca, cb));
    return out;
}

Polynomial Polynomial::negated() const {
    Polynomial out(domain_, nvars_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, domain_.neg(c));
    return out;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
    Polynomial out(domain_, nvars_);
    for (const auto& [m, k] : terms_)
        out.add_term(m, domain_.mul(k, c));
    return out;
}

Polynomial Polynomial::times_term(const Term& t) const {
    Polynomial out(domain_, nvars_);
    for (const auto& [m, k] : terms_)
        out.add_term(m * t.mono, domain_.mul(k, t.coeff));
    return out;
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty())
        throw input_error("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first))
            best = it;
    return Term{best->second, best->first};
}

std::vector<Term> Polynomial::terms_descending(const MonomialOrder& order) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_)
        out.push_back(Term{c, m});
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    return out;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

std::string Polynomial::str(const VariableSet& vars, const MonomialOrder& order) const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const Term& t : terms_descending(order)) {
        bool negative = t.coeff.sign() < 0;
        Coefficient mag = negative ? Coefficient(mpq_class(-t.coeff.value())) : t.coeff;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (t.mono.is_one())
            out += mag.str();
        else if (mag.is_one())
            out += t.mono.str(vars);
        else
            out += mag.str() + "*" + t.mono.str(vars);
    }
    return out;
}

ReductionResult reduce_with_quotients(const Polynomial& f, const std::vector<Polynomial>& basis,
                                      const MonomialOrder& order) {
    for (const Polynomial& g : basis) {
        if (g.is_zero())
            throw input_error("zero element in reduction basis");
        if (g.domain() != f.domain() || g.nvars() != f.nvars())
            throw input_error("reduction basis element incompatible with input");
    }
    const CoefficientDomain& dom = f.domain();
    bool field = dom.is_field();

    ReductionResult res{Polynomial::zero(dom, f.nvars()), {}};
    res.quotients.assign(basis.size(), Polynomial::zero(dom, f.nvars()));

    struct Leading {
        Monomial mono;
        Coefficient coeff;
    };
    std::vector<Leading> lead;
    lead.reserve(basis.size());
    for (const Polynomial& g : basis) {
        Term t = g.leading_term(order);
        lead.push_back(Leading{t.mono, t.coeff});
    }

    Polynomial work = f;
    while (!work.is_zero()) {
        Term t = work.leading_term(order);
        bool stepped = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!lead[i].mono.divides(t.mono))
                continue;
            Coefficient q;
            if (field) {
                q = dom.mul(t.coeff, dom.inverse(lead[i].coeff));
            } else {
                auto [qq, rr] = dom.euclid_divrem(t.coeff, lead[i].coeff);
                if (qq.is_zero())
                    continue;
                q = qq;
            }
            Term factor{q, lead[i].mono.quotient_of(t.mono)};
            work = work - basis[i].times_term(factor);
            res.quotients[i].add_term(factor.mono, factor.coeff);
            stepped = true;
            break;
        }
        if (!stepped) {
            res.remainder.add_term(t.mono, t.coeff);
            Polynomial lt = Polynomial::from_term(dom, t);
            work = work - lt;
        }
    }
    return res;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
    return reduce_with_quotients(f, basis, order).remainder;
}

} // namespace ringdim
