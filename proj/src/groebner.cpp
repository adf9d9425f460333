#include "ringdim/groebner.hpp"

#include "ringdim/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringdim {

namespace {

Polynomial unit_normalized(const Polynomial& p, const MonomialOrder& order) {
    const CoefficientDomain& dom = p.domain();
    Coefficient lc = p.leading_coefficient(order);
    if (dom.is_field())
        return lc.is_one() ? p : p.scaled(dom.inverse(lc));
    return lc.sign() < 0 ? p.negated() : p;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

bool coprime_monomials(const Monomial& a, const Monomial& b) {
    for (int k = 0; k < a.nvars(); ++k)
        if (a.exponent(k) > 0 && b.exponent(k) > 0)
            return false;
    return true;
}

// sort key for basis elements: leading monomial ascending, then leading
// coefficient, then term count (ties are impossible in a reduced basis but
// keep intermediate states deterministic)
bool element_below(const Polynomial& a, const Polynomial& b, const MonomialOrder& order) {
    Term ta = a.leading_term(order), tb = b.leading_term(order);
    int c = order.compare(ta.mono, tb.mono);
    if (c != 0)
        return c < 0;
    if (ta.coeff != tb.coeff)
        return ta.coeff < tb.coeff;
    return a.terms() < b.terms();
}

} // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements.size());
    for (const Polynomial& g : elements)
        out.push_back(g.leading_monomial(order));
    return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero())
        throw input_error("s_polynomial of a zero polynomial");
    if (f.domain() != g.domain())
        throw input_error("coefficient domain mismatch");
    const CoefficientDomain& dom = f.domain();
    Term tf = f.leading_term(order), tg = g.leading_term(order);
    Monomial m = Monomial::lcm(tf.mono, tg.mono);
    Coefficient c = dom.lcm(tf.coeff, tg.coeff);
    Term left{dom.div_exact(c, tf.coeff), tf.mono.quotient_of(m)};
    Term right{dom.div_exact(c, tg.coeff), tg.mono.quotient_of(m)};
    return f.times_term(left) - g.times_term(right);
}

Polynomial g_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero())
        throw input_error("g_polynomial of a zero polynomial");
    if (f.domain() != g.domain())
        throw input_error("coefficient domain mismatch");
    const CoefficientDomain& dom = f.domain();
    if (dom.is_field())
        throw input_error("g_polynomial is degenerate over a field");
    Term tf = f.leading_term(order), tg = g.leading_term(order);
    Monomial m = Monomial::lcm(tf.mono, tg.mono);
    auto [d, u, v] = dom.ext_gcd(tf.coeff, tg.coeff);
    Term left{u, tf.mono.quotient_of(m)};
    Term right{v, tg.mono.quotient_of(m)};
    return f.times_term(left) + g.times_term(right);
}

GroebnerBasis strong_groebner(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
    if (generators.empty())
        throw input_error("no generators given");
    const CoefficientDomain dom = generators.front().domain();
    int nvars = generators.front().nvars();
    for (const Polynomial& g : generators) {
        if (g.domain() != dom)
            throw input_error("generators mix coefficient domains");
        if (g.nvars() != nvars)
            throw input_error("generators mix variable counts");
    }

    std::vector<Polynomial> basis;
    for (const Polynomial& g : generators) {
        if (g.is_zero())
            continue;
        Polynomial p = unit_normalized(g, order);
        if (std::find(basis.begin(), basis.end(), p) == basis.end())
            basis.push_back(std::move(p));
    }
    if (basis.empty())
        throw input_error("all generators are zero");

    std::vector<Pair> pairs;
    auto queue_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pairs.push_back(Pair{i, j,
                                 Monomial::lcm(basis[i].leading_monomial(order),
                                               basis[j].leading_monomial(order))});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        queue_pairs_for(j);

    auto consider = [&](Polynomial h) {
        Polynomial r = reduce(h, basis, order);
        if (r.is_zero())
            return;
        basis.push_back(unit_normalized(r, order));
        queue_pairs_for(basis.size() - 1);
    };

    while (!pairs.empty()) {
        // normal strategy: smallest lcm first, index pair breaking exact ties
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            int c = order.compare(pairs[k].lcm, pairs[best].lcm);
            if (c < 0 || (c == 0 && std::pair(pairs[k].i, pairs[k].j) < std::pair(pairs[best].i, pairs[best].j)))
                best = k;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        // copies: consider() may grow the vector and invalidate references
        Polynomial f = basis[pr.i];
        Polynomial g = basis[pr.j];
        Term tf = f.leading_term(order), tg = g.leading_term(order);

        bool skip_s = coprime_monomials(tf.mono, tg.mono) && dom.is_unit(dom.gcd(tf.coeff, tg.coeff));
        if (!skip_s)
            consider(s_polynomial(f, g, order));

        if (!dom.is_field()) {
            bool skip_g = dom.divides(tf.coeff, tg.coeff) || dom.divides(tg.coeff, tf.coeff);
            if (!skip_g)
                consider(g_polynomial(f, g, order));
        }
    }

    // minimalize: drop anything the rest already reduces to zero
    std::sort(basis.begin(), basis.end(),
              [&](const Polynomial& a, const Polynomial& b) { return element_below(a, b, order); });
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> rest;
            rest.reserve(basis.size() - 1);
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (k != i)
                    rest.push_back(basis[k]);
            if (rest.empty())
                break;
            if (reduce(basis[i], rest, order).is_zero()) {
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }

    // tail reduction: leading terms are pairwise irreducible now, so normal
    // forms of the tails make each element canonical
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Term lt = basis[i].leading_term(order);
        Polynomial tail = basis[i] - Polynomial::from_term(dom, lt);
        if (tail.is_zero())
            continue;
        Polynomial r = reduce(tail, basis, order);
        basis[i] = Polynomial::from_term(dom, lt) + r;
    }

    std::sort(basis.begin(), basis.end(),
              [&](const Polynomial& a, const Polynomial& b) { return element_below(a, b, order); });

    GroebnerBasis out{std::move(basis), order, dom, nvars, true, true};
    for (const Polynomial& g : out.elements)
        if (!g.leading_coefficient(order).is_one())
            out.monic = false;
    return out;
}

LeadingCoeffIdeal leading_coeff_ideal(const GroebnerBasis& basis, const Monomial& m) {
    LeadingCoeffIdeal out{m, {}, basis.domain.zero()};
    for (const Polynomial& g : basis.elements) {
        Term t = g.leading_term(basis.order);
        if (t.mono.divides(m))
            out.generators.push_back(t.coeff);
    }
    for (const Coefficient& c : out.generators)
        out.gcd = basis.domain.gcd(out.gcd, c);
    return out;
}

FreenessReport is_free_representation(const GroebnerBasis& basis) {
    if (!basis.reduced)
        throw input_error("freeness test expects a reduced basis");
    for (const Polynomial& g : basis.elements) {
        Term t = g.leading_term(basis.order);
        if (!basis.domain.is_unit(t.coeff))
            return FreenessReport{false, leading_coeff_ideal(basis, t.mono)};
    }
    return FreenessReport{true, std::nullopt};
}

std::string not_free_description(const GroebnerBasis& basis) {
    FreenessReport rep = is_free_representation(basis);
    if (rep.is_free || !rep.witness)
        return "not a free representation";
    std::string gens;
    for (const Coefficient& c : rep.witness->generators) {
        if (!gens.empty())
            gens += ", ";
        gens += c.str();
    }
    return "not a free representation: leading coefficient ideal <" + gens + "> (gcd " +
           rep.witness->gcd.str() + ") at a leading monomial is not the unit ideal";
}

GroebnerBasis extend_mod_p(const GroebnerBasis& basis, const mpz_class& p) {
    if (basis.domain.kind() != DomainKind::Integers)
        throw input_error("mod-p extension starts from a basis over ZZ");
    if (!basis.monic)
        throw input_error("mod-p extension requires a monic basis");
    CoefficientDomain fp = CoefficientDomain::prime_field(p);

    GroebnerBasis out{{}, basis.order, fp, basis.nvars, false, true};
    for (const Polynomial& g : basis.elements) {
        Polynomial img(fp, basis.nvars);
        for (const auto& [m, c] : g.terms())
            img.add_term(m, fp.from_integer(c.numerator()));
        out.elements.push_back(std::move(img));
    }

    // postcondition checks: leading monomials preserved, image closed under
    // S-polynomial reduction
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        if (out.elements[i].leading_monomial(out.order) != basis.elements[i].leading_monomial(basis.order))
            throw std::logic_error("mod-p extension changed a leading monomial");
    }
    for (std::size_t i = 0; i < out.elements.size(); ++i)
        for (std::size_t j = i + 1; j < out.elements.size(); ++j) {
            Polynomial s = s_polynomial(out.elements[i], out.elements[j], out.order);
            if (!s.is_zero() && !reduce(s, out.elements, out.order).is_zero())
                throw std::logic_error("mod-p extension image is not a Groebner basis");
        }

    out.reduced = true;
    for (std::size_t i = 0; i < out.elements.size() && out.reduced; ++i) {
        std::vector<Polynomial> rest;
        for (std::size_t k = 0; k < out.elements.size(); ++k)
            if (k != i)
                rest.push_back(out.elements[k]);
        if (rest.empty())
            break;
        if (reduce(out.elements[i], rest, out.order) != out.elements[i])
            out.reduced = false;
    }
    return out;
}

} // namespace ringdim
