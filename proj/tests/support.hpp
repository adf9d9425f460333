#pragma once

#include "ringdim/dimension.hpp"
#include "ringdim/hilbert.hpp"
#include "ringdim/parser.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace ringdim;

inline VariableSet letters(int n) {
    static const std::vector<std::string> pool = {"x", "y", "z", "w", "u", "v", "s", "r"};
    std::vector<std::string> names(pool.begin(), pool.begin() + n);
    return VariableSet(names);
}

inline Polynomial pol(const CoefficientDomain& dom, const VariableSet& vars, const std::string& text) {
    return parse_polynomial(text, vars, dom);
}

inline std::vector<Polynomial> pols(const CoefficientDomain& dom, const VariableSet& vars,
                                    const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    for (const std::string& t : texts)
        out.push_back(pol(dom, vars, t));
    return out;
}

inline Monomial mono(std::vector<int> exps) { return Monomial(std::move(exps)); }

// a minimal set of monic monomials is already its own reduced strong basis
inline GroebnerBasis monomial_basis(const MonomialIdeal& ideal, const CoefficientDomain& dom,
                                    const MonomialOrder& order) {
    GroebnerBasis b{{}, order, dom, ideal.nvars(), true, true};
    for (const Monomial& m : ideal.generators())
        b.elements.push_back(Polynomial::from_term(dom, Term{dom.one(), m}));
    return b;
}

inline Polynomial random_polynomial(std::mt19937& rng, const CoefficientDomain& dom, int nvars,
                                    int max_terms, int max_total_degree) {
    std::uniform_int_distribution<int> term_count(1, max_terms);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> expo(0, max_total_degree);
    while (true) {
        Polynomial p(dom, nvars);
        int terms = term_count(rng);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
            int budget = expo(rng);
            for (int v = 0; v < nvars && budget > 0; ++v) {
                std::uniform_int_distribution<int> take(0, budget);
                exps[static_cast<std::size_t>(v)] = take(rng);
                budget -= exps[static_cast<std::size_t>(v)];
            }
            int c = coeff(rng);
            if (c == 0)
                c = 1;
            p.add_term(Monomial(exps), dom.from_integer(c));
        }
        if (!p.is_zero())
            return p;
    }
}

inline MonomialIdeal random_monomial_ideal(std::mt19937& rng, int nvars, int max_gens, int max_exp) {
    std::uniform_int_distribution<int> gen_count(1, max_gens);
    std::uniform_int_distribution<int> expo(0, max_exp);
    while (true) {
        std::vector<Monomial> gens;
        int k = gen_count(rng);
        for (int i = 0; i < k; ++i) {
            std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
            for (int v = 0; v < nvars; ++v)
                exps[static_cast<std::size_t>(v)] = expo(rng);
            Monomial m(exps);
            if (m.degree() > 0)
                gens.push_back(m);
        }
        if (!gens.empty())
            return MonomialIdeal(std::move(gens), nvars);
    }
}

// every generator and every S-/G-polynomial reduces to zero modulo the basis
inline bool closed_under_reduction(const std::vector<Polynomial>& generators,
                                   const GroebnerBasis& basis) {
    for (const Polynomial& g : generators)
        if (!reduce(g, basis.elements, basis.order).is_zero())
            return false;
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        for (std::size_t j = i + 1; j < basis.elements.size(); ++j) {
            Polynomial s = s_polynomial(basis.elements[i], basis.elements[j], basis.order);
            if (!reduce(s, basis.elements, basis.order).is_zero())
                return false;
            if (!basis.domain.is_field()) {
                Polynomial gp = g_polynomial(basis.elements[i], basis.elements[j], basis.order);
                if (!reduce(gp, basis.elements, basis.order).is_zero())
                    return false;
            }
        }
    return true;
}

// exhaustive maximal strongly independent subsets, same sort as the library
inline std::vector<VariableSubset> brute_force_maximal_sets(const GroebnerBasis& basis) {
    int n = basis.nvars;
    std::vector<VariableSubset> independent;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v))
                idx.push_back(v);
        VariableSubset s(idx);
        if (is_strongly_independent(s, basis))
            independent.push_back(s);
    }
    std::vector<VariableSubset> maximal;
    for (const VariableSubset& a : independent) {
        bool proper = false;
        for (const VariableSubset& b : independent)
            if (a != b && a.subset_of(b)) {
                proper = true;
                break;
            }
        if (!proper)
            maximal.push_back(a);
    }
    if (maximal.empty())
        maximal.push_back(VariableSubset());
    std::sort(maximal.begin(), maximal.end(), [](const VariableSubset& a, const VariableSubset& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a.indices() < b.indices();
    });
    return maximal;
}

} // namespace testsupport
