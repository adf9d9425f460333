#include "ringdim/hilbert.hpp"

#include "ringdim/errors.hpp"

#include <algorithm>

namespace ringdim {

namespace {

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> keep;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i]))
                redundant = true;
        if (!redundant)
            keep.push_back(gens[i]);
    }
    return keep;
}

// numerator arithmetic over the fixed denominator (1-t)^(n+1)
using Numerator = std::vector<mpz_class>;

void add_into(Numerator& a, const Numerator& b, int sign) {
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] += sign * b[i];
}

void trim(Numerator& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Numerator series_numerator(std::vector<Monomial> gens, PivotHeuristic pivot) {
    if (gens.empty())
        return {1};
    std::size_t pick = 0;
    if (pivot == PivotHeuristic::MaxDegree) {
        for (std::size_t i = 1; i < gens.size(); ++i) {
            if (gens[i].degree() > gens[pick].degree() ||
                (gens[i].degree() == gens[pick].degree() && gens[i] < gens[pick]))
                pick = i;
        }
    }
    Monomial m1 = gens[pick];
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pick));

    std::vector<Monomial> lcms;
    lcms.reserve(gens.size());
    for (const Monomial& m : gens)
        lcms.push_back(Monomial::lcm(m1, m));
    lcms = minimal_generators(std::move(lcms));

    // 1 - t^deg(m1); for a degree 0 pivot the entries alias and cancel,
    // which is right: the unit ideal leaves no standard monomials
    Numerator num(static_cast<std::size_t>(m1.degree()) + 1, 0);
    num.front() = 1;
    num.back() += -1;
    add_into(num, series_numerator(std::move(gens), pivot), +1);
    add_into(num, series_numerator(std::move(lcms), pivot), -1);
    trim(num);
    return num;
}

mpz_class binom(const mpz_class& top, unsigned long k) {
    if (top < 0)
        throw input_error("negative binomial argument");
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
    return r;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators, int nvars) : nvars_(nvars) {
    if (nvars < 1)
        throw input_error("monomial ideal needs at least one variable");
    for (const Monomial& m : generators)
        if (m.nvars() != nvars)
            throw input_error("generator width does not match the variable count");
    gens_ = minimal_generators(std::move(generators));
}

MonomialIdeal MonomialIdeal::leading_term_ideal(const GroebnerBasis& basis) {
    return MonomialIdeal(basis.leading_monomials(), basis.nvars);
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

std::pair<std::vector<mpz_class>, int> HilbertSeries::cancelled() const {
    Numerator num = numerator;
    int denom = nvars + 1;
    auto value_at_one = [](const Numerator& v) {
        mpz_class s = 0;
        for (const mpz_class& a : v)
            s += a;
        return s;
    };
    while (denom > 0 && !num.empty() && value_at_one(num) == 0) {
        // synthetic division by (1-t): q[i] = a[i] + q[i-1]
        Numerator q(num.size() - 1);
        mpz_class carry = 0;
        for (std::size_t i = 0; i + 1 < num.size(); ++i) {
            carry += num[i];
            q[i] = carry;
        }
        num = std::move(q);
        trim(num);
        --denom;
    }
    return {num, denom};
}

HilbertSeries hilbert_series(const MonomialIdeal& ideal, PivotHeuristic pivot) {
    HilbertSeries out;
    out.nvars = ideal.nvars();
    out.numerator = series_numerator(ideal.generators(), pivot);
    return out;
}

std::vector<mpz_class> series_coefficients(const HilbertSeries& series, int count) {
    if (count < 0)
        throw input_error("coefficient count must be nonnegative");
    std::vector<mpz_class> out;
    out.reserve(static_cast<std::size_t>(count));
    unsigned long n = static_cast<unsigned long>(series.nvars);
    for (int d = 0; d < count; ++d) {
        mpz_class h = 0;
        for (std::size_t i = 0; i < series.numerator.size(); ++i) {
            if (static_cast<int>(i) > d)
                break;
            // expansion of 1/(1-t)^(n+1): C(d+n, n) at degree d
            h += series.numerator[i] * binom(mpz_class(d - static_cast<int>(i) + static_cast<int>(n)), n);
        }
        out.push_back(h);
    }
    return out;
}

mpz_class hilbert_function_oracle(const MonomialIdeal& ideal, int d) {
    if (d < 0)
        throw input_error("degree must be nonnegative");
    mpz_class count = 0;
    std::vector<int> exps(static_cast<std::size_t>(ideal.nvars()), 0);
    auto enumerate = [&](auto&& self, int var, int budget) -> void {
        if (var == ideal.nvars()) {
            if (!ideal.contains(Monomial(exps)))
                ++count;
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            exps[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, budget - e);
        }
        exps[static_cast<std::size_t>(var)] = 0;
    };
    enumerate(enumerate, 0, d);
    return count;
}

HilbertPolynomial::HilbertPolynomial(std::vector<mpq_class> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    for (mpq_class& c : coeffs_)
        c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

mpq_class HilbertPolynomial::eval(const mpz_class& x) const {
    mpq_class acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i];
    return acc;
}

std::string HilbertPolynomial::str(const std::string& var) const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpq_class& c = coeffs_[i];
        if (c == 0)
            continue;
        bool negative = c < 0;
        mpq_class mag = negative ? mpq_class(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string cs = mag.get_den() == 1 ? mag.get_num().get_str()
                                            : mag.get_num().get_str() + "/" + mag.get_den().get_str();
        if (i == 0)
            out += cs;
        else {
            out += (mag == 1) ? "" : cs + "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

HilbertPolynomial hilbert_polynomial(const HilbertSeries& series) {
    // p(x) = sum_i a_i * C(x + n - i, n), each binomial expanded as a product
    // of linear factors over n!
    int n = series.nvars;
    std::vector<mpq_class> acc(1, 0);
    mpz_class nfact = 1;
    for (int j = 2; j <= n; ++j)
        nfact *= j;
    for (std::size_t i = 0; i < series.numerator.size(); ++i) {
        if (series.numerator[i] == 0)
            continue;
        std::vector<mpq_class> part(1, mpq_class(series.numerator[i], nfact));
        for (int j = 0; j < n; ++j) {
            // multiply by (x + n - i - j)
            mpz_class shift = n - static_cast<int>(i) - j;
            std::vector<mpq_class> next(part.size() + 1, 0);
            for (std::size_t k = 0; k < part.size(); ++k) {
                next[k + 1] += part[k];
                next[k] += part[k] * shift;
            }
            part = std::move(next);
        }
        if (acc.size() < part.size())
            acc.resize(part.size(), 0);
        for (std::size_t k = 0; k < part.size(); ++k)
            acc[k] += part[k];
    }
    return HilbertPolynomial(std::move(acc));
}

int krull_dimension_degcompat(const GroebnerBasis& basis) {
    if (!basis.order.degree_compatible())
        throw input_error("Krull dimension via the Hilbert route requires a degree compatible "
                          "order; use lex with the independent-set route instead");
    if (!basis.reduced)
        throw input_error("Krull dimension expects a reduced basis");
    for (const Polynomial& g : basis.elements) {
        Term t = g.leading_term(basis.order);
        if (t.mono.is_one() && basis.domain.is_unit(t.coeff))
            throw input_error("unit ideal: the residue ring is zero");
    }
    if (!basis.monic)
        throw not_free_error(not_free_description(basis));
    HilbertSeries series = hilbert_series(MonomialIdeal::leading_term_ideal(basis));
    HilbertPolynomial p = hilbert_polynomial(series);
    return basis.domain.krull_dim() + p.degree();
}

} // namespace ringdim
