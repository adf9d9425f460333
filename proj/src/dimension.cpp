#include "ringdim/dimension.hpp"

#include "ringdim/errors.hpp"

#include <algorithm>

namespace ringdim {

namespace {

void check_proper(const GroebnerBasis& basis) {
    for (const Polynomial& g : basis.elements) {
        Term t = g.leading_term(basis.order);
        if (t.mono.is_one() && basis.domain.is_unit(t.coeff))
            throw input_error("unit ideal: the residue ring is zero");
    }
}

} // namespace

VariableSubset::VariableSubset(std::vector<int> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    auto dup = std::adjacent_find(indices_.begin(), indices_.end());
    if (dup != indices_.end())
        throw input_error("duplicate variable in subset");
    if (!indices_.empty() && indices_.front() < 0)
        throw input_error("negative variable index");
}

bool VariableSubset::contains(int var) const {
    return std::binary_search(indices_.begin(), indices_.end(), var);
}

bool VariableSubset::subset_of(const VariableSubset& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

VariableSubset VariableSubset::with(int var) const {
    std::vector<int> e(indices_);
    e.push_back(var);
    return VariableSubset(std::move(e));
}

std::string VariableSubset::str(const VariableSet& vars) const {
    std::string out = "{";
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (k)
            out += ", ";
        out += vars.name(indices_[k]);
    }
    return out + "}";
}

bool is_strongly_independent(const VariableSubset& s, const GroebnerBasis& basis) {
    for (int v : s.indices())
        if (v >= basis.nvars)
            throw input_error("variable index out of range");
    for (const Polynomial& g : basis.elements) {
        std::vector<int> sup = g.leading_monomial(basis.order).support();
        bool inside = std::all_of(sup.begin(), sup.end(), [&](int v) { return s.contains(v); });
        if (inside)
            return false;
    }
    return true;
}

VariableSubset left_basic_set(const GroebnerBasis& basis, ScanOrder scan) {
    check_proper(basis);
    VariableSubset s;
    int n = basis.nvars;
    for (int k = 0; k < n; ++k) {
        int v = scan == ScanOrder::AscendingPrecedence ? n - 1 - k : k;
        VariableSubset grown = s.with(v);
        if (is_strongly_independent(grown, basis))
            s = grown;
    }
    return s;
}

namespace {

void collect_maximal(const VariableSubset& s, int from, const GroebnerBasis& basis,
                     std::vector<VariableSubset>& found) {
    for (int v = from; v < basis.nvars; ++v) {
        VariableSubset grown = s.with(v);
        if (is_strongly_independent(grown, basis))
            collect_maximal(grown, v + 1, basis, found);
    }
    for (const VariableSubset& m : found)
        if (s.subset_of(m))
            return;
    found.push_back(s);
}

} // namespace

std::vector<VariableSubset> maximal_independent_sets(const GroebnerBasis& basis) {
    if (basis.nvars > 20)
        throw input_error("variable count exceeds the enumeration limit (20)");
    check_proper(basis);
    std::vector<VariableSubset> found;
    if (is_strongly_independent(VariableSubset(), basis))
        collect_maximal(VariableSubset(), 0, basis, found);
    else
        found.push_back(VariableSubset());

    // recursion can leave sets that a branch elsewhere extends; sweep them out
    std::vector<VariableSubset> maximal;
    for (const VariableSubset& a : found) {
        bool proper_subset = false;
        for (const VariableSubset& b : found)
            if (a != b && a.subset_of(b)) {
                proper_subset = true;
                break;
            }
        if (!proper_subset)
            maximal.push_back(a);
    }
    std::sort(maximal.begin(), maximal.end(), [](const VariableSubset& a, const VariableSubset& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a.indices() < b.indices();
    });
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    return maximal;
}

int combinatorial_dimension(const GroebnerBasis& basis) {
    std::vector<VariableSubset> sets = maximal_independent_sets(basis);
    int best = 0;
    for (const VariableSubset& s : sets)
        best = std::max(best, s.size());
    return best;
}

int krull_dimension_lex(const GroebnerBasis& basis) {
    if (basis.order.kind() != OrderKind::Lex)
        throw input_error("Krull dimension via independent sets requires the lex order; "
                          "use a degree compatible order with the Hilbert route instead");
    if (!basis.reduced)
        throw input_error("Krull dimension expects a reduced basis");
    check_proper(basis);
    if (!basis.monic)
        throw not_free_error(not_free_description(basis));
    return basis.domain.krull_dim() + combinatorial_dimension(basis);
}

DimensionReport analyze_dimension(const GroebnerBasis& basis, ScanOrder scan) {
    DimensionReport rep;
    rep.maximal_sets = maximal_independent_sets(basis);
    rep.lbs = left_basic_set(basis, scan);
    rep.cdim = 0;
    for (const VariableSubset& s : rep.maximal_sets)
        rep.cdim = std::max(rep.cdim, s.size());
    return rep;
}

} // namespace ringdim
