#pragma once

#include "ringdim/groebner.hpp"

#include <vector>

namespace ringdim {

// Subset of the ambient variables, kept as sorted distinct indices into the
// declaring VariableSet.
class VariableSubset {
public:
    VariableSubset() = default;
    explicit VariableSubset(std::vector<int> indices);

    const std::vector<int>& indices() const { return indices_; }
    int size() const { return static_cast<int>(indices_.size()); }
    bool contains(int var) const;
    bool subset_of(const VariableSubset& other) const;
    VariableSubset with(int var) const;

    std::string str(const VariableSet& vars) const;

    friend bool operator==(const VariableSubset& a, const VariableSubset& b) {
        return a.indices_ == b.indices_;
    }
    friend bool operator!=(const VariableSubset& a, const VariableSubset& b) { return !(a == b); }

private:
    std::vector<int> indices_;
};

// S is strongly independent when no basis element's leading monomial uses
// only variables from S.
bool is_strongly_independent(const VariableSubset& s, const GroebnerBasis& basis);

enum class ScanOrder { AscendingPrecedence, DescendingPrecedence };

// Greedy scan: grow S one variable at a time, keeping each variable whose
// addition stays strongly independent. Default scan visits variables from
// the least precedent upward.
VariableSubset left_basic_set(const GroebnerBasis& basis,
                              ScanOrder scan = ScanOrder::AscendingPrecedence);

// All maximal strongly independent subsets, sorted by size descending then
// by indices. Enumeration is exponential in the variable count; rejected
// beyond 20 variables.
std::vector<VariableSubset> maximal_independent_sets(const GroebnerBasis& basis);

// Largest size of a strongly independent subset.
int combinatorial_dimension(const GroebnerBasis& basis);

// Krull dimension of the residue ring via the lex route:
// kdim(coefficients) + combinatorial dimension. Requires a reduced monic
// basis under lex; non-monic input raises not_free_error.
int krull_dimension_lex(const GroebnerBasis& basis);

struct DimensionReport {
    int cdim = 0;
    std::vector<VariableSubset> maximal_sets;
    VariableSubset lbs;
};
DimensionReport analyze_dimension(const GroebnerBasis& basis,
                                  ScanOrder scan = ScanOrder::AscendingPrecedence);

} // namespace ringdim
