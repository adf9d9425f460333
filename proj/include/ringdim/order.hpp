#pragma once

#include "ringdim/monomial.hpp"

#include <string>

namespace ringdim {

enum class OrderKind { Lex, DegLex, DegRevLex };

// Monomial order over the ambient variables, index 0 greatest. DegLex and
// DegRevLex are degree compatible, Lex is not.
class MonomialOrder {
public:
    explicit MonomialOrder(OrderKind kind) : kind_(kind) {}
    static MonomialOrder from_name(const std::string& name);

    OrderKind kind() const { return kind_; }
    bool degree_compatible() const { return kind_ != OrderKind::Lex; }
    std::string name() const;

    // <0, 0, >0 as a is below, equal to, above b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.kind_ == b.kind_; }
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return a.kind_ != b.kind_; }

private:
    OrderKind kind_;
};

} // namespace ringdim
