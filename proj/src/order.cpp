#include "ringdim/order.hpp"

#include "ringdim/errors.hpp"

namespace ringdim {

MonomialOrder MonomialOrder::from_name(const std::string& name) {
    if (name == "lex")
        return MonomialOrder(OrderKind::Lex);
    if (name == "deglex")
        return MonomialOrder(OrderKind::DegLex);
    if (name == "degrevlex")
        return MonomialOrder(OrderKind::DegRevLex);
    throw input_error("unknown monomial order '" + name + "' (expected lex, deglex or degrevlex)");
}

std::string MonomialOrder::name() const {
    switch (kind_) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
    }
    return "?";
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
        throw input_error("monomial variable count mismatch");
    int n = a.nvars();
    if (degree_compatible()) {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da < db ? -1 : 1;
    }
    if (kind_ == OrderKind::DegRevLex) {
        // equal degree: larger is the one with the smaller exponent at the
        // last position where they differ
        for (int i = n - 1; i >= 0; --i) {
            int ea = a.exponent(i), eb = b.exponent(i);
            if (ea != eb)
                return ea < eb ? 1 : -1;
        }
        return 0;
    }
    for (int i = 0; i < n; ++i) {
        int ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb)
            return ea < eb ? -1 : 1;
    }
    return 0;
}

} // namespace ringdim
