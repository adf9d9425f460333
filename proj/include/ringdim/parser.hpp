#pragma once

#include "ringdim/polynomial.hpp"

#include <string>
#include <vector>

namespace ringdim {

// Fully parsed problem: coefficient ring, ambient variables (declaration
// order is the precedence, leftmost greatest), monomial order, generators.
struct ProblemSpec {
    CoefficientDomain ring;
    VariableSet vars;
    MonomialOrder order;
    std::vector<Polynomial> generators;
};

// "ZZ", "QQ" or "Fp:<prime>"
CoefficientDomain parse_domain(const std::string& text);

// Grammar: '^' binds tightest (integer exponents only), then '*', then unary
// minus, then '+'/'-'. Products need an explicit '*'. Integer literals, and
// rational literals a/b where the domain has them. Errors carry line and
// column.
Polynomial parse_polynomial(const std::string& text, const VariableSet& vars,
                            const CoefficientDomain& domain);

// Problem file: 'ring:', 'vars:', 'order:' headers plus 'ideal:' with either
// a bracketed comma list or one generator per following line. '#' starts a
// comment.
ProblemSpec parse_problem(const std::string& contents);

} // namespace ringdim
