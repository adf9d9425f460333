#include "ringdim/monomial.hpp"

#include "ringdim/errors.hpp"

#include <algorithm>
#include <set>

namespace ringdim {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw input_error("variable list is empty");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw input_error("empty variable name");
        if (!(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
            throw input_error("variable name '" + n + "' must start with a letter");
        for (char c : n)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw input_error("variable name '" + n + "' contains '" + std::string(1, c) + "'");
        if (!seen.insert(n).second)
            throw input_error("duplicate variable '" + n + "'");
    }
}

std::optional<int> VariableSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<int>(i);
    return std::nullopt;
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty())
        throw input_error("monomial needs at least one variable slot");
    for (int e : exps_)
        if (e < 0)
            throw input_error("negative exponent");
}

Monomial Monomial::one(int nvars) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exps_)
        d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < nvars(); ++i)
        if (exps_[static_cast<std::size_t>(i)] > 0)
            s.push_back(i);
    return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (nvars() != other.nvars())
        throw input_error("monomial variable count mismatch");
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars())
        throw input_error("monomial variable count mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
    if (!divides(numerator))
        throw input_error("monomial quotient is not a monomial");
    std::vector<int> e(numerator.exps_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] -= exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw input_error("monomial variable count mismatch");
    std::vector<int> e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(e[i], b.exps_[i]);
    return Monomial(std::move(e));
}

std::string Monomial::str(const VariableSet& vars) const {
    if (vars.size() != nvars())
        throw input_error("variable set does not match monomial width");
    std::string out;
    for (int i = 0; i < nvars(); ++i) {
        int e = exps_[static_cast<std::size_t>(i)];
        if (e == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += vars.name(i);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

} // namespace ringdim
