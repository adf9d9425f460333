#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace ringdim {

// Ordered list of distinct variable names. The list position defines the
// precedence used by monomial orders: index 0 is the greatest variable.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(const std::string& name) const;

    friend bool operator==(const VariableSet& a, const VariableSet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

// Power product as a dense exponent vector, one entry per variable.
// operator< is the structural (container) order used for map keys; ranking
// under a monomial order goes through MonomialOrder::compare.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int nvars);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int exponent(int i) const { return exps_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& exponents() const { return exps_; }
    int degree() const;
    bool is_one() const;
    std::vector<int> support() const;

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const; // *this | other
    Monomial quotient_of(const Monomial& numerator) const; // numerator / *this
    static Monomial lcm(const Monomial& a, const Monomial& b);

    std::string str(const VariableSet& vars) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

private:
    std::vector<int> exps_;
};

} // namespace ringdim
