#pragma once

#include <gmpxx.h>

#include <string>
#include <tuple>
#include <utility>

namespace ringdim {

enum class DomainKind { Integers, Rationals, PrimeField };

// Exact element of a coefficient domain. Stored as a canonical rational;
// integer and prime-field values keep denominator 1, prime-field values are
// the least nonnegative representative. All arithmetic goes through
// CoefficientDomain so the active domain controls reduction and inversion.
class Coefficient {
public:
    Coefficient() : value_(0) {}
    explicit Coefficient(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
    explicit Coefficient(const mpz_class& v) : value_(v) {}
    explicit Coefficient(long v) : value_(v) {}

    const mpq_class& value() const { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integral() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    std::string str() const;

    friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return a.value_ != b.value_; }
    friend bool operator<(const Coefficient& a, const Coefficient& b) { return a.value_ < b.value_; }

private:
    mpq_class value_;
};

// One of ZZ, QQ, or Fp for prime p. Value type; carries the arithmetic for
// its elements, including the Euclidean operations the strong Groebner basis
// construction needs over ZZ.
class CoefficientDomain {
public:
    static CoefficientDomain integers();
    static CoefficientDomain rationals();
    static CoefficientDomain prime_field(const mpz_class& p);

    DomainKind kind() const { return kind_; }
    bool is_field() const { return kind_ != DomainKind::Integers; }
    bool is_euclidean() const { return true; }
    int krull_dim() const { return kind_ == DomainKind::Integers ? 1 : 0; }
    const mpz_class& modulus() const;
    std::string name() const;

    friend bool operator==(const CoefficientDomain& a, const CoefficientDomain& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const CoefficientDomain& a, const CoefficientDomain& b) { return !(a == b); }

    Coefficient zero() const { return Coefficient(0L); }
    Coefficient one() const { return canonical(Coefficient(1L)); }
    Coefficient from_integer(const mpz_class& v) const;
    Coefficient from_rational(const mpz_class& num, const mpz_class& den) const;

    Coefficient add(const Coefficient& a, const Coefficient& b) const;
    Coefficient sub(const Coefficient& a, const Coefficient& b) const;
    Coefficient mul(const Coefficient& a, const Coefficient& b) const;
    Coefficient neg(const Coefficient& a) const;
    Coefficient inverse(const Coefficient& a) const;

    bool is_unit(const Coefficient& a) const;
    bool divides(const Coefficient& a, const Coefficient& b) const;
    Coefficient div_exact(const Coefficient& a, const Coefficient& b) const;

    // a = q*b + r with 0 <= r < |b| (fields: r = 0).
    std::pair<Coefficient, Coefficient> euclid_divrem(const Coefficient& a, const Coefficient& b) const;
    // (g, u, v) with g = gcd(a, b) >= 0 and g = u*a + v*b.
    std::tuple<Coefficient, Coefficient, Coefficient> ext_gcd(const Coefficient& a, const Coefficient& b) const;
    Coefficient gcd(const Coefficient& a, const Coefficient& b) const;
    Coefficient lcm(const Coefficient& a, const Coefficient& b) const;

private:
    CoefficientDomain(DomainKind kind, mpz_class p) : kind_(kind), p_(std::move(p)) {}
    Coefficient canonical(const Coefficient& a) const;
    mpz_class residue(const mpz_class& v) const;

    DomainKind kind_;
    mpz_class p_; // only meaningful for PrimeField
};

} // namespace ringdim
