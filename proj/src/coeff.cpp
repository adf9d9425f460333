#include "ringdim/coeff.hpp"

#include "ringdim/errors.hpp"

namespace ringdim {

std::string Coefficient::str() const {
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

CoefficientDomain CoefficientDomain::integers() {
    return CoefficientDomain(DomainKind::Integers, 0);
}

CoefficientDomain CoefficientDomain::rationals() {
    return CoefficientDomain(DomainKind::Rationals, 0);
}

CoefficientDomain CoefficientDomain::prime_field(const mpz_class& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
        throw input_error("modulus " + p.get_str() + " is not prime");
    return CoefficientDomain(DomainKind::PrimeField, p);
}

const mpz_class& CoefficientDomain::modulus() const {
    if (kind_ != DomainKind::PrimeField)
        throw input_error("modulus only defined for prime fields");
    return p_;
}

std::string CoefficientDomain::name() const {
    switch (kind_) {
    case DomainKind::Integers: return "ZZ";
    case DomainKind::Rationals: return "QQ";
    case DomainKind::PrimeField: return "Fp:" + p_.get_str();
    }
    return "?";
}

mpz_class CoefficientDomain::residue(const mpz_class& v) const {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
    return r;
}

Coefficient CoefficientDomain::canonical(const Coefficient& a) const {
    if (kind_ != DomainKind::PrimeField)
        return a;
    if (!a.is_integral())
        throw input_error("non-integral prime field value");
    return Coefficient(residue(a.numerator()));
}

Coefficient CoefficientDomain::from_integer(const mpz_class& v) const {
    if (kind_ == DomainKind::PrimeField)
        return Coefficient(residue(v));
    return Coefficient(v);
}

Coefficient CoefficientDomain::from_rational(const mpz_class& num, const mpz_class& den) const {
    if (den == 0)
        throw input_error("zero denominator");
    switch (kind_) {
    case DomainKind::Integers:
        throw input_error("rational literal outside field/QQ domain");
    case DomainKind::Rationals:
        return Coefficient(mpq_class(num, den));
    case DomainKind::PrimeField: {
        Coefficient d = from_integer(den);
        if (d.is_zero())
            throw input_error("denominator divisible by the field characteristic");
        return mul(from_integer(num), inverse(d));
    }
    }
    throw input_error("unknown domain");
}

Coefficient CoefficientDomain::add(const Coefficient& a, const Coefficient& b) const {
    return canonical(Coefficient(mpq_class(a.value() + b.value())));
}

Coefficient CoefficientDomain::sub(const Coefficient& a, const Coefficient& b) const {
    return canonical(Coefficient(mpq_class(a.value() - b.value())));
}

Coefficient CoefficientDomain::mul(const Coefficient& a, const Coefficient& b) const {
    return canonical(Coefficient(mpq_class(a.value() * b.value())));
}

Coefficient CoefficientDomain::neg(const Coefficient& a) const {
    return canonical(Coefficient(mpq_class(-a.value())));
}

Coefficient CoefficientDomain::inverse(const Coefficient& a) const {
    if (a.is_zero())
        throw input_error("inverse of zero");
    switch (kind_) {
    case DomainKind::Integers:
        if (a.value() == 1 || a.value() == -1)
            return a;
        throw input_error("non-unit has no inverse over ZZ");
    case DomainKind::Rationals:
        return Coefficient(mpq_class(1 / a.value()));
    case DomainKind::PrimeField: {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), a.numerator().get_mpz_t(), p_.get_mpz_t()) == 0)
            throw input_error("not invertible mod " + p_.get_str());
        return Coefficient(inv);
    }
    }
    throw input_error("unknown domain");
}

bool CoefficientDomain::is_unit(const Coefficient& a) const {
    if (kind_ == DomainKind::Integers)
        return a.value() == 1 || a.value() == -1;
    return !a.is_zero();
}

bool CoefficientDomain::divides(const Coefficient& a, const Coefficient& b) const {
    if (a.is_zero())
        return b.is_zero();
    if (is_field())
        return true;
    mpz_class an = a.numerator(), bn = b.numerator();
    return mpz_divisible_p(bn.get_mpz_t(), an.get_mpz_t()) != 0;
}

Coefficient CoefficientDomain::div_exact(const Coefficient& a, const Coefficient& b) const {
    if (!divides(b, a))
        throw input_error("inexact division");
    if (is_field())
        return mul(a, inverse(b));
    mpz_class q;
    mpz_class an = a.numerator(), bn = b.numerator();
    mpz_divexact(q.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
    return Coefficient(q);
}

std::pair<Coefficient, Coefficient> CoefficientDomain::euclid_divrem(const Coefficient& a,
                                                                     const Coefficient& b) const {
    if (b.is_zero())
        throw input_error("division by zero");
    if (is_field())
        return {mul(a, inverse(b)), zero()};
    mpz_class an = a.numerator(), bn = b.numerator();
    mpz_class r, q;
    mpz_mod(r.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t()); // least nonnegative
    mpz_divexact(q.get_mpz_t(), mpz_class(an - r).get_mpz_t(), bn.get_mpz_t());
    return {Coefficient(q), Coefficient(r)};
}

std::tuple<Coefficient, Coefficient, Coefficient> CoefficientDomain::ext_gcd(const Coefficient& a,
                                                                             const Coefficient& b) const {
    if (a.is_zero() && b.is_zero())
        throw input_error("gcd of two zeros");
    if (is_field()) {
        if (!a.is_zero())
            return {one(), inverse(a), zero()};
        return {one(), zero(), inverse(b)};
    }
    mpz_class g, u, v;
    mpz_class an = a.numerator(), bn = b.numerator();
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
    return {Coefficient(g), Coefficient(u), Coefficient(v)};
}

Coefficient CoefficientDomain::gcd(const Coefficient& a, const Coefficient& b) const {
    if (is_field())
        return (a.is_zero() && b.is_zero()) ? zero() : one();
    mpz_class g;
    mpz_class an = a.numerator(), bn = b.numerator();
    mpz_gcd(g.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
    return Coefficient(g);
}

Coefficient CoefficientDomain::lcm(const Coefficient& a, const Coefficient& b) const {
    if (a.is_zero() || b.is_zero())
        return zero();
    if (is_field())
        return one();
    mpz_class l;
    mpz_class an = a.numerator(), bn = b.numerator();
    mpz_lcm(l.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
    return Coefficient(l);
}

} // namespace ringdim
