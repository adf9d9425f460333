#include "ringdim/errors.hpp"
#include "ringdim/order.hpp"

#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace ringdim;
using testsupport::letters;
using testsupport::mono;

TEST_CASE("variable sets validate their names") {
    CHECK_THROWS_AS(VariableSet({}), input_error);
    CHECK_THROWS_AS(VariableSet({"x", "x"}), input_error);
    CHECK_THROWS_AS(VariableSet({"2x"}), input_error);
    CHECK_THROWS_AS(VariableSet({"a b"}), input_error);
    VariableSet vars({"x", "y", "z"});
    CHECK(vars.size() == 3);
    CHECK(vars.index_of("y") == 1);
    CHECK_FALSE(vars.index_of("w").has_value());
}

TEST_CASE("monomial arithmetic") {
    Monomial a = mono({2, 1, 0});
    Monomial b = mono({1, 0, 3});
    CHECK(a.degree() == 3);
    CHECK((a * b) == mono({3, 1, 3}));
    CHECK(Monomial::lcm(a, b) == mono({2, 1, 3}));
    CHECK(mono({1, 0, 0}).divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK(mono({1, 1, 0}).quotient_of(a) == mono({1, 0, 0}));
    CHECK_THROWS_AS(a.quotient_of(b), input_error);
    CHECK(a.support() == std::vector<int>{0, 1});
    CHECK(Monomial::one(3).is_one());
    CHECK_THROWS_AS(Monomial({-1, 0}), input_error);

    VariableSet vars = letters(3);
    CHECK(a.str(vars) == "x^2*y");
    CHECK(Monomial::one(3).str(vars) == "1");
    CHECK(mono({0, 1, 2}).str(vars) == "y*z^2");
}

TEST_CASE("lex compares by precedence, first difference wins") {
    MonomialOrder lex(OrderKind::Lex);
    CHECK_FALSE(lex.degree_compatible());
    // x^2*y vs x*y^3: x exponent decides even against higher degree
    CHECK(lex.greater(mono({2, 1, 0}), mono({1, 3, 0})));
    CHECK(lex.greater(mono({2, 1, 0}), mono({2, 0, 1})));
    CHECK(lex.greater(mono({0, 3, 0}), mono({0, 0, 5})));
    CHECK(lex.compare(mono({1, 2, 3}), mono({1, 2, 3})) == 0);
}

TEST_CASE("degree compatible orders rank degree first") {
    MonomialOrder deglex(OrderKind::DegLex);
    MonomialOrder degrevlex(OrderKind::DegRevLex);
    CHECK(deglex.degree_compatible());
    CHECK(degrevlex.degree_compatible());

    // degree 4 beats degree 3 irrespective of the x exponent
    CHECK(deglex.greater(mono({1, 3, 0}), mono({2, 1, 0})));
    CHECK(degrevlex.greater(mono({1, 3, 0}), mono({2, 1, 0})));

    // same degree: deglex falls back to lex
    CHECK(deglex.greater(mono({1, 0, 2}), mono({0, 3, 0})));
    // degrevlex ranks by the smaller trailing exponent instead
    CHECK(degrevlex.greater(mono({0, 3, 0}), mono({1, 0, 2})));
    CHECK(degrevlex.greater(mono({2, 2, 0}), mono({2, 1, 1})));

    // x^2 vs x*z tie inside deglex resolves by lex
    CHECK(deglex.greater(mono({2, 0, 0}), mono({1, 0, 1})));
}

TEST_CASE("order names round trip") {
    CHECK(MonomialOrder::from_name("lex").kind() == OrderKind::Lex);
    CHECK(MonomialOrder::from_name("deglex").name() == "deglex");
    CHECK(MonomialOrder::from_name("degrevlex").name() == "degrevlex");
    CHECK_THROWS_AS(MonomialOrder::from_name("grlex"), input_error);
}

TEST_CASE("orders are total, well-founded at 1, and multiplicative") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> expo(0, 4);
    auto random_mono = [&](int n) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int& x : e)
            x = expo(rng);
        return Monomial(e);
    };
    for (OrderKind kind : {OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex}) {
        MonomialOrder ord(kind);
        for (int i = 0; i < 200; ++i) {
            Monomial a = random_mono(3), b = random_mono(3), c = random_mono(3);
            // antisymmetry and totality
            int ab = ord.compare(a, b);
            CHECK(ab == -ord.compare(b, a));
            if (ab == 0)
                CHECK(a == b);
            // transitivity
            if (ord.compare(a, b) <= 0 && ord.compare(b, c) <= 0)
                CHECK(ord.compare(a, c) <= 0);
            // 1 is the minimum
            if (!a.is_one())
                CHECK(ord.greater(a, Monomial::one(3)));
            // multiplication preserves the ranking
            if (ab < 0)
                CHECK(ord.less(a * c, b * c));
        }
    }
    MonomialOrder lex(OrderKind::Lex);
    CHECK_THROWS_AS(lex.compare(Monomial::one(2), Monomial::one(3)), input_error);
}
