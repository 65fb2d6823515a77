#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apolar/groebner.hpp"
#include "apolar/polynomial.hpp"
#include "test_util.hpp"

using namespace apolar;
using namespace apolar::testutil;

namespace {
const MonomialOrder drl{OrderKind::DegRevLex};
const MonomialOrder lex{OrderKind::Lex};
const MonomialOrder dlx{OrderKind::DegLex};
} // namespace

TEST_CASE("degrevlex compares as defined") {
    // x1 x2 > x2^2 > x1 x3 in three variables
    CHECK(drl.compare(mono({1, 1, 0}), mono({0, 2, 0})) == Cmp::Greater);
    CHECK(drl.compare(mono({0, 2, 0}), mono({1, 0, 1})) == Cmp::Greater);
    CHECK(drl.compare(mono({2, 0, 0}), mono({2, 0, 0})) == Cmp::Equal);
    // degree dominates
    CHECK(drl.compare(mono({3, 0, 0}), mono({1, 1, 0})) == Cmp::Greater);
    // lex ignores degree: x1 > x2^5
    CHECK(lex.compare(mono({1, 0}), mono({0, 5})) == Cmp::Greater);
    CHECK_THROWS_AS(drl.compare(mono({1, 0}), mono({1, 0, 0})), DimensionError);
}

TEST_CASE("monomials_of_degree enumerates descending with the right count") {
    auto ms = monomials_of_degree(3, 2, drl);
    std::vector<Monomial> expected = {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                      mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
    CHECK(ms == expected);

    CHECK(monomials_of_degree(1, 5, lex) == std::vector<Monomial>{mono({5})});

    auto m23 = monomials_of_degree(2, 3, drl);
    REQUIRE(m23.size() == 4);
    CHECK(m23.front() == mono({3, 0}));
    CHECK(m23.back() == mono({0, 3}));

    std::mt19937_64 eng(11);
    for (int it = 0; it < 30; ++it) {
        int n = 1 + static_cast<int>(eng() % 4);
        int d = static_cast<int>(eng() % 6);
        for (const auto& order : {drl, lex, dlx}) {
            auto v = monomials_of_degree(n, d, order);
            CHECK(static_cast<long long>(v.size()) == dim_rd(n, d));
            for (size_t i = 1; i < v.size(); ++i) CHECK(order.greater(v[i - 1], v[i]));
        }
    }
}

TEST_CASE("order axioms hold on random monomials") {
    std::mt19937_64 eng(5);
    for (int it = 0; it < 300; ++it) {
        int n = 1 + static_cast<int>(eng() % 4);
        Monomial a = random_monomial(n, eng), b = random_monomial(n, eng),
                 c = random_monomial(n, eng);
        for (const auto& order : {drl, lex, dlx}) {
            // antisymmetry and totality
            Cmp ab = order.compare(a, b);
            Cmp ba = order.compare(b, a);
            CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
            CHECK((ab == Cmp::Equal) == (a == b));
            // transitivity
            if (order.geq(a, b) && order.geq(b, c)) CHECK(order.geq(a, c));
            // multiplicative
            Monomial f = random_monomial(n, eng);
            CHECK(order.compare(a * f, b * f) == ab);
        }
        // degree refinement for the graded orders
        if (a.degree() > b.degree()) {
            CHECK(drl.greater(a, b));
            CHECK(dlx.greater(a, b));
        }
    }
}

TEST_CASE("polynomial ring arithmetic") {
    Polynomial x1 = Polynomial::from_monomial(mono({1, 0, 0}));
    CHECK((x1 + x1.scaled(Rational(-1))).is_zero());

    // (x1 - x3)(x2 - x3) = x1 x2 - x1 x3 - x2 x3 + x3^2
    Polynomial a = poly(3, {term(1, 1, {1, 0, 0}), term(-1, 1, {0, 0, 1})});
    Polynomial b = poly(3, {term(1, 1, {0, 1, 0}), term(-1, 1, {0, 0, 1})});
    Polynomial expected = poly(3, {term(1, 1, {1, 1, 0}), term(-1, 1, {1, 0, 1}),
                                   term(-1, 1, {0, 1, 1}), term(1, 1, {0, 0, 2})});
    CHECK(a * b == expected);

    Polynomial one = Polynomial::constant(3, Rational(1));
    CHECK(one * expected == expected);

    CHECK_THROWS_AS(x1 + Polynomial::constant(2, Rational(1)), DimensionError);
    CHECK(poly(2, {term(1, 2, {1, 0}), term(-1, 2, {1, 0})}).is_zero());
}

TEST_CASE("phi divides by exponent factorials") {
    Polynomial f = Polynomial::from_monomial(mono({2, 1}));
    CHECK(phi(f) == poly(2, {term(1, 2, {2, 1})}));
    CHECK(phi(Polynomial::constant(2, Rational(1))) == Polynomial::constant(2, Rational(1)));
    // phi((x1-x2)^2) = 1/2 x1^2 - 2 x1 x2 + 1/2 x2^2
    Polynomial sq = f_of({2});
    CHECK(phi(sq) ==
          poly(2, {term(1, 2, {2, 0}), term(-2, 1, {1, 1}), term(1, 2, {0, 2})}));
}

TEST_CASE("f_of expands the product of variable differences") {
    CHECK(f_of({1, 1}) == poly(3, {term(1, 1, {1, 1, 0}), term(-1, 1, {1, 0, 1}),
                                   term(-1, 1, {0, 1, 1}), term(1, 1, {0, 0, 2})}));
    CHECK(f_of({0, 0, 0}) == Polynomial::constant(4, Rational(1)));
    CHECK(f_of({2}) == poly(2, {term(1, 1, {2, 0}), term(-2, 1, {1, 1}), term(1, 1, {0, 2})}));
}

TEST_CASE("complete symmetric polynomial") {
    CHECK(complete_symmetric(2, 2) ==
          poly(2, {term(1, 1, {2, 0}), term(1, 1, {1, 1}), term(1, 1, {0, 2})}));
    CHECK(complete_symmetric(4, 0) == Polynomial::constant(4, Rational(1)));
    CHECK(complete_symmetric(3, 1) ==
          poly(3, {term(1, 1, {1, 0, 0}), term(1, 1, {0, 1, 0}), term(1, 1, {0, 0, 1})}));
    auto h = complete_symmetric(3, 5);
    CHECK(static_cast<long long>(h.term_count()) == dim_rd(3, 5));
    for (const auto& [m, c] : h.terms()) CHECK(c == 1);
}

TEST_CASE("differentiation action") {
    Polynomial h3 = complete_symmetric(2, 3);
    Polynomial x1 = Polynomial::from_monomial(mono({1, 0}));
    CHECK(apply_diff(x1, h3) ==
          poly(2, {term(3, 1, {2, 0}), term(2, 1, {1, 1}), term(1, 1, {0, 2})}));

    Polynomial g = poly(2, {term(7, 3, {2, 1}), term(-1, 1, {0, 4})});
    CHECK(apply_diff(Polynomial::constant(2, Rational(1)), g) == g);

    // an annihilator instance computed by hand
    CHECK(apply_diff(phi(f_of({2})), h3).is_zero());

    CHECK(annihilates(poly(2, {term(1, 1, {1, 0}), term(-1, 1, {0, 1})}),
                      poly(2, {term(1, 1, {1, 0}), term(1, 1, {0, 1})})));
    CHECK(annihilates(Polynomial::from_monomial(mono({1, 0})),
                      Polynomial::from_monomial(mono({0, 3}))));
    CHECK_FALSE(annihilates(Polynomial::from_monomial(mono({1, 0})),
                            Polynomial::from_monomial(mono({1, 1}))));
}

TEST_CASE("action is bilinear and multiplicative in the operator slot") {
    std::mt19937_64 eng(17);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + static_cast<int>(eng() % 3);
        Polynomial f1 = random_poly(n, eng), f2 = random_poly(n, eng);
        Polynomial g1 = random_poly(n, eng), g2 = random_poly(n, eng);
        CHECK(apply_diff(f1 + f2, g1) == apply_diff(f1, g1) + apply_diff(f2, g1));
        CHECK(apply_diff(f1, g1 + g2) == apply_diff(f1, g1) + apply_diff(f1, g2));
        CHECK(apply_diff(f1 * f2, g1) == apply_diff(f1, apply_diff(f2, g1)));
    }
}

TEST_CASE("phi ties to the self-pairing of monomials") {
    std::mt19937_64 eng(23);
    for (int it = 0; it < 100; ++it) {
        int n = 1 + static_cast<int>(eng() % 4);
        Monomial m = random_monomial(n, eng);
        Polynomial pm = Polynomial::from_monomial(m);
        Polynomial self = apply_diff(pm, pm); // constant: product of factorials
        REQUIRE(self.term_count() == 1);
        CHECK(phi(pm).scaled(self.terms().front().second) == pm);
    }
}

TEST_CASE("phi is linear and injective on graded pieces") {
    std::mt19937_64 eng(29);
    for (int it = 0; it < 40; ++it) {
        int n = 1 + static_cast<int>(eng() % 3);
        Polynomial f = random_poly(n, eng), g = random_poly(n, eng);
        CHECK(phi(f + g) == phi(f) + phi(g));
        CHECK(phi(f).term_count() == f.term_count()); // termwise nonzero scaling
    }
}

TEST_CASE("every explicit basis element annihilates the symmetric form") {
    for (int n = 2; n <= 4; ++n) {
        for (int e = 1; e <= 8; ++e) {
            Polynomial h = complete_symmetric(n, e);
            for (const auto& g : candidate_basis(n, e)) {
                CAPTURE(n);
                CAPTURE(e);
                CHECK(annihilates(g, h));
            }
        }
    }
}

TEST_CASE("random_form is deterministic, homogeneous, full-support") {
    Polynomial a = random_form(3, 4, Seed{42}, 10000);
    Polynomial b = random_form(3, 4, Seed{42}, 10000);
    CHECK(a == b);
    CHECK(a.homogeneous_degree() == 4);
    CHECK(static_cast<long long>(a.term_count()) == dim_rd(3, 4)); // no zero coefficients

    Polynomial c = random_form(2, 1, Seed{7}, 1);
    for (const auto& [m, coef] : c.terms()) CHECK((coef == 1 || coef == -1));

    CHECK(random_form(3, 4, Seed{43}, 10000) != a);
    for (const auto& [m, coef] : a.terms()) {
        CHECK(coef.get_den() == 1);
        CHECK(abs(coef) <= 10000);
        CHECK(coef != 0);
    }
}

TEST_CASE("seed derivation changes the stream") {
    Seed s{123};
    CHECK(s.derive(0).value != s.derive(1).value);
    CHECK(s.derive(0).value == Seed{123}.derive(0).value);
}
