#ifndef APOLAR_TEST_UTIL_HPP
#define APOLAR_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "apolar/polynomial.hpp"

namespace apolar::testutil {

inline Monomial mono(std::vector<int> exps) { return Monomial(std::move(exps)); }

inline Polynomial::Term term(long num, long den, std::vector<int> exps) {
    return {Monomial(std::move(exps)), make_rational(num, den)};
}

inline Polynomial poly(int n, std::vector<Polynomial::Term> terms) {
    return Polynomial::from_terms(n, std::move(terms));
}

/// Deterministic random polynomial, not necessarily homogeneous: up to
/// max_terms monomials with exponents < 4 and small nonzero coefficients.
inline Polynomial random_poly(int n, std::mt19937_64& eng, int max_terms = 6, int max_exp = 3) {
    std::vector<Polynomial::Term> terms;
    int count = 1 + static_cast<int>(eng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < count; ++t) {
        std::vector<int> exps(static_cast<size_t>(n));
        for (auto& e : exps) e = static_cast<int>(eng() % static_cast<unsigned>(max_exp + 1));
        long c = static_cast<long>(eng() % 19) - 9;
        if (c == 0) c = 1;
        terms.emplace_back(Monomial(std::move(exps)), Rational(c));
    }
    return Polynomial::from_terms(n, std::move(terms));
}

inline Monomial random_monomial(int n, std::mt19937_64& eng, int max_exp = 4) {
    std::vector<int> exps(static_cast<size_t>(n));
    for (auto& e : exps) e = static_cast<int>(eng() % static_cast<unsigned>(max_exp + 1));
    return Monomial(std::move(exps));
}

} // namespace apolar::testutil

#endif
