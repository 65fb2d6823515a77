#ifndef APOLAR_POLYNOMIAL_HPP
#define APOLAR_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolar/monomial.hpp"
#include "apolar/rational.hpp"

namespace apolar {

/// Deterministic PRNG seed. Derivations give independent-looking streams
/// for resampling attempts and per-trial seeds.
struct Seed {
    std::uint64_t value = 0;

    Seed derive(std::uint64_t k) const {
        // splitmix64 of value xor a stride; stable across platforms.
        std::uint64_t z = value ^ (0x9E3779B97F4A7C15ULL * (k + 1));
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return Seed{z ^ (z >> 31)};
    }
};

/// Sparse polynomial with exact rational coefficients over a fixed set of
/// n variables. Terms are kept sorted descending in degrevlex (the canonical
/// key) with no explicit zeros; the zero polynomial has no terms.
///
/// The same representation serves the ring R and its inverse system S: the
/// role of a value is fixed by which argument slot of the differentiation
/// action it occupies.
class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    explicit Polynomial(int n = 0) : n_(n) {}

    static Polynomial zero(int n) { return Polynomial(n); }
    static Polynomial constant(int n, const Rational& c);
    static Polynomial from_monomial(const Monomial& m, const Rational& c = Rational(1));
    /// Construct from arbitrary (monomial, coefficient) pairs; merges
    /// duplicates and drops zeros.
    static Polynomial from_terms(int n, std::vector<Term> terms);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const;

    /// Max total degree over the support; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    /// Degree if homogeneous and nonzero, otherwise nullopt.
    std::optional<int> homogeneous_degree() const;

    /// Largest term with respect to the given order. Throws on zero input.
    const Term& leading_term(const MonomialOrder& order) const;
    const Monomial& leading_monomial(const MonomialOrder& order) const;

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial scaled(const Rational& c) const;
    /// this * c * m in one pass.
    Polynomial scaled_shift(const Rational& c, const Monomial& m) const;

    bool operator==(const Polynomial& g) const { return n_ == g.n_ && terms_ == g.terms_; }
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    std::string str() const;

private:
    static void check_same_n(const Polynomial& a, const Polynomial& b);

    int n_;
    std::vector<Term> terms_;
};

/// phi: scales each term x^i by 1/(i_1! ... i_n!). Linear, injective on
/// every graded piece.
Polynomial phi(const Polynomial& f);

/// F_a = (x_1-x_n)^{a_1} ... (x_{n-1}-x_n)^{a_{n-1}}, expanded. The vector a
/// has length n-1, n >= 2.
Polynomial f_of(const std::vector<int>& a);

/// Complete symmetric polynomial H_e: sum of all degree-e monomials with
/// coefficient 1.
Polynomial complete_symmetric(int n, int e);

/// Differentiation action f o g, with x_i acting as d/dx_i; bilinear, and
/// multiplicative in the first slot.
Polynomial apply_diff(const Polynomial& f, const Polynomial& g);

inline bool annihilates(const Polynomial& f, const Polynomial& g) {
    return apply_diff(f, g).is_zero();
}

/// Homogeneous degree-e form with integer coefficients drawn uniformly from
/// [-bound, bound] \ {0}, deterministically from the seed. Full support.
Polynomial random_form(int n, int e, Seed seed, long bound = 10000);

} // namespace apolar

#endif
