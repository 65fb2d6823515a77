#ifndef APOLAR_GROEBNER_HPP
#define APOLAR_GROEBNER_HPP

#include <map>
#include <optional>
#include <vector>

#include "apolar/monomial_ideal.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

/// Result of a completion run. `certified` is set only when every S-pair was
/// reduced to zero with no degree truncation; a degree-capped run instead
/// records the cap, and is good for initial-ideal queries up to that degree
/// (inputs must be homogeneous for the truncation to be valid).
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> elems;
    bool certified = false;
    std::optional<int> degree_cap;
};

/// Remainder of f on division by B: no support monomial is divisible by the
/// leading monomial of any element of B, and f minus the remainder lies in
/// the ideal generated by B. Deterministic: the largest reducible monomial is
/// reduced by the first matching divisor in the given element ordering.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& B,
                       const MonomialOrder& order);

/// (lcm/lt f) f - (lcm/lt g) g with monic leading terms.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Buchberger completion with normal pair selection (increasing lcm degree)
/// and the coprime and chain criteria. With degree_cap set, pairs above the
/// cap are not processed and the result is a d-truncated basis.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         std::optional<int> degree_cap = std::nullopt);

/// Every S-pair reduces to zero modulo B.
bool is_groebner_basis(const std::vector<Polynomial>& B, const MonomialOrder& order);

/// Wrap an externally known basis after certification. Throws if the S-pair
/// check fails.
GroebnerBasis certify(std::vector<Polynomial> B, const MonomialOrder& order);

/// The explicit annihilator basis of the complete symmetric form H_e under
/// degrevlex: for e = 2d the polynomials phi(F_a), |a| = d+1, together with
/// phi(x_n^{2i+1} F_a) for 0 <= i <= d, |a| = d-i; for e = 2d+1 the
/// polynomials phi(x_n^{2i} F_a) for 0 <= i <= d+1, |a| = d+1-i.
std::vector<Polynomial> candidate_basis(int n, int e);

/// Same basis with the even-e elements phi(F_a), |a| = d+1, replaced by
/// phi(F_a) + sum_i a_i phi(x_n F_{a - e_i}), which removes the reducible
/// tail terms. Odd e is returned unchanged.
std::vector<Polynomial> reduced_candidate_basis(int n, int e);

/// Leading coefficients are 1 and no support monomial of any element is
/// divisible by the leading monomial of another element. Requires a
/// certified basis.
bool is_reduced(const GroebnerBasis& B);

/// Monomial ideal minimally generated by the leading monomials. Requires a
/// certified or degree-capped basis.
MonomialIdeal initial_ideal(const GroebnerBasis& B);

/// Degreewise dimension data of the polynomial ideal: dim I_q, dim R_1
/// I_{q-1} (exact rank of the spanning products), and the difference r_q =
/// number of minimal generators in degree q.
struct PolyIdealDegreeData {
    struct Row {
        long long dim_ideal = 0;
        long long dim_from_below = 0;
        long long new_generators = 0;
    };
    std::map<int, Row> by_degree;

    long long r(int q) const {
        auto it = by_degree.find(q);
        return it == by_degree.end() ? 0 : it->second.new_generators;
    }
};

PolyIdealDegreeData minimal_generator_counts_poly(const GroebnerBasis& B, int up_to);

/// Whether f (homogeneous of degree q) lies in R_1 * I_{q-1}; exact rank
/// test against the spanning products.
bool in_r1_times_piece(const GroebnerBasis& B, int q, const Polynomial& f);

} // namespace apolar

#endif
