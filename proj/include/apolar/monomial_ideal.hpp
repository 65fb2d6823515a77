#ifndef APOLAR_MONOMIAL_IDEAL_HPP
#define APOLAR_MONOMIAL_IDEAL_HPP

#include <map>
#include <vector>

#include "apolar/hilbert.hpp"
#include "apolar/monomial.hpp"

namespace apolar {

/// Monomial ideal kept as its minimal generating set, sorted descending in
/// degrevlex. Constructors minimalize, so no generator divides another.
class MonomialIdeal {
public:
    MonomialIdeal(int n, std::vector<Monomial> gens);

    /// m^d = (x_1..x_n)^d.
    static MonomialIdeal power_of_variables(int n, int d);

    int nvars() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    bool contains(const Monomial& m) const;

    /// Monomials of degree d in the ideal, descending degrevlex.
    std::vector<Monomial> degree_piece(int d) const;
    /// Monomials of degree d not in the ideal, descending degrevlex.
    std::vector<Monomial> standard_monomials(int d) const;

    bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

private:
    int n_;
    std::vector<Monomial> gens_;
};

/// First `count` monomials of degree d in the given order.
std::vector<Monomial> revlex_segment(int n, int d, long long count, const MonomialOrder& order);

/// The initial ideal of the annihilator of a generic (equivalently, complete
/// symmetric) degree-e form under degrevlex, by its closed-form minimal
/// generators: for e = 2d+1 the generators are x_n^{2i} A_{d+1-i} for
/// 0 <= i <= d+1; for e = 2d they are A_{d+1}, x_n A_d, and x_n^{2i+1} A_{d-i}
/// for 1 <= i <= d, where A_j is the degree-j monomial basis of
/// k[x_1..x_{n-1}].
MonomialIdeal predicted_in_ann(int n, int e);

/// Closure under the moves m -> (x_j / x_i) m for j < i, checked on the
/// minimal generators.
bool is_strongly_stable(const MonomialIdeal& J);

/// Every same-degree monomial preceding a minimal generator lies in the
/// ideal. Defined for degrevlex only.
bool is_weakly_revlex(const MonomialIdeal& J, const MonomialOrder& order);

/// Every degree piece up to the bound is a top segment of its degree.
bool is_revlex_ideal(const MonomialIdeal& J, int up_to);

/// Values of dim_k (R/J)_i for 0 <= i <= up_to.
HilbertFunction hilbert_function(const MonomialIdeal& J, int up_to);

/// Some power of every variable lies in J.
bool is_artinian(const MonomialIdeal& J);

/// Largest degree with a nonzero standard monomial. Requires Artinian.
int socle_degree(const MonomialIdeal& J);

/// Histogram degree -> number of minimal generators.
std::map<int, long long> minimal_generator_counts(const MonomialIdeal& J);

/// Whether multiplication by x_n^{e-2i} maps the degree-i standard monomials
/// bijectively onto the degree-(e-i) ones for every i < e/2. Requires
/// Artinian.
bool lefschetz_check(const MonomialIdeal& J, int e);

} // namespace apolar

#endif
