#ifndef APOLAR_BETTI_HPP
#define APOLAR_BETTI_HPP

#include <map>
#include <string>
#include <utility>

#include "apolar/monomial_ideal.hpp"

namespace apolar {

/// Graded Betti numbers of R/J. Entries are keyed by (homological degree p,
/// generator-contribution degree q): the value at (p, q) is
/// beta_{p, q+p-1}(R/J), so minimal generators of degree q land in row q for
/// every p. Rendering labels rows q-1, matching the usual Betti-table layout
/// where row r holds beta_{p, p+r}.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;
    std::map<int, long long> totals;

    void add(int p, int q, long long v) {
        if (v == 0) return;
        entries[{p, q}] += v;
        totals[p] += v;
    }

    long long at(int p, int q) const {
        auto it = entries.find({p, q});
        return it == entries.end() ? 0 : it->second;
    }

    long long total(int p) const {
        auto it = totals.find(p);
        return it == totals.end() ? 0 : it->second;
    }

    bool operator==(const BettiTable& o) const { return entries == o.entries; }
    bool operator!=(const BettiTable& o) const { return !(*this == o); }
};

enum class BettiFormat { Text, Json };

/// Eliahou-Kervaire Betti numbers from the minimal generators of a strongly
/// stable ideal: each generator u of degree q contributes
/// binomial(m(u)-1, p-1) to (p, q), m(u) the largest variable index in u.
BettiTable ek_betti(const MonomialIdeal& J);

/// sum_{i=1..n} binomial(d+i-2, d-1) binomial(i-1, p-1): the common total
/// Betti numbers of R/m^d and of every strongly stable Artinian R/J generated
/// in degrees >= d that contains all degree-d monomials prime to x_n.
long long betti_formula(int n, int d, int p);

/// Closed-form graded Betti numbers of R/in(ann G) for a generic degree-e
/// form, straight from the known generator layout of the initial ideal.
BettiTable graded_betti_in_annG(int n, int e);

/// Graded Betti numbers of R/J for an arbitrary Artinian monomial ideal by
/// exact rank computations on the Koszul complex. Independent of the EK
/// route; also the honest fallback when J is not strongly stable.
BettiTable graded_betti_koszul(const MonomialIdeal& J);

/// Macaulay2-style table (rows labeled q-1, "." for zeros, a "total:" row)
/// or its JSON mirror.
std::string render_betti(const BettiTable& T, BettiFormat format);

} // namespace apolar

#endif
