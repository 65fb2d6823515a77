#include "apolar/monomial_ideal.hpp"

#include <algorithm>

namespace apolar {

namespace {
const MonomialOrder kDegRevLex{OrderKind::DegRevLex};
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n) {
    for (const auto& g : gens)
        if (g.nvars() != n) throw DimensionError("generator does not match ambient variable count");
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return kDegRevLex.greater(a, b);
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // keep only divisibility-minimal generators
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& kept : gens_) {
            if (kept != g && kept.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) gens_.push_back(g);
    }
    // a unit generator swallows everything else
    for (const auto& g : gens_) {
        if (g.is_one()) {
            gens_ = {g};
            break;
        }
    }
}

MonomialIdeal MonomialIdeal::power_of_variables(int n, int d) {
    return MonomialIdeal(n, monomials_of_degree(n, d, kDegRevLex));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

std::vector<Monomial> MonomialIdeal::degree_piece(int d) const {
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(n_, d, kDegRevLex))
        if (contains(m)) out.push_back(m);
    return out;
}

std::vector<Monomial> MonomialIdeal::standard_monomials(int d) const {
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(n_, d, kDegRevLex))
        if (!contains(m)) out.push_back(m);
    return out;
}

std::vector<Monomial> revlex_segment(int n, int d, long long count, const MonomialOrder& order) {
    auto all = monomials_of_degree(n, d, order);
    if (count < 0 || count > static_cast<long long>(all.size()))
        throw InputError("revlex_segment: count exceeds the number of degree-d monomials");
    all.resize(static_cast<size_t>(count));
    return all;
}

MonomialIdeal predicted_in_ann(int n, int e) {
    if (n < 2 || e < 1) throw InputError("predicted_in_ann: need n >= 2, e >= 1");
    std::vector<Monomial> gens;
    auto push_block = [&](int xn_power, int j) {
        for (const auto& a : monomials_of_degree(n - 1, j, kDegRevLex)) {
            std::vector<int> exps = a.exponents();
            exps.push_back(xn_power);
            gens.emplace_back(std::move(exps));
        }
    };
    if (e % 2 == 1) {
        int d = (e - 1) / 2;
        for (int i = 0; i <= d + 1; ++i) push_block(2 * i, d + 1 - i);
    } else {
        int d = e / 2;
        push_block(0, d + 1);
        push_block(1, d);
        for (int i = 1; i <= d; ++i) push_block(2 * i + 1, d - i);
    }
    return MonomialIdeal(n, std::move(gens));
}

bool is_strongly_stable(const MonomialIdeal& J) {
    for (const auto& g : J.gens()) {
        for (int i = 0; i < g.nvars(); ++i) {
            if (g[i] == 0) continue;
            for (int j = 0; j < i; ++j) {
                Monomial moved(g);
                moved[i] -= 1;
                moved[j] += 1;
                if (!J.contains(moved)) return false;
            }
        }
    }
    return true;
}

bool is_weakly_revlex(const MonomialIdeal& J, const MonomialOrder& order) {
    if (order.kind() != OrderKind::DegRevLex)
        throw InputError("is_weakly_revlex is defined for degrevlex only");
    for (const auto& g : J.gens()) {
        for (const auto& m : monomials_of_degree(J.nvars(), g.degree(), order)) {
            if (m == g) break; // descending enumeration: everything before g precedes it
            if (!J.contains(m)) return false;
        }
    }
    return true;
}

bool is_revlex_ideal(const MonomialIdeal& J, int up_to) {
    for (int d = 0; d <= up_to; ++d) {
        bool in_tail = false;
        for (const auto& m : monomials_of_degree(J.nvars(), d, kDegRevLex)) {
            bool member = J.contains(m);
            if (in_tail && member) return false;
            if (!member) in_tail = true;
        }
    }
    return true;
}

HilbertFunction hilbert_function(const MonomialIdeal& J, int up_to) {
    HilbertFunction h;
    h.values.reserve(static_cast<size_t>(up_to) + 1);
    for (int d = 0; d <= up_to; ++d)
        h.values.push_back(static_cast<long long>(J.standard_monomials(d).size()));
    return h;
}

bool is_artinian(const MonomialIdeal& J) {
    // A pure power's only divisors are pure powers, so it is enough to scan
    // the minimal generators.
    int n = J.nvars();
    std::vector<bool> covered(static_cast<size_t>(n), false);
    for (const auto& g : J.gens()) {
        if (g.is_one()) return true;
        int mv = g.max_var();
        if (g[mv] == g.degree()) covered[static_cast<size_t>(mv)] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

namespace {

int artinian_degree_bound(const MonomialIdeal& J) {
    // Every monomial of degree 1 + sum_i (k_i - 1) is divisible by some
    // x_i^{k_i}, so the socle sits strictly below that.
    int n = J.nvars();
    std::vector<int> power(static_cast<size_t>(n), -1);
    for (const auto& g : J.gens()) {
        if (g.is_one()) return 0;
        int mv = g.max_var();
        int& p = power[static_cast<size_t>(mv)];
        if (g[mv] == g.degree() && (p < 0 || g[mv] < p)) p = g[mv];
    }
    int bound = 1;
    for (int p : power) {
        if (p < 0) return -1;
        bound += p - 1;
    }
    return bound;
}

} // namespace

int socle_degree(const MonomialIdeal& J) {
    if (!is_artinian(J)) throw PreconditionError("socle_degree: quotient is not Artinian");
    int bound = artinian_degree_bound(J);
    int top = -1;
    for (int d = 0; d <= bound; ++d)
        if (!J.standard_monomials(d).empty()) top = d;
    return top;
}

std::map<int, long long> minimal_generator_counts(const MonomialIdeal& J) {
    std::map<int, long long> counts;
    for (const auto& g : J.gens()) counts[g.degree()] += 1;
    return counts;
}

bool lefschetz_check(const MonomialIdeal& J, int e) {
    if (!is_artinian(J)) throw PreconditionError("lefschetz_check: quotient is not Artinian");
    int n = J.nvars();
    for (int i = 0; 2 * i < e; ++i) {
        auto low = J.standard_monomials(i);
        auto high = J.standard_monomials(e - i);
        if (low.size() != high.size()) return false;
        Monomial shift = Monomial::variable(n, n - 1, e - 2 * i);
        for (const auto& m : low)
            if (J.contains(m * shift)) return false;
        // monomial multiplication is injective, and the image avoids J, so
        // equal cardinalities force a bijection onto the standard monomials
    }
    return true;
}

} // namespace apolar
