#include "apolar/betti.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "apolar/matrix.hpp"
#include "apolar/rational.hpp"

namespace apolar {

BettiTable ek_betti(const MonomialIdeal& J) {
    if (!is_strongly_stable(J))
        throw PreconditionError("ek_betti: ideal is not strongly stable");
    BettiTable T;
    for (const auto& u : J.gens()) {
        int m = u.max_var() + 1; // one-based
        int q = u.degree();
        for (int p = 1; p <= m; ++p) T.add(p, q, binomial(m - 1, p - 1));
    }
    return T;
}

long long betti_formula(int n, int d, int p) {
    if (p < 1) throw InputError("betti_formula: need p >= 1");
    long long s = 0;
    for (int i = 1; i <= n; ++i) s += binomial(d + i - 2, d - 1) * binomial(i - 1, p - 1);
    return s;
}

BettiTable graded_betti_in_annG(int n, int e) {
    if (n < 2 || e < 1) throw InputError("graded_betti_in_annG: need n >= 2, e >= 1");
    int d = e / 2;
    BettiTable T;
    for (int p = 1; p <= n; ++p) {
        long long v = 0;
        for (int i = 1; i <= n - 1; ++i) v += binomial(d + i - 1, d) * binomial(i - 1, p - 1);
        if (e % 2 == 0) v += binomial(d + n - 2, d) * binomial(n - 1, p - 1);
        T.add(p, d + 1, v);
        for (int q = d + 2; q <= e + 1; ++q)
            T.add(p, q, binomial(e - q + n - 1, n - 2) * binomial(n - 1, p - 1));
    }
    return T;
}

namespace {

/// Basis of the Koszul spot Lambda^p tensor (R/J)_{j-p}: (variable subset,
/// standard monomial) pairs, with a flat index.
struct KoszulSpot {
    std::vector<std::pair<unsigned, size_t>> basis; // (subset mask, monomial idx)
    std::map<std::pair<unsigned, size_t>, size_t> index;
};

KoszulSpot koszul_spot(const std::vector<unsigned>& masks_p,
                       const std::vector<Monomial>& std_monomials) {
    KoszulSpot spot;
    for (unsigned mask : masks_p)
        for (size_t mi = 0; mi < std_monomials.size(); ++mi) {
            spot.index[{mask, mi}] = spot.basis.size();
            spot.basis.emplace_back(mask, mi);
        }
    return spot;
}

} // namespace

BettiTable graded_betti_koszul(const MonomialIdeal& J) {
    if (!is_artinian(J))
        throw PreconditionError("graded_betti_koszul: quotient must be Artinian");
    int n = J.nvars();
    int socle = socle_degree(J);

    // standard monomial bases, degree 0..socle, with index maps
    std::vector<std::vector<Monomial>> std_basis(static_cast<size_t>(socle) + 1);
    std::vector<std::map<Monomial, size_t>> std_index(static_cast<size_t>(socle) + 1);
    for (int d = 0; d <= socle; ++d) {
        std_basis[static_cast<size_t>(d)] = J.standard_monomials(d);
        for (size_t i = 0; i < std_basis[static_cast<size_t>(d)].size(); ++i)
            std_index[static_cast<size_t>(d)].emplace(std_basis[static_cast<size_t>(d)][i], i);
    }
    auto std_of = [&](int d) -> const std::vector<Monomial>& {
        static const std::vector<Monomial> empty;
        return (d < 0 || d > socle) ? empty : std_basis[static_cast<size_t>(d)];
    };

    std::vector<std::vector<unsigned>> masks(static_cast<size_t>(n) + 1);
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        masks[static_cast<size_t>(__builtin_popcount(mask))].push_back(mask);

    // rank of the differential Lambda^p x (R/J)_{j-p} -> Lambda^{p-1} x (R/J)_{j-p+1}
    auto diff_rank = [&](int p, int j) -> long long {
        const auto& src_std = std_of(j - p);
        const auto& dst_std = std_of(j - p + 1);
        if (src_std.empty() || dst_std.empty()) return 0;
        KoszulSpot src = koszul_spot(masks[static_cast<size_t>(p)], src_std);
        KoszulSpot dst = koszul_spot(masks[static_cast<size_t>(p - 1)], dst_std);
        const auto& dst_idx = std_index[static_cast<size_t>(j - p + 1)];
        std::vector<std::vector<Integer>> m(
            src.basis.size(), std::vector<Integer>(dst.basis.size(), Integer(0)));
        for (size_t col = 0; col < src.basis.size(); ++col) {
            auto [mask, mi] = src.basis[col];
            const Monomial& mon = src_std[mi];
            int sign = 1;
            for (int i = 0; i < n; ++i) {
                if (!(mask & (1u << i))) continue;
                Monomial moved = mon * Monomial::variable(n, i);
                if (!J.contains(moved)) {
                    size_t row = dst.index.at({mask & ~(1u << i), dst_idx.at(moved)});
                    m[col][row] = sign;
                }
                sign = -sign;
            }
        }
        return integer_rank(m);
    };

    BettiTable T;
    for (int p = 1; p <= n; ++p) {
        for (int j = p; j <= socle + p; ++j) {
            long long dim_spot =
                binomial(n, p) * static_cast<long long>(std_of(j - p).size());
            if (dim_spot == 0) continue;
            long long beta = dim_spot - diff_rank(p, j) - (p + 1 <= n ? diff_rank(p + 1, j) : 0);
            if (beta < 0)
                throw std::logic_error("graded_betti_koszul: negative homology dimension");
            T.add(p, j - p + 1, beta);
        }
    }
    return T;
}

std::string render_betti(const BettiTable& T, BettiFormat format) {
    if (format == BettiFormat::Json) {
        nlohmann::json j;
        j["totals"] = nlohmann::json::object();
        for (const auto& [p, v] : T.totals) j["totals"][std::to_string(p)] = v;
        j["entries"] = nlohmann::json::array();
        std::vector<std::pair<std::pair<int, int>, long long>> items(T.entries.begin(),
                                                                     T.entries.end());
        std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
            return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
        });
        for (const auto& [pq, v] : items)
            j["entries"].push_back({{"p", pq.first}, {"q", pq.second}, {"value", v}});
        return j.dump();
    }

    int pmax = 0, qmin = 0, qmax = -1;
    for (const auto& [pq, v] : T.entries) {
        pmax = std::max(pmax, pq.first);
        if (qmax < 0) qmin = qmax = pq.second;
        qmin = std::min(qmin, pq.second);
        qmax = std::max(qmax, pq.second);
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{""};
    for (int p = 1; p <= pmax; ++p) head.push_back(std::to_string(p));
    rows.push_back(head);
    std::vector<std::string> tot{"total:"};
    for (int p = 1; p <= pmax; ++p) tot.push_back(std::to_string(T.total(p)));
    rows.push_back(tot);
    for (int q = qmin; q <= qmax; ++q) {
        std::vector<std::string> row{std::to_string(q - 1) + ":"};
        for (int p = 1; p <= pmax; ++p) {
            long long v = T.at(p, q);
            row.push_back(v == 0 ? "." : std::to_string(v));
        }
        rows.push_back(row);
    }
    std::vector<size_t> width(static_cast<size_t>(pmax) + 1, 0);
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c == 0)
                os << row[c] << std::string(width[0] - row[c].size(), ' ');
            else
                os << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        os << "\n";
    }
    return os.str();
}

} // namespace apolar
