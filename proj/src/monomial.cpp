#include "apolar/monomial.hpp"

#include <algorithm>

namespace apolar {

namespace {

void enumerate(int n, int d, int pos, std::vector<int>& cur, std::vector<Monomial>& out) {
    if (pos == n - 1) {
        cur[static_cast<size_t>(pos)] = d;
        out.emplace_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[static_cast<size_t>(pos)] = e;
        enumerate(n, d - e, pos + 1, cur, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(int n, int d, const MonomialOrder& order) {
    if (n < 1) throw InputError("monomials_of_degree: need n >= 1");
    if (d < 0) return {};
    std::vector<Monomial> out;
    out.reserve(static_cast<size_t>(dim_rd(n, d)));
    std::vector<int> cur(static_cast<size_t>(n), 0);
    enumerate(n, d, 0, cur, out);
    std::sort(out.begin(), out.end(),
              [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    return out;
}

} // namespace apolar
