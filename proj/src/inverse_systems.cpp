#include "apolar/inverse_systems.hpp"

#include <algorithm>
#include <map>

namespace apolar {

RationalMatrix catalecticant(const Polynomial& G, int d, const MonomialOrder& order) {
    auto e_opt = G.homogeneous_degree();
    if (!e_opt) throw InputError("catalecticant: G must be homogeneous and nonzero");
    int e = *e_opt;
    if (d < 0 || d > e) throw InputError("catalecticant: need 0 <= d <= deg G");
    int n = G.nvars();

    std::map<Monomial, Rational> coeffs;
    for (const auto& [m, c] : G.terms()) coeffs.emplace(m, c);

    RationalMatrix M(monomials_of_degree(n, e - d, order), monomials_of_degree(n, d, order),
                     order);
    for (size_t r = 0; r < M.rows(); ++r) {
        for (size_t c = 0; c < M.cols(); ++c) {
            // (mu nu) o G = coeff of mu nu in G times (mu nu) o (mu nu),
            // the product of exponent factorials.
            Monomial mn = M.row_labels()[r] * M.col_labels()[c];
            auto it = coeffs.find(mn);
            if (it == coeffs.end()) continue;
            Integer fac(1);
            for (int i = 0; i < n; ++i)
                if (mn[i] > 1) fac *= factorial(static_cast<unsigned long>(mn[i]));
            M.at(r, c) = it->second * Rational(fac);
        }
    }
    return M;
}

GradedVectorSpace kernel_basis(const RationalMatrix& M) {
    GradedVectorSpace V;
    const auto& cols = M.col_labels();
    if (cols.empty()) return V;
    V.degree = cols.front().degree();
    int n = cols.front().nvars();
    for (const auto& vec : M.kernel_vectors()) {
        std::vector<Polynomial::Term> terms;
        for (size_t c = 0; c < cols.size(); ++c)
            if (vec[c] != 0) terms.emplace_back(cols[c], vec[c]);
        V.basis.push_back(Polynomial::from_terms(n, std::move(terms)));
    }
    return V;
}

GradedVectorSpace ann_graded_piece(const Polynomial& G, int d, const MonomialOrder& order) {
    return kernel_basis(catalecticant(G, d, order));
}

std::vector<Monomial> initial_monomials(const GradedVectorSpace& V, const MonomialOrder& order) {
    std::vector<Monomial> out;
    out.reserve(V.basis.size());
    for (const auto& p : V.basis) out.push_back(p.leading_monomial(order));
    std::sort(out.begin(), out.end(),
              [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    return out;
}

HilbertFunction compressed_hilbert(int n, int e) {
    if (n < 1) throw InputError("compressed_hilbert: need n >= 1");
    HilbertFunction h;
    h.values.assign(static_cast<size_t>(e) + 2, 0);
    for (int i = 0; i <= e; ++i)
        h.values[static_cast<size_t>(i)] = i <= e / 2 ? dim_rd(n, i) : dim_rd(n, e - i);
    return h;
}

HilbertFunction hilbert_of_ann_quotient(const Polynomial& G, const MonomialOrder& order) {
    auto e_opt = G.homogeneous_degree();
    if (!e_opt) throw InputError("hilbert_of_ann_quotient: G must be homogeneous and nonzero");
    int e = *e_opt;
    int n = G.nvars();
    HilbertFunction h;
    h.values.assign(static_cast<size_t>(e) + 2, 0);
    for (int d = 0; d <= e; ++d)
        h.values[static_cast<size_t>(d)] =
            dim_rd(n, d) - static_cast<long long>(ann_graded_piece(G, d, order).dim());
    return h;
}

} // namespace apolar
