#include "apolar/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "apolar/matrix.hpp"

namespace apolar {

namespace {

using Term = Polynomial::Term;
using TermVec = std::vector<Term>;

TermVec to_sorted_terms(const Polynomial& p, const MonomialOrder& order) {
    TermVec v = p.terms();
    if (order.kind() != OrderKind::DegRevLex)
        std::sort(v.begin(), v.end(), [&order](const Term& a, const Term& b) {
            return order.greater(a.first, b.first);
        });
    return v;
}

Polynomial from_sorted_terms(int n, TermVec v) {
    return Polynomial::from_terms(n, std::move(v));
}

/// f <- f - coef * shift * g, where f[i] is the monomial being reduced and
/// cancels exactly. Entries before i are untouched.
void reduce_step(TermVec& f, size_t i, const Rational& coef, const Monomial& shift,
                 const TermVec& g, const MonomialOrder& order) {
    TermVec out;
    out.reserve(f.size() + g.size());
    for (size_t k = 0; k < i; ++k) out.push_back(std::move(f[k]));
    size_t a = i, b = 0;
    Monomial gm;
    bool have_gm = false;
    while (a < f.size() && b < g.size()) {
        if (!have_gm) {
            gm = g[b].first * shift;
            have_gm = true;
        }
        Cmp c = order.compare(f[a].first, gm);
        if (c == Cmp::Greater) {
            out.push_back(std::move(f[a++]));
        } else if (c == Cmp::Less) {
            out.emplace_back(gm, -(coef * g[b].second));
            ++b;
            have_gm = false;
        } else {
            Rational s = f[a].second - coef * g[b].second;
            if (s != 0) out.emplace_back(f[a].first, std::move(s));
            ++a;
            ++b;
            have_gm = false;
        }
    }
    while (a < f.size()) out.push_back(std::move(f[a++]));
    for (; b < g.size(); ++b) out.emplace_back(g[b].first * shift, -(coef * g[b].second));
    f = std::move(out);
}

struct Reducer {
    Monomial lm;
    Rational lc;
    const TermVec* terms;
};

/// Full normal form: repeatedly reduce the largest reducible monomial by the
/// first matching reducer. Monomials above the cursor are irreducible and
/// subtraction only touches monomials at or below it, so one descending sweep
/// suffices.
TermVec reduce_full(TermVec f, const std::vector<Reducer>& reds, const MonomialOrder& order) {
    size_t i = 0;
    while (i < f.size()) {
        const Monomial& m = f[i].first;
        const Reducer* hit = nullptr;
        for (const auto& r : reds) {
            if (r.lm.divides(m)) {
                hit = &r;
                break;
            }
        }
        if (hit == nullptr) {
            ++i;
            continue;
        }
        Rational coef = f[i].second / hit->lc;
        Monomial shift = m / hit->lm;
        reduce_step(f, i, coef, shift, *hit->terms, order);
    }
    return f;
}

void monicize(TermVec& v, const MonomialOrder& order) {
    if (v.empty()) return;
    size_t lead = 0;
    for (size_t i = 1; i < v.size(); ++i)
        if (order.greater(v[i].first, v[lead].first)) lead = i;
    Rational inv = 1 / v[lead].second;
    for (auto& [m, c] : v) c *= inv;
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& B,
                       const MonomialOrder& order) {
    std::vector<TermVec> storage;
    storage.reserve(B.size());
    std::vector<Reducer> reds;
    reds.reserve(B.size());
    for (const auto& b : B) {
        if (b.is_zero()) throw InputError("normal_form: zero divisor polynomial");
        if (b.nvars() != f.nvars())
            throw DimensionError("normal_form: mismatched variable counts");
        storage.push_back(to_sorted_terms(b, order));
        reds.push_back({storage.back().front().first, storage.back().front().second, nullptr});
    }
    for (size_t i = 0; i < reds.size(); ++i) reds[i].terms = &storage[i];
    return from_sorted_terms(f.nvars(), reduce_full(to_sorted_terms(f, order), reds, order));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw InputError("s_polynomial: zero input");
    const auto& [mf, cf] = f.leading_term(order);
    const auto& [mg, cg] = g.leading_term(order);
    Monomial L = lcm(mf, mg);
    return f.scaled_shift(1 / cf, L / mf) - g.scaled_shift(1 / cg, L / mg);
}

namespace {

/// Working state shared by buchberger and is_groebner_basis.
struct Engine {
    MonomialOrder order;
    std::vector<TermVec> elems; // monic, sorted by `order`
    std::vector<Monomial> lms;
    std::vector<size_t> view; // ids ordered by (lm descending, id)
    std::set<std::tuple<int, size_t, size_t>> pending;
    std::optional<int> cap;

    explicit Engine(const MonomialOrder& o) : order(o) {}

    size_t add(TermVec t) {
        monicize(t, order);
        std::sort(t.begin(), t.end(), [this](const Term& a, const Term& b) {
            return order.greater(a.first, b.first);
        });
        size_t id = elems.size();
        lms.push_back(t.front().first);
        elems.push_back(std::move(t));
        auto pos = std::lower_bound(view.begin(), view.end(), id, [this](size_t a, size_t b) {
            Cmp c = order.compare(lms[a], lms[b]);
            if (c != Cmp::Equal) return c == Cmp::Greater;
            return a < b;
        });
        view.insert(pos, id);
        for (size_t k = 0; k < id; ++k) {
            int deg = lcm(lms[k], lms[id]).degree();
            if (cap && deg > *cap) continue;
            pending.emplace(deg, k, id);
        }
        return id;
    }

    std::vector<Reducer> reducers() const {
        std::vector<Reducer> reds;
        reds.reserve(view.size());
        for (size_t id : view) reds.push_back({lms[id], Rational(1), &elems[id]});
        return reds;
    }

    bool pair_pending(size_t a, size_t b) const {
        if (a > b) std::swap(a, b);
        return pending.count({lcm(lms[a], lms[b]).degree(), a, b}) != 0;
    }

    void run() {
        while (!pending.empty()) {
            auto [deg, i, j] = *pending.begin();
            pending.erase(pending.begin());
            Monomial L = lcm(lms[i], lms[j]);
            if (coprime(lms[i], lms[j])) continue;
            bool chain = false;
            for (size_t k = 0; k < elems.size() && !chain; ++k) {
                if (k == i || k == j) continue;
                if (lms[k].divides(L) && !pair_pending(i, k) && !pair_pending(j, k)) chain = true;
            }
            if (chain) continue;
            TermVec s(elems[i]);
            {
                // both inputs are monic, so the S-polynomial is a plain
                // shifted difference
                Monomial shift_i = L / lms[i];
                for (auto& [m, c] : s) m = m * shift_i;
                reduce_step(s, 0, Rational(1), L / lms[j], elems[j], order);
            }
            TermVec r = reduce_full(std::move(s), reducers(), order);
            if (!r.empty()) add(std::move(r));
        }
    }
};

} // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         std::optional<int> degree_cap) {
    Engine eng(order);
    eng.cap = degree_cap;
    int n = 0;
    for (const auto& g : gens) {
        if (g.is_zero()) throw InputError("buchberger: zero generator");
        if (degree_cap && !g.is_homogeneous())
            throw InputError("buchberger: degree-capped runs need homogeneous generators");
        n = g.nvars();
    }
    for (const auto& g : gens) eng.add(to_sorted_terms(g, order));
    eng.run();

    // keep only elements whose leading monomial no other element divides
    std::vector<bool> drop(eng.elems.size(), false);
    for (size_t a = 0; a < eng.elems.size(); ++a) {
        for (size_t b = 0; b < eng.elems.size() && !drop[a]; ++b) {
            if (a == b || drop[b]) continue;
            if (eng.lms[b].divides(eng.lms[a]) && (eng.lms[b] != eng.lms[a] || b < a))
                drop[a] = true;
        }
    }
    GroebnerBasis out;
    out.order = order;
    out.certified = !degree_cap.has_value();
    out.degree_cap = degree_cap;
    for (size_t id : eng.view)
        if (!drop[id]) out.elems.push_back(from_sorted_terms(n, TermVec(eng.elems[id])));
    return out;
}

bool is_groebner_basis(const std::vector<Polynomial>& B, const MonomialOrder& order) {
    if (B.empty()) return true;
    std::vector<TermVec> storage;
    std::vector<Monomial> lms;
    std::vector<Reducer> reds;
    for (const auto& b : B) {
        if (b.is_zero()) throw InputError("is_groebner_basis: zero element");
        storage.push_back(to_sorted_terms(b, order));
        lms.push_back(storage.back().front().first);
    }
    reds.reserve(B.size());
    for (size_t i = 0; i < storage.size(); ++i)
        reds.push_back({lms[i], storage[i].front().second, &storage[i]});

    // pairs in normal-selection order; a pair may be skipped when a third
    // element divides the lcm and both linking pairs were already handled
    std::set<std::tuple<int, size_t, size_t>> todo;
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = i + 1; j < B.size(); ++j)
            todo.emplace(lcm(lms[i], lms[j]).degree(), i, j);
    std::set<std::pair<size_t, size_t>> done;
    auto handled = [&](size_t a, size_t b) {
        if (a > b) std::swap(a, b);
        return done.count({a, b}) != 0;
    };
    while (!todo.empty()) {
        auto [deg, i, j] = *todo.begin();
        todo.erase(todo.begin());
        done.insert({i, j});
        if (coprime(lms[i], lms[j])) continue;
        Monomial L = lcm(lms[i], lms[j]);
        bool chain = false;
        for (size_t k = 0; k < B.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (lms[k].divides(L) && handled(i, k) && handled(j, k)) chain = true;
        }
        if (chain) continue;
        TermVec s = to_sorted_terms(s_polynomial(B[i], B[j], order), order);
        if (s.empty()) continue;
        if (!reduce_full(std::move(s), reds, order).empty()) return false;
    }
    return true;
}

GroebnerBasis certify(std::vector<Polynomial> B, const MonomialOrder& order) {
    if (!is_groebner_basis(B, order))
        throw InputError("certify: the given set is not a Groebner basis");
    GroebnerBasis out;
    out.order = order;
    out.certified = true;
    std::sort(B.begin(), B.end(), [&order](const Polynomial& a, const Polynomial& b) {
        return order.greater(a.leading_monomial(order), b.leading_monomial(order));
    });
    for (auto& p : B) out.elems.push_back(p.scaled(1 / p.leading_term(order).second));
    return out;
}

std::vector<Polynomial> candidate_basis(int n, int e) {
    if (n < 2 || e < 1) throw InputError("candidate_basis: need n >= 2, e >= 1");
    const MonomialOrder drl{OrderKind::DegRevLex};
    std::vector<Polynomial> out;
    auto push_family = [&](int xn_power, int asize) {
        for (const auto& a : monomials_of_degree(n - 1, asize, drl)) {
            Polynomial fa = f_of(a.exponents());
            out.push_back(phi(fa.scaled_shift(Rational(1), Monomial::variable(n, n - 1, xn_power))));
        }
    };
    if (e % 2 == 0) {
        int d = e / 2;
        push_family(0, d + 1);
        for (int i = 0; i <= d; ++i) push_family(2 * i + 1, d - i);
    } else {
        int d = (e - 1) / 2;
        for (int i = 0; i <= d + 1; ++i) push_family(2 * i, d + 1 - i);
    }
    std::sort(out.begin(), out.end(), [&drl](const Polynomial& a, const Polynomial& b) {
        return drl.greater(a.leading_monomial(drl), b.leading_monomial(drl));
    });
    return out;
}

std::vector<Polynomial> reduced_candidate_basis(int n, int e) {
    if (e % 2 == 1) return candidate_basis(n, e);
    if (n < 2 || e < 1) throw InputError("reduced_candidate_basis: need n >= 2, e >= 1");
    const MonomialOrder drl{OrderKind::DegRevLex};
    int d = e / 2;
    std::vector<Polynomial> out;
    Monomial xn = Monomial::variable(n, n - 1);
    for (const auto& a : monomials_of_degree(n - 1, d + 1, drl)) {
        Polynomial p = phi(f_of(a.exponents()));
        for (int i = 0; i + 1 < n; ++i) {
            if (a[i] == 0) continue;
            std::vector<int> lowered = a.exponents();
            lowered[static_cast<size_t>(i)] -= 1;
            Polynomial tail = phi(f_of(lowered).scaled_shift(Rational(1), xn));
            p = p + tail.scaled(Rational(a[i]));
        }
        out.push_back(std::move(p));
    }
    auto push_family = [&](int xn_power, int asize) {
        for (const auto& a : monomials_of_degree(n - 1, asize, drl)) {
            Polynomial fa = f_of(a.exponents());
            out.push_back(phi(fa.scaled_shift(Rational(1), Monomial::variable(n, n - 1, xn_power))));
        }
    };
    for (int i = 0; i <= d; ++i) push_family(2 * i + 1, d - i);
    std::sort(out.begin(), out.end(), [&drl](const Polynomial& a, const Polynomial& b) {
        return drl.greater(a.leading_monomial(drl), b.leading_monomial(drl));
    });
    return out;
}

bool is_reduced(const GroebnerBasis& B) {
    if (!B.certified) throw PreconditionError("is_reduced: basis not certified");
    for (const auto& p : B.elems)
        if (p.leading_term(B.order).second != 1) return false;
    for (size_t i = 0; i < B.elems.size(); ++i) {
        for (size_t j = 0; j < B.elems.size(); ++j) {
            if (i == j) continue;
            const Monomial& lm = B.elems[j].leading_monomial(B.order);
            for (const auto& [m, c] : B.elems[i].terms())
                if (lm.divides(m)) return false;
        }
    }
    return true;
}

MonomialIdeal initial_ideal(const GroebnerBasis& B) {
    if (!B.certified && !B.degree_cap)
        throw PreconditionError("initial_ideal: basis neither certified nor degree-capped");
    if (B.elems.empty()) throw InputError("initial_ideal: empty basis");
    std::vector<Monomial> lms;
    lms.reserve(B.elems.size());
    for (const auto& p : B.elems) lms.push_back(p.leading_monomial(B.order));
    return MonomialIdeal(B.elems.front().nvars(), std::move(lms));
}

namespace {

/// Coefficient rows of {m * g_k : deg(m g_k) = q, deg m >= min_cofactor} over
/// the degree-q monomial basis.
RationalMatrix span_rows(const GroebnerBasis& B, int q, int min_cofactor,
                         const std::vector<Monomial>& basis_q,
                         const std::map<Monomial, size_t>& index) {
    int n = B.elems.front().nvars();
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : B.elems) {
        auto dg = g.homogeneous_degree();
        if (!dg) throw InputError("degree data needs homogeneous basis elements");
        int cof = q - *dg;
        if (cof < min_cofactor) continue;
        for (const auto& m : monomials_of_degree(n, cof, B.order)) {
            std::vector<Rational> row(basis_q.size(), Rational(0));
            for (const auto& [mm, c] : g.terms()) row[index.at(mm * m)] = c;
            rows.push_back(std::move(row));
        }
    }
    RationalMatrix M(rows.size(), basis_q.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < basis_q.size(); ++c) M.at(r, c) = rows[r][c];
    return M;
}

std::map<Monomial, size_t> index_of(const std::vector<Monomial>& basis) {
    std::map<Monomial, size_t> idx;
    for (size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
    return idx;
}

} // namespace

PolyIdealDegreeData minimal_generator_counts_poly(const GroebnerBasis& B, int up_to) {
    if (!B.certified && !(B.degree_cap && up_to <= *B.degree_cap))
        throw PreconditionError("minimal_generator_counts_poly: basis not certified to this degree");
    if (B.elems.empty()) throw InputError("minimal_generator_counts_poly: empty basis");
    int n = B.elems.front().nvars();
    MonomialIdeal in = initial_ideal(B);
    PolyIdealDegreeData data;
    for (int q = 0; q <= up_to; ++q) {
        PolyIdealDegreeData::Row row;
        row.dim_ideal = static_cast<long long>(in.degree_piece(q).size());
        auto basis_q = monomials_of_degree(n, q, B.order);
        auto idx = index_of(basis_q);
        row.dim_from_below = span_rows(B, q, 1, basis_q, idx).rank();
        row.new_generators = row.dim_ideal - row.dim_from_below;
        data.by_degree[q] = row;
    }
    return data;
}

bool in_r1_times_piece(const GroebnerBasis& B, int q, const Polynomial& f) {
    if (B.elems.empty()) throw InputError("in_r1_times_piece: empty basis");
    auto df = f.homogeneous_degree();
    if (!df || *df != q) throw InputError("in_r1_times_piece: f must be homogeneous of degree q");
    int n = B.elems.front().nvars();
    auto basis_q = monomials_of_degree(n, q, B.order);
    auto idx = index_of(basis_q);
    RationalMatrix M = span_rows(B, q, 1, basis_q, idx);
    long long base_rank = M.rank();
    RationalMatrix M2(M.rows() + 1, M.cols());
    for (size_t r = 0; r < M.rows(); ++r)
        for (size_t c = 0; c < M.cols(); ++c) M2.at(r, c) = M.at(r, c);
    for (const auto& [m, c] : f.terms()) M2.at(M.rows(), idx.at(m)) = c;
    return M2.rank() == base_rank;
}

} // namespace apolar
