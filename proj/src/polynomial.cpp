#include "apolar/polynomial.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace apolar {

namespace {

const MonomialOrder kCanonical{OrderKind::DegRevLex};

struct CanonicalGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return kCanonical.greater(a, b);
    }
};

} // namespace

void Polynomial::check_same_n(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_)
        throw DimensionError("polynomials live in different variable counts");
}

Polynomial Polynomial::constant(int n, const Rational& c) {
    return from_monomial(Monomial::one(n), c);
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
    Polynomial p(m.nvars());
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

Polynomial Polynomial::from_terms(int n, std::vector<Term> terms) {
    std::map<Monomial, Rational, CanonicalGreater> acc;
    for (auto& [m, c] : terms) {
        if (m.nvars() != n) throw DimensionError("term does not match ambient variable count");
        acc[m] += c;
    }
    Polynomial p(n);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
    for (const auto& [mm, c] : terms_)
        if (mm == m) return c;
    return Rational(0);
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.front().first.degree();
}

const Polynomial::Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw InputError("leading term of the zero polynomial");
    if (order.kind() == OrderKind::DegRevLex) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (order.greater(t.first, best->first)) best = &t;
    return *best;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& order) const {
    return leading_term(order).first;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    check_same_n(*this, g);
    Polynomial r(n_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        Cmp c = kCanonical.compare(terms_[i].first, g.terms_[j].first);
        if (c == Cmp::Greater) {
            r.terms_.push_back(terms_[i++]);
        } else if (c == Cmp::Less) {
            r.terms_.push_back(g.terms_[j++]);
        } else {
            Rational s = terms_[i].second + g.terms_[j].second;
            if (s != 0) r.terms_.emplace_back(terms_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(n_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial(n_);
    Polynomial r(n_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, a] : terms_) r.terms_.emplace_back(m, a * c);
    return r;
}

Polynomial Polynomial::scaled_shift(const Rational& c, const Monomial& m) const {
    if (c == 0) return Polynomial(n_);
    Polynomial r(n_);
    r.terms_.reserve(terms_.size());
    // Multiplying every monomial by a fixed monomial preserves the relative
    // order, so the result is already sorted.
    for (const auto& [mm, a] : terms_) r.terms_.emplace_back(mm * m, a * c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    check_same_n(*this, g);
    std::map<Monomial, Rational, CanonicalGreater> acc;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : g.terms_) acc[ma * mb] += ca * cb;
    Polynomial r(n_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, c);
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (a != 1 || m.is_one()) {
            os << a.get_str();
            if (!m.is_one()) os << "*";
        }
        if (!m.is_one()) os << m.str();
        first = false;
    }
    return os.str();
}

Polynomial phi(const Polynomial& f) {
    std::vector<Polynomial::Term> out;
    out.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) {
        Integer den(1);
        for (int i = 0; i < m.nvars(); ++i)
            if (m[i] > 1) den *= factorial(static_cast<unsigned long>(m[i]));
        out.emplace_back(m, c / Rational(den));
    }
    return Polynomial::from_terms(f.nvars(), std::move(out));
}

Polynomial f_of(const std::vector<int>& a) {
    int n = static_cast<int>(a.size()) + 1;
    if (n < 2) throw InputError("f_of: need n >= 2 (a has length n-1)");
    Polynomial r = Polynomial::constant(n, Rational(1));
    for (int i = 0; i + 1 < n; ++i) {
        Polynomial lin = Polynomial::from_monomial(Monomial::variable(n, i)) -
                         Polynomial::from_monomial(Monomial::variable(n, n - 1));
        for (int k = 0; k < a[static_cast<size_t>(i)]; ++k) r = r * lin;
    }
    return r;
}

Polynomial complete_symmetric(int n, int e) {
    if (n < 1) throw InputError("complete_symmetric: need n >= 1");
    std::vector<Polynomial::Term> terms;
    for (const auto& m : monomials_of_degree(n, e, kCanonical))
        terms.emplace_back(m, Rational(1));
    return Polynomial::from_terms(n, std::move(terms));
}

Polynomial apply_diff(const Polynomial& f, const Polynomial& g) {
    if (f.nvars() != g.nvars())
        throw DimensionError("apply_diff: operands live in different variable counts");
    std::vector<Polynomial::Term> out;
    for (const auto& [mu, a] : f.terms()) {
        for (const auto& [nu, b] : g.terms()) {
            if (!mu.divides(nu)) continue;
            // d^mu x^nu = (prod falling factorials) x^(nu-mu)
            Integer scale(1);
            for (int i = 0; i < mu.nvars(); ++i)
                for (int k = 0; k < mu[i]; ++k) scale *= (nu[i] - k);
            out.emplace_back(nu / mu, a * b * Rational(scale));
        }
    }
    return Polynomial::from_terms(f.nvars(), std::move(out));
}

Polynomial random_form(int n, int e, Seed seed, long bound) {
    if (bound < 1) throw InputError("random_form: need bound >= 1");
    std::mt19937_64 eng(seed.value);
    // Unbiased draw from [-bound, bound] \ {0} via rejection; implemented by
    // hand so the stream is identical on every platform.
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
    auto draw = [&]() -> long {
        for (;;) {
            std::uint64_t u = eng();
            if (u > limit && limit != std::numeric_limits<std::uint64_t>::max()) continue;
            std::uint64_t k = u % span;
            long v = static_cast<long>(k) - bound; // in [-bound, bound-1]
            return v >= 0 ? v + 1 : v;             // skip zero
        }
    };
    std::vector<Polynomial::Term> terms;
    for (const auto& m : monomials_of_degree(n, e, kCanonical))
        terms.emplace_back(m, Rational(draw()));
    return Polynomial::from_terms(n, std::move(terms));
}

} // namespace apolar
