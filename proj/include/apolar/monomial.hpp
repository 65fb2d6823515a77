#ifndef APOLAR_MONOMIAL_HPP
#define APOLAR_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "apolar/errors.hpp"

namespace apolar {

/// Monomial in a fixed ambient ring k[x_1..x_n]: an exponent vector of
/// length n. The zero vector is the monomial 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {}
    static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }
    /// x_i as a monomial, i zero-based.
    static Monomial variable(int n, int i, int power = 1) {
        std::vector<int> e(n, 0);
        e.at(static_cast<size_t>(i)) = power;
        return Monomial(std::move(e));
    }

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    int operator[](int i) const { return exps_[static_cast<size_t>(i)]; }
    int& operator[](int i) { return exps_[static_cast<size_t>(i)]; }
    const std::vector<int>& exponents() const { return exps_; }

    bool is_one() const {
        for (int e : exps_)
            if (e != 0) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        check_same_n(*this, m);
        for (size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        check_same_n(*this, m);
        Monomial r(*this);
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += m.exps_[i];
        return r;
    }

    /// Exact quotient; caller guarantees m | *this.
    Monomial operator/(const Monomial& m) const {
        check_same_n(*this, m);
        Monomial r(*this);
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= m.exps_[i];
        return r;
    }

    /// Largest index (zero-based) of a variable dividing the monomial;
    /// -1 for the monomial 1.
    int max_var() const {
        for (int i = nvars() - 1; i >= 0; --i)
            if (exps_[static_cast<size_t>(i)] > 0) return i;
        return -1;
    }

    bool operator==(const Monomial& m) const { return exps_ == m.exps_; }
    bool operator!=(const Monomial& m) const { return exps_ != m.exps_; }
    // Container ordering only; monomial comparisons go through MonomialOrder.
    bool operator<(const Monomial& m) const { return exps_ < m.exps_; }

    std::string str() const {
        if (is_one()) return "1";
        std::string s;
        for (int i = 0; i < nvars(); ++i) {
            int e = exps_[static_cast<size_t>(i)];
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i + 1);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    static void check_same_n(const Monomial& a, const Monomial& b) {
        if (a.nvars() != b.nvars())
            throw DimensionError("monomials live in different variable counts");
    }

private:
    std::vector<int> exps_;
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial::check_same_n(a, b);
    Monomial r(a);
    for (int i = 0; i < a.nvars(); ++i)
        if (b[i] > r[i]) r[i] = b[i];
    return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial::check_same_n(a, b);
    Monomial r(a);
    for (int i = 0; i < a.nvars(); ++i)
        if (b[i] < r[i]) r[i] = b[i];
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    Monomial::check_same_n(a, b);
    for (int i = 0; i < a.nvars(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

enum class OrderKind { DegRevLex, Lex, DegLex };

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

/// Total order on monomials with precedence x_1 > x_2 > ... > x_n.
class MonomialOrder {
public:
    constexpr MonomialOrder(OrderKind kind = OrderKind::DegRevLex) : kind_(kind) {}

    OrderKind kind() const { return kind_; }

    Cmp compare(const Monomial& a, const Monomial& b) const {
        Monomial::check_same_n(a, b);
        switch (kind_) {
        case OrderKind::Lex:
            return lex(a, b);
        case OrderKind::DegLex: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da > db ? Cmp::Greater : Cmp::Less;
            return lex(a, b);
        }
        case OrderKind::DegRevLex:
        default: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da > db ? Cmp::Greater : Cmp::Less;
            // On equal degree the monomial with the smaller exponent at the
            // last variable where they differ is the larger one.
            for (int i = a.nvars() - 1; i >= 0; --i) {
                if (a[i] != b[i]) return a[i] < b[i] ? Cmp::Greater : Cmp::Less;
            }
            return Cmp::Equal;
        }
        }
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::Greater; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::Less; }
    bool geq(const Monomial& a, const Monomial& b) const { return compare(a, b) != Cmp::Less; }

    std::string name() const {
        switch (kind_) {
        case OrderKind::Lex: return "lex";
        case OrderKind::DegLex: return "deglex";
        default: return "degrevlex";
        }
    }

    static MonomialOrder parse(const std::string& s) {
        if (s == "degrevlex") return MonomialOrder(OrderKind::DegRevLex);
        if (s == "lex") return MonomialOrder(OrderKind::Lex);
        if (s == "deglex") return MonomialOrder(OrderKind::DegLex);
        throw InputError("unknown monomial order: " + s);
    }

private:
    static Cmp lex(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.nvars(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? Cmp::Greater : Cmp::Less;
        return Cmp::Equal;
    }

    OrderKind kind_;
};

/// All monomials of degree d in n variables, strictly descending in the
/// given order. Size binomial(n+d-1, d).
std::vector<Monomial> monomials_of_degree(int n, int d, const MonomialOrder& order);

/// dim_k R_d = binomial(n+d-1, d), and 0 in negative degrees.
inline long long dim_rd(int n, int d) {
    if (d < 0) return 0;
    long long r = 1;
    for (int i = 1; i < n; ++i) r = r * (d + i) / i;
    return r;
}

} // namespace apolar

#endif
