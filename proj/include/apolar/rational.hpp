#ifndef APOLAR_RATIONAL_HPP
#define APOLAR_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace apolar {

// Exact scalar of the coefficient field. GMP keeps values in lowest terms
// with positive denominator as long as every entry point canonicalizes,
// which the helpers below do.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parse base-10 numerator/denominator strings.
inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    Rational q{Integer(num), Integer(den)};
    q.canonicalize();
    return q;
}

inline std::string num_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_string(const Rational& q) { return q.get_den().get_str(); }

inline Integer factorial(unsigned long k) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

/// binomial(a, b) with the usual boundary conventions: 0 when b < 0 or b > a,
/// 1 when b == 0.
inline long long binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return static_cast<long long>(r.get_si());
}

} // namespace apolar

#endif
