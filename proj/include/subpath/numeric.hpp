#pragma once

// Arbitrary-precision counting types and the few numeric helpers the
// formula evaluators share. Counts are exact integers (GMP), probabilities
// and expectations are exact rationals; no floating point anywhere.

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "subpath/errors.hpp"

namespace subpath {

using BigCount = mpz_class; // non-negative by convention, asserted at subtraction sites
using Rational = mpq_class; // kept canonical: reduced, denominator > 0

// Combinatorial binomial: 0 whenever k > n or n < 0 (never the signed
// polynomial extension).
inline BigCount binomial(const BigCount& n, unsigned long k) {
    if (n < 0 || n < (signed long)k) return 0;
    BigCount r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline BigCount binomial(long long n, unsigned long k) {
    return binomial(BigCount((long)n), k);
}

inline BigCount factorial(unsigned long n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigCount pow2(unsigned long k) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

inline BigCount pow10(unsigned long k) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

// Exact halving with a loud failure if the value is odd.
inline BigCount half_exact(const BigCount& v, const char* what) {
    SUBPATH_CHECK(v >= 0 && mpz_even_p(v.get_mpz_t()), what);
    return v / 2;
}

// Parses "N" or "N/D" into a canonical rational. D must be positive.
inline Rational parse_rational(const std::string& text) {
    auto is_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); i++)
            if (!std::isdigit((unsigned char)s[i])) return false;
        return true;
    };
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_int(num) || !is_int(den) || den[0] == '-')
        throw input_error("bad rational '" + text + "', expected NUM or NUM/DEN");
    mpz_class num_val(num), den_val(den);
    if (den_val == 0)
        throw input_error("bad rational '" + text + "': zero denominator");
    Rational q(num_val, den_val);
    q.canonicalize();
    return q;
}

namespace detail {

inline int digit_count(const BigCount& v) {
    // GMP may overestimate by one for base 10; correct by comparison.
    std::size_t d = mpz_sizeinbase(v.get_mpz_t(), 10);
    if (d > 1 && v >= 0 && v < pow10((unsigned long)d - 1)) d--;
    return (int)d;
}

} // namespace detail

// Renders |q| rounded to `sig` significant digits as a plain decimal string
// (round half up, trailing zeros kept). Exact integer arithmetic throughout,
// so the output is reproducible bit for bit.
inline std::string decimal_string(const Rational& q, int sig = 12) {
    SUBPATH_CHECK(sig >= 1, "decimal_string needs sig >= 1");
    if (q == 0) return "0";
    std::string sign = q < 0 ? "-" : "";
    BigCount N = abs(q.get_num()), D = q.get_den();

    // Scale exponent s such that round(|q| * 10^s) carries sig digits.
    long s;
    BigCount ipart = N / D;
    if (ipart > 0) {
        s = sig - detail::digit_count(ipart);
    } else {
        long j = 1; // position of the first significant decimal
        BigCount scaled = N * 10;
        while (scaled < D) {
            scaled *= 10;
            j++;
        }
        s = j - 1 + sig;
    }

    auto round_div = [](const BigCount& a, const BigCount& b) {
        return BigCount((2 * a + b) / (2 * b));
    };
    BigCount t = s >= 0 ? round_div(N * pow10((unsigned long)s), D)
                        : round_div(N, D * pow10((unsigned long)-s));
    if (detail::digit_count(t) > sig) { // carry: 999.. rounded up to 1000..
        SUBPATH_CHECK(t % 10 == 0, "decimal_string carry");
        t /= 10;
        s--;
    }

    std::string digits = t.get_str();
    SUBPATH_CHECK((int)digits.size() == sig, "decimal_string width");
    if (s <= 0) return sign + digits + std::string((std::size_t)-s, '0');
    long point = (long)digits.size() - s; // digits before the decimal point
    if (point >= 1)
        return sign + digits.substr(0, (std::size_t)point) + "." +
               digits.substr((std::size_t)point);
    return sign + "0." + std::string((std::size_t)-point, '0') + digits;
}

// sqrt of a non-negative rational to `sig` significant digits. Computed via
// integer square roots at high enough scale that the floor error sits far
// below the rounding position.
inline std::string sqrt_decimal_string(const Rational& v, int sig = 12) {
    SUBPATH_CHECK(v >= 0, "sqrt of negative value");
    if (v == 0) return "0";
    BigCount R = v.get_num() * v.get_den(); // sqrt(v) = sqrt(R) / den
    BigCount limit = pow10((unsigned long)sig + 4);
    unsigned long k = 0;
    BigCount t;
    do {
        k += 8;
        BigCount scaled = R * pow10(2 * k);
        mpz_sqrt(t.get_mpz_t(), scaled.get_mpz_t());
    } while (t < limit);
    Rational approx(t, v.get_den() * pow10(k));
    approx.canonicalize();
    return decimal_string(approx, sig);
}

} // namespace subpath
