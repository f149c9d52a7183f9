#ifndef ORBITSUM_RATIONAL_HPP
#define ORBITSUM_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbitsum {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as every entry point canonicalizes.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("unparseable rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("rational is not an integer");
    if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer too large for long");
    return q.get_num().get_si();
}

inline Rational pow_rational(const Rational& base, long e) {
    Rational out = 1;
    Rational b = base;
    long n = e;
    if (n < 0) {
        if (base == 0) throw std::domain_error("0^negative");
        b = 1 / base;
        n = -n;
    }
    for (; n > 0; n >>= 1) {
        if (n & 1) out *= b;
        b *= b;
    }
    return out;
}

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(c);
}

inline Rational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

// Complex number with exact rational real/imaginary parts.
struct ComplexRational {
    Rational re = 0;
    Rational im = 0;

    ComplexRational() = default;
    ComplexRational(Rational r) : re(std::move(r)) {}
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    bool is_zero() const { return re == 0 && im == 0; }
};

inline std::complex<double> to_complex(const ComplexRational& z) {
    return {to_double(z.re), to_double(z.im)};
}

}  // namespace orbitsum

#endif
