#include "orbitsum/series.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>

namespace orbitsum {

Rational bernoulli_number(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli_number: n < 0");
    static std::vector<Rational> cache = {Rational(1)};
    // sum_{j<=n} C(n+1,j) B_j = 0 for n >= 1
    while (static_cast<int>(cache.size()) <= n) {
        const long m = static_cast<long>(cache.size());
        Rational acc = 0;
        for (long j = 0; j < m; ++j) acc += binomial(m + 1, j) * cache[j];
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[n];
}

Rational bernoulli_polynomial(int n, const Rational& x) {
    Rational acc = 0;
    for (int j = 0; j <= n; ++j)
        acc += binomial(n, j) * bernoulli_number(j) * pow_rational(x, n - j);
    return acc;
}

PowerSeries::PowerSeries(int nvars, int order) : coeffs_(nvars), order_(order) {
    if (order < 0 || order > kMaxSeriesOrder) throw std::invalid_argument("series order out of range");
}

PowerSeries::PowerSeries(Poly<Rational> coeffs, int order)
    : coeffs_(coeffs.truncate_total_degree(order)), order_(order) {
    if (order < 0 || order > kMaxSeriesOrder) throw std::invalid_argument("series order out of range");
}

PowerSeries PowerSeries::one(int nvars, int order) {
    return PowerSeries(Poly<Rational>::constant(nvars, 1), order);
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int ord = std::min(a.order_, b.order_);
    return PowerSeries(a.coeffs_ + b.coeffs_, ord);
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int ord = std::min(a.order_, b.order_);
    return PowerSeries(a.coeffs_ - b.coeffs_, ord);
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int ord = std::min(a.order_, b.order_);
    return PowerSeries(a.coeffs_ * b.coeffs_, ord);
}

PowerSeries PowerSeries::reciprocal() const {
    if (constant_term() == 0) throw std::domain_error("reciprocal of series with zero constant term");
    if (constant_term() != 1) throw std::domain_error("reciprocal requires constant term 1");
    // b_n = -(a * b)_{degree n} restricted to known lower-order parts.
    Poly<Rational> b = Poly<Rational>::constant(nvars(), 1);
    for (int n = 1; n <= order_; ++n) {
        Poly<Rational> prod = (coeffs_ * b).homogeneous_part(n);
        b = b - prod;
        b = b.truncate_total_degree(order_);
    }
    return PowerSeries(b, order_);
}

PowerSeries PowerSeries::square_root() const {
    if (constant_term() != 1) throw std::domain_error("square_root requires constant term 1");
    // Newton iteration on series: y <- (y + a/y)/2, doubling accuracy each step.
    PowerSeries y = PowerSeries::one(nvars(), order_);
    const Rational half = rat(1, 2);
    for (int accurate = 1; accurate <= order_; accurate *= 2) {
        PowerSeries quotient = *this * y.reciprocal();
        Poly<Rational> next = (y.coeffs() + quotient.coeffs()).map_coeffs([&](const Rational& c) { return c * half; });
        y = PowerSeries(next, order_);
    }
    return y;
}

PowerSeries PowerSeries::substitute_linear_form(const std::vector<Rational>& form, int nvars) const {
    if (this->nvars() != 1) throw std::invalid_argument("substitute_linear_form expects a 1-variable series");
    if (static_cast<int>(form.size()) != nvars) throw std::invalid_argument("linear form arity mismatch");
    std::vector<std::vector<Rational>> map(1);
    map[0] = form;
    std::vector<Rational> shift(1, Rational(0));
    Poly<Rational> composed = coeffs_.compose_affine(map, shift);
    return PowerSeries(composed, order_);
}

PowerSeries sin_x_over_x_series(int order) {
    // sin(x)/x = sum_m (-1)^m x^{2m} / (2m+1)!
    Poly<Rational> p(1);
    for (int m = 0; 2 * m <= order; ++m) {
        Rational c = pow_rational(rat(-1), m) / factorial(2 * m + 1);
        p.add_term({2 * m}, c);
    }
    return PowerSeries(p, order);
}

PowerSeries germ_taylor(const GermSpec& germ, int order) {
    if (order < 0 || order > kMaxSeriesOrder) throw std::invalid_argument("germ order out of range");
    if (germ.name == "one" || germ.name == "jhalf_torus") {
        return PowerSeries::one(1, order);
    }
    if (germ.name == "jhalf_su2" || germ.name == "jhalf_quotient_su2_t") {
        return sin_x_over_x_series(order);
    }
    if (germ.name == "x_over_sin") {
        // (w x/2)/sin(w x/2): substitute the scaled variable into x/sin(x).
        PowerSeries base = sin_x_over_x_series(order).reciprocal();
        const Rational scale = germ.weight / 2;
        if (scale == 1) return base;
        std::vector<Rational> form = {scale};
        return base.substitute_linear_form(form, 1);
    }
    throw std::invalid_argument("unknown germ: " + germ.name);
}

DiffOpSeries DiffOpSeries::identity(int nvars) {
    DiffOpSeries op(nvars);
    op.set_symbol(0, Poly<ComplexRational>::constant(nvars, ComplexRational(Rational(1))));
    return op;
}

Poly<ComplexRational> DiffOpSeries::symbol(int n) const {
    auto it = symbols_.find(n);
    return it == symbols_.end() ? Poly<ComplexRational>(nvars_) : it->second;
}

void DiffOpSeries::set_symbol(int n, Poly<ComplexRational> p) {
    if (p.nvars() != nvars_) throw std::invalid_argument("symbol arity mismatch");
    if (p.is_zero())
        symbols_.erase(n);
    else
        symbols_[n] = std::move(p);
}

DiffOpSeries operator*(const DiffOpSeries& a, const DiffOpSeries& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("operator arity mismatch");
    DiffOpSeries out(a.nvars_, std::min(a.valid_order_, b.valid_order_));
    for (const auto& [na, pa] : a.symbols_)
        for (const auto& [nb, pb] : b.symbols_) {
            Poly<ComplexRational> prod = pa * pb;
            if (out.has_order(na + nb)) prod = prod + out.symbol(na + nb);
            out.set_symbol(na + nb, std::move(prod));
        }
    return out;
}

DiffOpSeries to_diff_op(const PowerSeries& s) {
    DiffOpSeries op(s.nvars(), s.order());
    for (int n = 0; n <= s.order(); ++n) {
        Poly<Rational> part = s.coeffs().homogeneous_part(n);
        if (part.is_zero()) continue;
        op.set_symbol(n, part.map_coeffs([](const Rational& c) { return ComplexRational(c); }));
    }
    return op;
}

RootOfUnity::RootOfUnity(long num, long den) {
    if (den == 0) throw std::invalid_argument("root of unity with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    const long g = std::gcd(num, den);
    if (num == 0) {
        p = 0;
        q = 1;
    } else {
        p = num / g;
        q = den / g;
    }
}

RootOfUnity RootOfUnity::pow(long e) const {
    const long m = ((p * e) % q + q) % q;
    return RootOfUnity(m, q);
}

std::complex<double> RootOfUnity::value() const {
    // Exact values for the 4th-root lattice, trig otherwise.
    if (q == 1) return {1.0, 0.0};
    if (q == 2) return {-1.0, 0.0};
    if (q == 4) return p == 1 ? std::complex<double>(0.0, 1.0) : std::complex<double>(0.0, -1.0);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
    return {std::cos(angle), std::sin(angle)};
}

std::complex<double> RootOfUnity::power_value(long n) const {
    return pow(n).value();
}

namespace {

// P_m in S_m(z) = P_m(z)/(1-z)^{m+1}, with P_{m+1} = z (P_m'(z)(1-z) + (m+1)P_m).
const Poly<Rational>& lerch_numerator(int m) {
    static std::vector<Poly<Rational>> cache;
    if (cache.empty()) cache.push_back(Poly<Rational>::constant(1, 1));
    while (static_cast<int>(cache.size()) <= m) {
        const int mm = static_cast<int>(cache.size()) - 1;
        const Poly<Rational>& pm = cache[mm];
        Poly<Rational> z = Poly<Rational>::variable(1, 0);
        Poly<Rational> one_minus_z = Poly<Rational>::constant(1, 1) - z;
        Poly<Rational> next = z * (pm.derivative(0) * one_minus_z + Rational(mm + 1) * pm);
        cache.push_back(std::move(next));
    }
    return cache[m];
}

}  // namespace

std::complex<double> lerch_s(const RootOfUnity& zeta, int m) {
    if (zeta.is_one()) throw std::domain_error("lerch_s: zeta = 1 (use the Bernoulli path)");
    if (m < 0) throw std::invalid_argument("lerch_s: m < 0");
    const std::complex<double> z = zeta.value();
    const Poly<Rational>& num = lerch_numerator(m);
    std::complex<double> numerator = 0.0;
    for (const auto& [mono, c] : num.terms()) {
        std::complex<double> zp = 1.0;
        for (int e = 0; e < mono[0]; ++e) zp *= z;
        numerator += to_double(c) * zp;
    }
    std::complex<double> denom = 1.0;
    const std::complex<double> base = 1.0 - z;
    for (int e = 0; e <= m; ++e) denom *= base;
    return numerator / denom;
}

std::complex<double> shifted_power_sum(const RootOfUnity& zeta, int m, const Rational& s) {
    std::complex<double> acc = 0.0;
    for (int i = 0; i <= m; ++i)
        acc += to_double(binomial(m, i) * pow_rational(s, m - i)) * lerch_s(zeta, i);
    return acc;
}

}  // namespace orbitsum
