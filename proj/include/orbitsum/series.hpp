#ifndef ORBITSUM_SERIES_HPP
#define ORBITSUM_SERIES_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitsum/poly.hpp"
#include "orbitsum/rational.hpp"

namespace orbitsum {

// Bernoulli numbers in the t/(e^t - 1) convention, so B_1 = -1/2.
Rational bernoulli_number(int n);

// B_n(x) = sum_j C(n,j) B_j x^{n-j}.
Rational bernoulli_polynomial(int n, const Rational& x);

constexpr int kMaxSeriesOrder = 64;

// Truncated multivariate power series with exact rational coefficients.
// Arithmetic truncates to the smaller order of the two operands.
class PowerSeries {
  public:
    PowerSeries() : coeffs_(1), order_(0) {}
    PowerSeries(int nvars, int order);
    PowerSeries(Poly<Rational> coeffs, int order);

    static PowerSeries one(int nvars, int order);

    int nvars() const { return coeffs_.nvars(); }
    int order() const { return order_; }
    const Poly<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(const std::vector<int>& monomial) const { return coeffs_.coeff(monomial); }
    Rational constant_term() const { return coeffs_.coeff(std::vector<int>(nvars(), 0)); }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

    // Requires constant term 1 for both. Computed degree-by-degree.
    PowerSeries reciprocal() const;
    PowerSeries square_root() const;

    // Substitute the single variable by the linear form sum_i form[i]*x_i.
    PowerSeries substitute_linear_form(const std::vector<Rational>& form, int nvars) const;

  private:
    Poly<Rational> coeffs_;
    int order_;
};

// Analytic germ catalog. All entries have constant term 1 and exact Taylor
// coefficients; the even ones only carry even-degree terms.
struct GermSpec {
    std::string name;              // one | x_over_sin | jhalf_su2 | jhalf_torus | jhalf_quotient_su2_t
    Rational weight = Rational(2); // only used by x_over_sin
};

PowerSeries germ_taylor(const GermSpec& germ, int order);

// Series of sin(x)/x to the given order (single variable).
PowerSeries sin_x_over_x_series(int order);

// Constant-coefficient differential-operator series  sum_n k^{-n} p_n(i d/dxi).
// Symbols act on distributions through <p(d)A, phi> = <A, p(-d)phi>.
class DiffOpSeries {
  public:
    explicit DiffOpSeries(int nvars = 1, int valid_order = kMaxSeriesOrder)
        : nvars_(nvars), valid_order_(valid_order) {}

    static DiffOpSeries identity(int nvars);

    int nvars() const { return nvars_; }
    // Orders above this were lost to truncation and must not be requested.
    int valid_order() const { return valid_order_; }
    int max_order() const { return symbols_.empty() ? 0 : symbols_.rbegin()->first; }
    bool has_order(int n) const { return symbols_.count(n) > 0; }
    Poly<ComplexRational> symbol(int n) const;
    void set_symbol(int n, Poly<ComplexRational> p);

    const std::map<int, Poly<ComplexRational>>& symbols() const { return symbols_; }

    friend DiffOpSeries operator*(const DiffOpSeries& a, const DiffOpSeries& b);

  private:
    int nvars_;
    int valid_order_;
    std::map<int, Poly<ComplexRational>> symbols_;
};

// Degree-n part of the series becomes the order-n symbol.
DiffOpSeries to_diff_op(const PowerSeries& s);

// Primitive root-of-unity rotation by p/q of a turn.
struct RootOfUnity {
    long p = 0;
    long q = 1;

    RootOfUnity() = default;
    RootOfUnity(long num, long den);

    bool is_one() const { return p == 0; }
    RootOfUnity pow(long e) const;
    std::complex<double> value() const;
    long order() const { return q; }

    // zeta^n for integer n, as a complex number.
    std::complex<double> power_value(long n) const;
};

// Abel-summed power sum S_m(zeta) = sum_{j>=0} j^m zeta^j = (zeta d/dzeta)^m 1/(1-zeta).
// Exact integer-polynomial recursion evaluated at the root; zeta = 1 is rejected.
std::complex<double> lerch_s(const RootOfUnity& zeta, int m);

// Shifted variant sum_{j>=0} (j+s)^m zeta^j, expanded binomially through lerch_s.
std::complex<double> shifted_power_sum(const RootOfUnity& zeta, int m, const Rational& s);

}  // namespace orbitsum

#endif
