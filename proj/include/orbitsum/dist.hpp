#ifndef ORBITSUM_DIST_HPP
#define ORBITSUM_DIST_HPP

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbitsum/poly.hpp"
#include "orbitsum/rational.hpp"
#include "orbitsum/series.hpp"
#include "orbitsum/testfn.hpp"

namespace orbitsum {

// One-dimensional building blocks of a tensor-product term.
struct AtomFactor {
    Rational point;
    int deriv = 0;  // distributional derivative order along this axis
};

struct DensityFactor {
    std::optional<Rational> lo, hi;  // nullopt = infinite on that side
    CPoly density;                   // univariate polynomial
};

using Factor = std::variant<AtomFactor, DensityFactor>;

// weight * (factor_1 x ... x factor_dim)
struct TensorTerm {
    std::complex<double> weight = 1.0;
    std::vector<Factor> factors;
};

// Uniform measure of the given total mass on the centered sphere in R^3
// (distinguished axis = third coordinate of su(2)*).
struct SphereTerm {
    Rational radius;
    std::complex<double> mass = 1.0;
};

// Radial superposition  int_lo^hi w(rho) S_rho drho  of unit-mass spheres.
struct RadialTerm {
    Rational lo, hi;
    CPoly weight_poly;  // univariate in rho
};

// Finite sum of delta-derivative atoms, polyhedral polynomial densities
// (tensor products of intervals) and centered sphere measures.
class Distribution {
  public:
    explicit Distribution(int dim = 1) : dim_(dim) {}

    static Distribution zero(int dim) { return Distribution(dim); }
    static Distribution delta(const std::vector<Rational>& point, std::vector<int> derivs = {},
                              std::complex<double> weight = 1.0);
    static Distribution delta1d(const Rational& point, int deriv = 0, std::complex<double> weight = 1.0);
    static Distribution density1d(std::optional<Rational> lo, std::optional<Rational> hi, CPoly density,
                                  std::complex<double> weight = 1.0);
    static Distribution uniform1d(const Rational& lo, const Rational& hi, std::complex<double> height);
    static Distribution lebesgue(int dim);
    static Distribution quadrant_density(const std::vector<Rational>& corner, CPoly per_axis_constant,
                                         std::complex<double> weight = 1.0);
    static Distribution sphere(const Rational& radius, std::complex<double> mass);
    static Distribution radial(const Rational& lo, const Rational& hi, CPoly weight_poly);

    int dim() const { return dim_; }
    const std::vector<TensorTerm>& tensor_terms() const { return tensor_; }
    const std::vector<SphereTerm>& sphere_terms() const { return spheres_; }
    const std::vector<RadialTerm>& radial_terms() const { return radials_; }

    void add_term(TensorTerm t);
    void add_term(SphereTerm t);
    void add_term(RadialTerm t);

    bool is_negligible(double eps = 0.0) const;

    friend Distribution operator+(const Distribution& a, const Distribution& b);
    friend Distribution operator*(std::complex<double> s, const Distribution& d);

    std::string to_json_string() const;

  private:
    int dim_;
    std::vector<TensorTerm> tensor_;
    std::vector<SphereTerm> spheres_;
    std::vector<RadialTerm> radials_;
};

// <D, phi>; deltas contribute w (-1)^{|alpha|} (d^alpha phi)(x).
std::complex<double> pair(const Distribution& d, const TestFunction& phi, double tol = 1e-12);
std::complex<double> pair(const Distribution& d, const AxialTestFunction& phi, double tol = 1e-12);

// rescaling(k): <rescale(D), phi> = <D, phi(./k)>. Deltas move to point/k (the
// derivative order picks up k^{-|alpha|}), densities carry Jacobian weight,
// spheres keep their mass.
Distribution rescale_k(const Distribution& d, long long k);

// Keep the listed coordinates, integrating the others out (dim <= 2).
Distribution pushforward_coords(const Distribution& d, const std::vector<int>& axes);
// Projection of su(2)* to the distinguished axis.
Distribution pushforward_axis(const Distribution& d);

// Term-by-term convolution; `b` must be compactly supported with atoms and
// bounded densities only.
Distribution convolve(const Distribution& d, const Distribution& b);

// Structural distributional derivative along one axis (densities emit
// boundary atoms at finite endpoints).
Distribution derivative(const Distribution& d, int axis);

// p(i d) D for a polynomial symbol.
Distribution apply_symbol(const Distribution& d, const Poly<ComplexRational>& symbol);

// F(D)(X) = <D(xi), e^{i<xi,X>}>, exact per term; requires compact support.
std::complex<double> fourier_pair(const Distribution& d, const std::vector<double>& freq);
// dim-3 variant at X = t * H (distinguished axis).
std::complex<double> fourier_pair_axis(const Distribution& d, double t);

// Truncated Laurent series  k^{n0} sum_{n>=0} k^{-n} theta_n(k)  whose
// coefficients may depend on k through k mod period.
class LaurentDistSeries {
  public:
    LaurentDistSeries(int n0, long long period, int order, int dim);

    int leading_exponent() const { return n0_; }
    long long period() const { return period_; }
    int order() const { return order_; }
    int dim() const { return dim_; }

    Distribution& at(int n, long long residue);
    const Distribution& coeff(int n, long long k) const;

    // Highest series order with a non-negligible coefficient above `from`,
    // or -1 if none.
    int first_nonzero_order_above(int from, double eps = 0.0) const;

  private:
    int n0_;
    long long period_;
    int order_;
    int dim_;
    std::vector<std::vector<Distribution>> coeffs_;  // [n][k mod period]
};

// k^{n0} sum_{n<=N} k^{-n} <theta_n(k), phi>.
std::complex<double> series_pair(const LaurentDistSeries& s, const TestFunction& phi, int N, long long k,
                                 double tol = 1e-12);
std::complex<double> series_pair(const LaurentDistSeries& s, const AxialTestFunction& phi, int N, long long k,
                                 double tol = 1e-12);

// Cauchy product  s_n = sum_{l+m=n} p_l(i d) theta_m  through order N.
LaurentDistSeries apply_diff_op(const DiffOpSeries& op, const LaurentDistSeries& s, int N);

}  // namespace orbitsum

#endif
