#ifndef ORBITSUM_TESTFN_HPP
#define ORBITSUM_TESTFN_HPP

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "orbitsum/poly.hpp"
#include "orbitsum/rational.hpp"

namespace orbitsum {

using CPoly = Poly<std::complex<double>>;
using RPoly = Poly<double>;

// Schwartz test function on R^dim: finite sum of  p(xi) * exp(-q(xi))  with
// polynomial p and real quadratic q whose quadratic part is positive
// semi-definite. Closed under differentiation, affine pullback and
// multiplication by polynomials.
class TestFunction {
  public:
    struct Term {
        CPoly amplitude;
        RPoly exponent;  // degree <= 2, real
    };

    explicit TestFunction(int dim = 1) : dim_(dim) {}

    // p(xi) * exp(-(xi - c)^T A (xi - c))
    static TestFunction gaussian(CPoly amplitude, const Eigen::VectorXd& center, const Eigen::MatrixXd& form);
    // Convenience: 1-D  p(x) e^{-a (x-c)^2}.
    static TestFunction gaussian1d(CPoly amplitude, double center = 0.0, double a = 1.0);
    static TestFunction constant_one(int dim);

    int dim() const { return dim_; }
    const std::vector<Term>& terms() const { return terms_; }
    void add_term(Term t);

    std::complex<double> operator()(const std::vector<double>& point) const;
    std::complex<double> operator()(double x) const { return (*this)(std::vector<double>{x}); }

    TestFunction derivative(int axis) const;
    TestFunction times(const CPoly& p) const;
    friend TestFunction operator+(const TestFunction& a, const TestFunction& b);
    friend TestFunction operator*(std::complex<double> s, const TestFunction& f);

    // Apply sum_alpha c_alpha d^alpha (per the symbol's monomials, signs included).
    TestFunction apply_poly_derivative(const CPoly& symbol) const;

    // phi(map * x + shift) on a possibly different number of variables.
    TestFunction pullback_affine(const Eigen::MatrixXd& map, const Eigen::VectorXd& shift) const;

    // |phi| <= eps outside the ball of the returned radius (conservative).
    // Throws if some term has no quadratic decay at all.
    double decay_radius(double eps) const;

    // Finite integration window along `axis`, holding the decay budget of each
    // term; used to clamp half-infinite supports before quadrature.
    struct AxisWindow {
        double lo, hi;
    };
    AxisWindow axis_window(int axis, double eps) const;

  private:
    int dim_;
    std::vector<Term> terms_;
};

// Test function on su(2)* ~ R^3, invariant under rotations about the
// distinguished axis: value = q(u, t) exp(-e(u, t)) in the axis coordinate u
// and squared transverse radius t >= 0, with e linear in t.
class AxialTestFunction {
  public:
    struct Term {
        CPoly amplitude;  // 2 vars: (u, t)
        RPoly exponent;   // 2 vars, degree <= 2 in u, <= 1 in t
    };

    AxialTestFunction() = default;

    static AxialTestFunction gaussian(CPoly amplitude_ut, double axis_center, double axis_decay,
                                      double transverse_decay);
    // phi(x) = f(x3): pullback of a 1-D test function along the axis projection.
    static AxialTestFunction from_axis_function(const TestFunction& line_fn);
    static AxialTestFunction constant_one();

    const std::vector<Term>& terms() const { return terms_; }
    void add_term(Term t);

    std::complex<double> value(double u, double t) const;

    // Restriction to the sphere of radius rho as a 1-D function of the axis
    // coordinate (t = rho^2 - u^2).
    TestFunction restrict_to_sphere(double rho) const;

    double decay_radius(double eps) const;

  private:
    std::vector<Term> terms_;
};

}  // namespace orbitsum

#endif
