#ifndef ORBITSUM_MODELS_HPP
#define ORBITSUM_MODELS_HPP

#include <functional>
#include <optional>
#include <string>

#include "orbitsum/dist.hpp"
#include "orbitsum/groups.hpp"
#include "orbitsum/quasipoly.hpp"
#include "orbitsum/series.hpp"

namespace orbitsum {

// A concrete (M, L) example: exact multiplicities, support iteration, the
// Duistermaat-Heckman base distribution and the A-hat germ where available.
struct Model {
    std::string name;
    GroupData group;
    int d = 1;  // dim M / 2
    int r = 0;  // dim(G/T)/2

    std::function<long long(const LatticePoint&, long long)> multiplicity;
    // Calls f(lambda, m) for every support point with |lambda/k|_inf <= radius.
    std::function<void(long long, double, const std::function<void(const LatticePoint&, long long)>&)> for_each;
    bool compact_support = false;

    Polyhedron moment_image{1};
    // |m(lambda, k)| <= bound_c (1 + |lambda|)^bound_p, uniformly in k.
    double bound_c = 1.0;
    int bound_p = 0;

    std::function<PowerSeries(int)> a_hat_germ;  // torus models only
    std::function<Distribution()> dh_base;       // DH(1) without the k^d factor

    // SU(2) models: restriction data for H = T.
    bool has_t_restriction = false;
    std::function<long long(long long, long long)> direct_t_multiplicity;
    std::function<long long(long long)> su2_label_bound;  // largest lambda with m != 0 at k
};

Model t_star_s1();
Model complex_line(long long w, long long a);
Model complex_space(const std::vector<LatticePoint>& weights, const LatticePoint& a);
Model su2_orbit();
Model su2_flag_square();

// Rank-1 torus model defined by a serialized piecewise quasi-polynomial;
// no A-hat germ, so only sums (not expansions) are available.
Model custom_torus_model(const PiecewiseQP& pqp, std::string name);

// Additive perturbation of one multiplicity cell (defect injection).
Model with_defect(const Model& base, const LatticePoint& lambda, long long k, long long delta);

long long multiplicity(const Model& m, const LatticePoint& lambda, long long k);

struct ThetaResult {
    std::complex<double> value;
    double truncation_radius = 0.0;
};

// <Theta_k, phi> = sum_lambda m(lambda,k) <rescale_k(beta_lambda), phi>.
ThetaResult theta_pair(const Model& m, long long k, const TestFunction& phi, double tol = 1e-12);
ThetaResult theta_pair(const Model& m, long long k, const AxialTestFunction& phi, double tol = 1e-12);

// <DH(A-hat_n), phi> = <DH(1), g_n(-i d) phi>.
std::complex<double> dh_pair(const Model& m, int n, const TestFunction& phi, double tol = 1e-12);
std::complex<double> dh_pair(const Model& m, int n, const AxialTestFunction& phi, double tol = 1e-12);

// Truncation radius so that the tail of the atom sum is below tol * 1e-3.
double certified_radius(const Model& m, long long k, const TestFunction& phi, double tol);

}  // namespace orbitsum

#endif
