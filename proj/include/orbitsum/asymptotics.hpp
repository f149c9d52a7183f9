#ifndef ORBITSUM_ASYMPTOTICS_HPP
#define ORBITSUM_ASYMPTOTICS_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "orbitsum/dist.hpp"
#include "orbitsum/models.hpp"

namespace orbitsum {

// Semi-classical expansion of Theta_k: j^{1/2}(i d/k) applied to
// k^d sum_n k^{-n} DH(A-hat_n). Torus models take any N <= 16; SU(2) models
// expose the leading order only.
LaurentDistSeries build_expansion(const Model& m, int N);

// Bernoulli-form boundary series of sum_j phi(a + w(j+1/2)/k): leading
// (k/w) 1_{[a,inf)}, order-n delta term pairing as -w^{n-1} B_n(1/2)/n! phi^{(n-1)}(a).
LaurentDistSeries em_halfline(const Rational& a, long long w, int N);

// Euler-Maclaurin series of sum_{lambda in N} delta_{lambda/k}.
LaurentDistSeries em_fulllattice(int N);

struct OrderFitReport {
    std::vector<long long> ladder;
    std::vector<std::complex<double>> exact;
    std::vector<std::complex<double>> truncated;
    std::vector<double> abs_err;
    double slope = 0.0;
    double target = 0.0;
    bool converged_exactly = false;
    bool pass = false;
    double truncation_radius = 0.0;

    std::string csv() const;
    std::string summary() const;
};

// Least-squares slope of log|err| against log k.
double fitted_slope(const std::vector<long long>& ladder, const std::vector<double>& errs);

// Compares exact pairings against the truncated series. `trunc_power` T keeps
// every term k^{n0-n} with n0-n >= -T; the pass target is
// (first omitted nonzero decay) - 0.5 unless overridden.
OrderFitReport exact_vs_series(const std::function<std::complex<double>(long long)>& exact,
                               const LaurentDistSeries& series,
                               const std::function<std::complex<double>(int, long long)>& truncated_value,
                               int trunc_power, const std::vector<long long>& ladder);

OrderFitReport exact_vs_expansion(const Model& m, const TestFunction& phi, int trunc_power,
                                  const std::vector<long long>& ladder, double tol = 1e-12);
OrderFitReport exact_vs_expansion(const Model& m, const AxialTestFunction& phi, int trunc_power,
                                  const std::vector<long long>& ladder, double tol = 1e-12);

// sum_lambda m(lambda,k) zeta^lambda phi(lambda/k) for rank-1 torus models.
struct TwistedResult {
    std::complex<double> value;
    double truncation_radius = 0.0;
};
TwistedResult twisted_sum(const Model& m, const RootOfUnity& zeta, long long k, const TestFunction& phi,
                          double tol = 1e-12);

// Boundary series of sum_j zeta^{ka + w/2 + jw} phi((ka + w/2 + jw)/k) for
// zeta^w != 1: order-m coefficient pairs as
// zeta^{ka+w/2} (w^m/m!) T_m(zeta^w) phi^{(m)}(a), T_m the half-shifted
// Abel power sum. Periodic in k with the order of zeta.
LaurentDistSeries twisted_halfline_expansion(const RootOfUnity& zeta, long long a, long long w, int N);

// Generic ray variant: atoms at (a k + offset + j step)/k, j >= 0, twisted by
// zeta per lattice unit.
LaurentDistSeries twisted_ray_expansion(const RootOfUnity& zeta, long long a, long long offset, long long step,
                                        int N);

}  // namespace orbitsum

#endif
