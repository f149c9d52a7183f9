#ifndef ORBITSUM_FUNCTORIALITY_HPP
#define ORBITSUM_FUNCTORIALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbitsum/asymptotics.hpp"
#include "orbitsum/models.hpp"

namespace orbitsum {

// m'_T(mu,k) = sum_lambda m_G(lambda,k) c(lambda,mu), finite by the moment image.
long long restricted_multiplicity(const Model& m, long long mu, long long k);

// Direct T-multiplicity from the model's own weight oracle.
long long direct_h_multiplicity(const Model& m, long long mu, long long k);

struct RestrictionReport {
    std::string model;
    long long k_max = 0;
    long long mu_bound = 0;
    struct Row {
        long long mu, k, direct, restricted;
    };
    std::vector<Row> failures;
    long long checked = 0;
    bool pass() const { return failures.empty(); }

    std::string csv() const;
};

RestrictionReport verify_restriction(const Model& m, long long k_max, long long mu_bound);

struct MysteryResult {
    long long dim_total = 0;  // sum m(lambda,k) dim V_lambda
    long long vol_sum = 0;    // sum vol(G lambda) m(lambda,k), vol = <beta_lambda, 1>
    bool equal = false;
};

MysteryResult mystery_check(const Model& m, long long k);

// Fourier-side residual of r_*(beta_lambda) = B * sum_mu c(lambda,mu) delta_mu.
double pushforward_orbit_check(long long lambda, const std::vector<double>& t_grid);

// Finite-k distributional functoriality on an SU(2) model:
// max_phi-free residual |<r_* Theta^G_k, phi> - <B^k * Theta^T_k, phi>|.
double finite_k_functoriality_residual(const Model& m, long long k, const TestFunction& phi, double tol = 1e-12);

struct DescentReport {
    std::vector<long long> ladder;
    std::vector<double> abs_err;
    double slope = 0.0;
    bool pass = false;
};

// Checks that the zeta-twisted sums of d match `reference` (or vanish when
// reference is null) with decay slope >= N + 0.5 on the ladder.
DescentReport twisted_descent_check(const PiecewiseQP& d, const RootOfUnity& zeta, const TestFunction& phi,
                                    const std::vector<long long>& ladder, int N,
                                    const LaurentDistSeries* reference = nullptr, double tol = 1e-12);

}  // namespace orbitsum

#endif
