#include "orbitsum/functoriality.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orbitsum {

namespace {

void require_restriction_data(const Model& m) {
    if (m.group.kind != GroupData::Kind::SU2 || !m.has_t_restriction)
        throw std::invalid_argument("model has no T-restriction data");
}

}  // namespace

long long restricted_multiplicity(const Model& m, long long mu, long long k) {
    require_restriction_data(m);
    const long long bound = m.su2_label_bound(k);
    long long total = 0;
    for (long long lambda = 1; lambda <= bound; ++lambda) {
        const long long mg = m.multiplicity({lambda}, k);
        if (mg != 0) total += mg * branching_c(lambda, mu);
    }
    return total;
}

long long direct_h_multiplicity(const Model& m, long long mu, long long k) {
    require_restriction_data(m);
    return m.direct_t_multiplicity(mu, k);
}

std::string RestrictionReport::csv() const {
    std::ostringstream os;
    os << "mu,k,direct,restricted\n";
    for (const auto& row : failures)
        os << row.mu << "," << row.k << "," << row.direct << "," << row.restricted << "\n";
    return os.str();
}

RestrictionReport verify_restriction(const Model& m, long long k_max, long long mu_bound) {
    require_restriction_data(m);
    RestrictionReport rep;
    rep.model = m.name;
    rep.k_max = k_max;
    rep.mu_bound = mu_bound;
    for (long long k = 1; k <= k_max; ++k) {
        const long long window = std::min(mu_bound, m.su2_label_bound(k) + 1);
        for (long long mu = -window; mu <= window; ++mu) {
            const long long direct = direct_h_multiplicity(m, mu, k);
            const long long restricted = restricted_multiplicity(m, mu, k);
            ++rep.checked;
            if (direct != restricted) rep.failures.push_back({mu, k, direct, restricted});
        }
    }
    return rep;
}

MysteryResult mystery_check(const Model& m, long long k) {
    if (m.group.kind != GroupData::Kind::SU2) throw std::invalid_argument("mystery_check expects an SU(2) model");
    if (!m.compact_support) throw std::invalid_argument("mystery_check needs a compact model");
    MysteryResult out;
    const AxialTestFunction one = AxialTestFunction::constant_one();
    m.for_each(k, 0.0, [&](const LatticePoint& lambda, long long mult) {
        const long long l = lambda[0];
        out.dim_total += mult * irrep_dimension(m.group, IrrepLabel::su2(l));
        // vol(G lambda) = <beta_lambda, 1>, evaluated through the pairing.
        const std::complex<double> vol = pair(orbit_measure(m.group, IrrepLabel::su2(l)), one);
        const long long vol_int = std::llround(vol.real());
        if (std::abs(vol - std::complex<double>(static_cast<double>(vol_int))) > 1e-9)
            throw std::runtime_error("orbit volume failed to evaluate to an integer");
        out.vol_sum += mult * vol_int;
    });
    out.equal = out.dim_total == out.vol_sum;
    return out;
}

double pushforward_orbit_check(long long lambda, const std::vector<double>& t_grid) {
    const Distribution beta = orbit_measure(GroupData::su2(), IrrepLabel::su2(lambda));
    const Distribution pushed = pushforward_axis(beta);
    const Distribution b = b_measure(SubgroupPair::SU2_T);
    double worst = 0.0;
    for (double t : t_grid) {
        const std::complex<double> lhs = fourier_pair(pushed, {t});
        std::complex<double> weights = 0.0;
        for (long long mu : su2_weights(lambda))
            weights += std::exp(std::complex<double>(0.0, static_cast<double>(mu) * t));
        const std::complex<double> rhs = fourier_pair(b, {t}) * weights;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double finite_k_functoriality_residual(const Model& m, long long k, const TestFunction& phi, double tol) {
    require_restriction_data(m);
    if (phi.dim() != 1) throw std::invalid_argument("the restricted pairing lives on t* = R");

    // Left side: <r_* Theta^G_k, phi> = sum_lambda m(lambda,k) <r_*(rescale beta_lambda), phi>.
    std::complex<double> lhs = 0.0;
    m.for_each(k, 0.0, [&](const LatticePoint& lambda, long long mult) {
        const Distribution beta = orbit_measure(m.group, IrrepLabel::su2(lambda[0]));
        lhs += static_cast<double>(mult) * pair(pushforward_axis(rescale_k(beta, k)), phi, tol);
    });

    // Right side: B^k * Theta^T_k with the model's direct T-multiplicities.
    const Distribution bk = rescale_k(b_measure(SubgroupPair::SU2_T), k);
    const long long mu_bound = m.su2_label_bound(k);
    Distribution theta_t(1);
    for (long long mu = -mu_bound; mu <= mu_bound; ++mu) {
        const long long mt = m.direct_t_multiplicity(mu, k);
        if (mt != 0) theta_t = theta_t + Distribution::delta1d(rat(mu, k), 0, static_cast<double>(mt));
    }
    const std::complex<double> rhs = pair(convolve(theta_t, bk), phi, tol);
    return std::abs(lhs - rhs);
}

DescentReport twisted_descent_check(const PiecewiseQP& d, const RootOfUnity& zeta, const TestFunction& phi,
                                    const std::vector<long long>& ladder, int N,
                                    const LaurentDistSeries* reference, double tol) {
    if (d.rank() != 1) throw std::invalid_argument("descent checks run on rank-1 lattices");
    DescentReport rep;
    rep.ladder = ladder;
    const double radius = phi.decay_radius(tol * 1e-3);
    double scale = 1.0;
    for (long long k : ladder) {
        const long long hi = static_cast<long long>(std::floor(radius * static_cast<double>(k)));
        std::complex<double> sum = 0.0;
        for (long long nu = -hi; nu <= hi; ++nu) {
            const Rational v = d.eval({nu}, k);
            if (v == 0) continue;
            sum += to_double(v) * zeta.power_value(nu) * phi(static_cast<double>(nu) / static_cast<double>(k));
        }
        std::complex<double> ref = 0.0;
        if (reference) ref = series_pair(*reference, phi, std::min(N, reference->order()), k, tol);
        rep.abs_err.push_back(std::abs(sum - ref));
        scale = std::max(scale, std::abs(sum));
    }
    bool tiny = true;
    for (double e : rep.abs_err) tiny = tiny && e <= 1e-12 * scale;
    if (tiny) {
        rep.pass = true;
        return rep;
    }
    rep.slope = fitted_slope(ladder, rep.abs_err);
    rep.pass = rep.slope >= static_cast<double>(N) + 0.5;
    return rep;
}

}  // namespace orbitsum
