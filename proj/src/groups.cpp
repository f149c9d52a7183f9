#include "orbitsum/groups.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitsum {

bool GroupData::admissible(const LatticePoint& lambda) const {
    if (static_cast<int>(lambda.size()) != rank) return false;
    if (kind == Kind::SU2) return lambda[0] >= 1;
    return true;
}

double su2_character(long long lambda, double t) {
    // sin(lambda t)/sin(t) = U_{lambda-1}(cos t), stable at the removable points.
    const double x = std::cos(t);
    double u_prev = 1.0, u = 2.0 * x;
    if (lambda == 1) return 1.0;
    if (lambda == 2) return u;
    for (long long n = 2; n < lambda; ++n) {
        const double next = 2.0 * x * u - u_prev;
        u_prev = u;
        u = next;
    }
    return u;
}

std::complex<double> character(const GroupData& g, const IrrepLabel& lam, const std::vector<double>& x) {
    if (g.kind == GroupData::Kind::Torus) {
        double phase = 0.0;
        for (int i = 0; i < g.rank; ++i) phase += static_cast<double>(lam.weight.at(i)) * x.at(i);
        return std::exp(std::complex<double>(0.0, phase));
    }
    return su2_character(lam.su2_label(), x.at(0));
}

long long irrep_dimension(const GroupData& g, const IrrepLabel& lam) {
    return g.kind == GroupData::Kind::Torus ? 1 : lam.su2_label();
}

Distribution orbit_measure(const GroupData& g, const IrrepLabel& lam) {
    if (!g.admissible(lam.weight)) throw std::invalid_argument("label is not admissible");
    if (g.kind == GroupData::Kind::Torus) {
        std::vector<Rational> point;
        for (long long c : lam.weight) point.emplace_back(static_cast<long>(c));
        return Distribution::delta(point);
    }
    const long long lambda = lam.su2_label();
    // Mass pinned by <beta_lambda, 1> = dim V_lambda = lambda.
    return Distribution::sphere(rat(lambda), static_cast<double>(lambda));
}

std::vector<long long> clebsch_gordan(long long l1, long long l2) {
    if (l1 < 1 || l2 < 1) throw std::invalid_argument("SU(2) labels start at 1");
    std::vector<long long> out;
    for (long long j = std::llabs(l1 - l2) + 1; j <= l1 + l2 - 1; j += 2) out.push_back(j);
    return out;
}

int branching_c(long long lambda, long long mu) {
    if (lambda < 1) throw std::invalid_argument("SU(2) labels start at 1");
    if (std::llabs(mu) > lambda - 1) return 0;
    return ((mu - (lambda - 1)) % 2 == 0) ? 1 : 0;
}

std::vector<long long> su2_weights(long long lambda) {
    std::vector<long long> out;
    for (long long m = -(lambda - 1); m <= lambda - 1; m += 2) out.push_back(m);
    return out;
}

Distribution rg_map(long long lambda) {
    if (lambda < 1) throw std::invalid_argument("SU(2) labels start at 1");
    return Distribution::delta1d(rat(lambda)) + Distribution::delta1d(rat(-lambda), 0, -1.0);
}

Distribution b_measure(SubgroupPair pair, int target_rank) {
    if (pair == SubgroupPair::SU2_T) return Distribution::uniform1d(rat(-1), rat(1), 0.5);
    std::vector<Rational> zero(target_rank, Rational(0));
    return Distribution::delta(zero);
}

double kirillov_residual(long long lambda, const std::vector<double>& t_grid) {
    const Distribution beta = orbit_measure(GroupData::su2(), IrrepLabel::su2(lambda));
    double worst = 0.0;
    for (double t : t_grid) {
        const double jhalf = t == 0.0 ? 1.0 : std::sin(t) / t;
        const std::complex<double> lhs = su2_character(lambda, t) * jhalf;
        const std::complex<double> rhs = fourier_pair_axis(beta, t);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace orbitsum
