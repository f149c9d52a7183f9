#ifndef ORBITSUM_GROUPS_HPP
#define ORBITSUM_GROUPS_HPP

#include <complex>
#include <vector>

#include "orbitsum/dist.hpp"
#include "orbitsum/quasipoly.hpp"

namespace orbitsum {

// Torus(rank r) or SU(2). SU(2) conventions: t = R.H with <alpha, H> = 2 and
// rho = alpha/2, so labels live in rho-units and dim V_lambda = lambda.
struct GroupData {
    enum class Kind { Torus, SU2 } kind = Kind::Torus;
    int rank = 1;  // torus rank; 1 for the SU(2) maximal torus

    static GroupData torus(int rank) { return {Kind::Torus, rank}; }
    static GroupData su2() { return {Kind::SU2, 1}; }

    bool admissible(const LatticePoint& lambda) const;
};

struct IrrepLabel {
    GroupData::Kind kind = GroupData::Kind::Torus;
    LatticePoint weight;  // torus: lattice point; SU2: {lambda} with lambda >= 1

    static IrrepLabel torus(LatticePoint mu) { return {GroupData::Kind::Torus, std::move(mu)}; }
    static IrrepLabel su2(long long lambda) { return {GroupData::Kind::SU2, {lambda}}; }
    long long su2_label() const { return weight.at(0); }
};

// chi_lambda at exp(X). Torus: X = coordinates; SU2: X = t*H, value
// sin(lambda t)/sin(t) evaluated stably through Chebyshev recursion.
std::complex<double> character(const GroupData& g, const IrrepLabel& lam, const std::vector<double>& x);
double su2_character(long long lambda, double t);

// dim V_lambda.
long long irrep_dimension(const GroupData& g, const IrrepLabel& lam);

// Kirillov orbit measure beta_lambda: torus delta or SU(2) sphere of radius
// lambda and total mass lambda.
Distribution orbit_measure(const GroupData& g, const IrrepLabel& lam);

// SU(2) tensor decomposition: labels |l1-l2|+1, |l1-l2|+3, ..., l1+l2-1.
std::vector<long long> clebsch_gordan(long long l1, long long l2);

// Multiplicity of the T-weight mu in V_lambda (SU(2) > T): 1 iff |mu| <= lambda-1
// and mu = lambda-1 (mod 2).
int branching_c(long long lambda, long long mu);

std::vector<long long> su2_weights(long long lambda);

// R_g(beta_lambda) = delta_lambda - delta_{-lambda} on t*.
Distribution rg_map(long long lambda);

enum class SubgroupPair { SU2_T, TorusSubtorus };

// B measure of the pair: Fourier transform of j^{1/2}_{g/h}. SU(2) > T gives
// (1/2) 1_{[-1,1]}; abelian pairs give delta_0.
Distribution b_measure(SubgroupPair pair, int target_rank = 1);

// max_t |chi_lambda(e^{tH}) sin(t)/t - F(beta_lambda)(tH)| over the grid.
double kirillov_residual(long long lambda, const std::vector<double>& t_grid);

}  // namespace orbitsum

#endif
