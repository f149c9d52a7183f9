#ifndef ORBITSUM_QUADRATURE_HPP
#define ORBITSUM_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace orbitsum {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by
// Golub-Welsch and cached.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

struct QuadratureBudget {
    long long nodes_used = 0;
    long long node_cap = 1 << 14;  // per 1-D integral

    void charge(long long n) {
        nodes_used += n;
        if (nodes_used > node_cap)
            throw QuadratureError("quadrature did not converge within the node cap");
    }
};

// Adaptive Gauss-Legendre on a finite interval, absolute tolerance `tol`.
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                               double tol = 1e-12);

}  // namespace orbitsum

#endif
