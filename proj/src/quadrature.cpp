#include "orbitsum/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>

namespace orbitsum {

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Golub-Welsch: eigen-decomposition of the Jacobi matrix.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        const double b = i / std::sqrt(4.0 * i * i - 1.0);
        jacobi(i, i - 1) = b;
        jacobi(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = solver.eigenvalues()(i);
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = 2.0 * v0 * v0;
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

namespace {

std::complex<double> panel(const std::function<std::complex<double>(double)>& f, double a, double b, int n,
                           QuadratureBudget& budget) {
    budget.charge(n);
    const GaussRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::complex<double> acc = 0.0;
    for (int i = 0; i < n; ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * acc;
}

std::complex<double> refine(const std::function<std::complex<double>(double)>& f, double a, double b, double tol,
                            QuadratureBudget& budget, int depth) {
    const std::complex<double> coarse = panel(f, a, b, 16, budget);
    const std::complex<double> fine = panel(f, a, b, 32, budget);
    if (std::abs(fine - coarse) <= tol || depth > 40) {
        if (depth > 40) throw QuadratureError("quadrature recursion depth exceeded");
        return fine;
    }
    const double mid = 0.5 * (a + b);
    return refine(f, a, mid, tol / 2, budget, depth + 1) + refine(f, mid, b, tol / 2, budget, depth + 1);
}

}  // namespace

std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                               double tol) {
    if (!(a < b)) return 0.0;
    QuadratureBudget budget;
    return refine(f, a, b, tol, budget, 0);
}

}  // namespace orbitsum
