#include "orbitsum/asymptotics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orbitsum {

LaurentDistSeries build_expansion(const Model& m, int N) {
    if (N < 0 || N > 16) throw std::invalid_argument("expansion order out of range");
    if (!m.dh_base) throw std::invalid_argument("model has no DH base distribution");
    if (m.group.kind == GroupData::Kind::SU2) {
        if (N != 0) throw std::invalid_argument("SU(2) models expose the leading order only");
        LaurentDistSeries out(m.d, 1, 0, 3);
        out.at(0, 0) = m.dh_base();
        return out;
    }
    if (!m.a_hat_germ) throw std::invalid_argument("model has no A-hat germ");
    // j^{1/2} is identically 1 on a torus, so the operator is the A-hat germ alone.
    const DiffOpSeries op = to_diff_op(m.a_hat_germ(std::max(N, 0)));
    LaurentDistSeries base(m.d, 1, N, m.group.rank);
    base.at(0, 0) = m.dh_base();
    return apply_diff_op(op, base, N);
}

LaurentDistSeries em_halfline(const Rational& a, long long w, int N) {
    if (w < 2 || w % 2 != 0) throw std::invalid_argument("em_halfline needs even w >= 2");
    LaurentDistSeries out(1, 1, N, 1);
    out.at(0, 0) = Distribution::density1d(a, std::nullopt, CPoly::constant(1, 1.0 / static_cast<double>(w)));
    for (int n = 1; n <= N; ++n) {
        // Pairs as -w^{n-1} B_n(1/2)/n! phi^{(n-1)}(a).
        const Rational coeff = -pow_rational(rat(w), n - 1) * bernoulli_polynomial(n, rat(1, 2)) / factorial(n);
        if (coeff == 0) continue;
        const double signed_weight = (n - 1) % 2 == 0 ? to_double(coeff) : -to_double(coeff);
        out.at(n, 0) = Distribution::delta1d(a, n - 1, signed_weight);
    }
    return out;
}

LaurentDistSeries em_fulllattice(int N) {
    if (N < 0 || N > 16) throw std::invalid_argument("em_fulllattice order out of range");
    LaurentDistSeries out(1, 1, N, 1);
    out.at(0, 0) = Distribution::density1d(rat(0), std::nullopt, CPoly::constant(1, 1.0));
    if (N >= 1) out.at(1, 0) = Distribution::delta1d(rat(0), 0, 0.5);
    for (int n = 2; n <= N; n += 2) {
        // Order 2n' coefficient pairs as -b_{2n'}/(2n')! phi^{(2n'-1)}(0).
        const Rational b = bernoulli_number(n) / factorial(n);
        if (b == 0) continue;
        // Odd derivative order: delta weight +b gives pairing -b phi^{(n-1)}(0).
        out.at(n, 0) = Distribution::delta1d(rat(0), n - 1, to_double(b));
    }
    return out;
}

double fitted_slope(const std::vector<long long>& ladder, const std::vector<double>& errs) {
    std::vector<double> xs, ys;
    for (size_t i = 0; i < ladder.size(); ++i) {
        if (errs[i] <= 0.0) continue;
        xs.push_back(std::log(static_cast<double>(ladder[i])));
        ys.push_back(std::log(errs[i]));
    }
    if (xs.size() < 3) return 0.0;
    Eigen::MatrixXd A(xs.size(), 2);
    Eigen::VectorXd y(ys.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        A(i, 0) = 1.0;
        A(i, 1) = xs[i];
        y(i) = ys[i];
    }
    const Eigen::Vector2d fit = A.colPivHouseholderQr().solve(y);
    return -fit(1);  // decay order, positive when the error shrinks
}

std::string OrderFitReport::csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "k,exact,truncated,abs_err\n";
    for (size_t i = 0; i < ladder.size(); ++i) {
        os << ladder[i] << ",";
        auto emit = [&](std::complex<double> v) {
            if (std::abs(v.imag()) <= 1e-13 * std::max(1.0, std::abs(v)))
                os << v.real();
            else
                os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
        };
        emit(exact[i]);
        os << ",";
        emit(truncated[i]);
        os << "," << abs_err[i] << "\n";
    }
    return os.str();
}

std::string OrderFitReport::summary() const {
    std::ostringstream os;
    os.precision(6);
    if (converged_exactly)
        os << "converged exactly";
    else
        os << "slope " << slope << " target " << target;
    os << " " << (pass ? "PASS" : "FAIL");
    return os.str();
}

OrderFitReport exact_vs_series(const std::function<std::complex<double>(long long)>& exact,
                               const LaurentDistSeries& series,
                               const std::function<std::complex<double>(int, long long)>& truncated_value,
                               int trunc_power, const std::vector<long long>& ladder) {
    if (ladder.size() < 3) throw std::invalid_argument("ladder needs at least 3 entries");
    for (size_t i = 1; i < ladder.size(); ++i)
        if (ladder[i] <= ladder[i - 1]) throw std::invalid_argument("ladder must be strictly increasing");

    const int n_included = series.leading_exponent() + trunc_power;
    if (n_included < 0) throw std::invalid_argument("truncation keeps no terms");
    const int N = std::min(n_included, series.order());

    OrderFitReport rep;
    rep.ladder = ladder;
    double scale = 1.0;
    for (long long k : ladder) {
        const std::complex<double> e = exact(k);
        const std::complex<double> t = truncated_value(N, k);
        rep.exact.push_back(e);
        rep.truncated.push_back(t);
        rep.abs_err.push_back(std::abs(e - t));
        scale = std::max(scale, std::abs(e));
    }

    // Target: first omitted structurally nonzero order, minus fit noise margin.
    const int next = series.first_nonzero_order_above(N, 1e-14);
    if (next >= 0)
        rep.target = static_cast<double>(next - series.leading_exponent()) - 0.5;
    else
        rep.target = static_cast<double>(trunc_power) + 1.5;  // everything stored vanishes beyond N

    bool tiny = true;
    for (double e : rep.abs_err) tiny = tiny && e <= 1e-12 * scale;
    if (tiny) {
        rep.converged_exactly = true;
        rep.pass = true;
        return rep;
    }
    rep.slope = fitted_slope(ladder, rep.abs_err);
    rep.pass = rep.slope >= rep.target;
    return rep;
}

OrderFitReport exact_vs_expansion(const Model& m, const TestFunction& phi, int trunc_power,
                                  const std::vector<long long>& ladder, double tol) {
    // Build past the truncation so the first omitted nonzero order is visible.
    const LaurentDistSeries series = build_expansion(m, std::max(0, m.d + trunc_power + 4));
    double radius = 0.0;
    auto rep = exact_vs_series(
        [&](long long k) {
            auto r = theta_pair(m, k, phi, tol);
            radius = std::max(radius, r.truncation_radius);
            return r.value;
        },
        series, [&](int N, long long k) { return series_pair(series, phi, N, k, tol); }, trunc_power, ladder);
    rep.truncation_radius = radius;
    return rep;
}

OrderFitReport exact_vs_expansion(const Model& m, const AxialTestFunction& phi, int trunc_power,
                                  const std::vector<long long>& ladder, double tol) {
    const LaurentDistSeries series = build_expansion(m, m.group.kind == GroupData::Kind::SU2
                                                            ? 0
                                                            : std::max(0, m.d + trunc_power));
    auto rep = exact_vs_series([&](long long k) { return theta_pair(m, k, phi, tol).value; }, series,
                               [&](int N, long long k) { return series_pair(series, phi, N, k, tol); },
                               trunc_power, ladder);
    return rep;
}

TwistedResult twisted_sum(const Model& m, const RootOfUnity& zeta, long long k, const TestFunction& phi,
                          double tol) {
    if (m.group.kind != GroupData::Kind::Torus || m.group.rank != 1)
        throw std::invalid_argument("twisted sums are implemented for rank-1 torus models");
    const double radius = certified_radius(m, k, phi, tol);
    std::complex<double> acc = 0.0;
    const double kd = static_cast<double>(k);
    m.for_each(k, radius, [&](const LatticePoint& lambda, long long mult) {
        acc += static_cast<double>(mult) * zeta.power_value(lambda[0]) * phi(static_cast<double>(lambda[0]) / kd);
    });
    return {acc, radius};
}

LaurentDistSeries twisted_ray_expansion(const RootOfUnity& zeta, long long a, long long offset, long long step,
                                        int N) {
    if (step < 1) throw std::invalid_argument("ray step must be positive");
    const RootOfUnity z = zeta.pow(step);
    if (z.is_one())
        throw std::invalid_argument("zeta^step = 1: use the Bernoulli path (em_halfline)");
    const long long period = zeta.order();
    LaurentDistSeries out(0, period, N, 1);
    const Rational shift = rat(offset, step);
    const Rational boundary = rat(a);
    for (int mord = 0; mord <= N; ++mord) {
        const std::complex<double> tail =
            to_double(pow_rational(rat(step), mord) / factorial(mord)) * shifted_power_sum(z, mord, shift);
        const double sign = mord % 2 == 0 ? 1.0 : -1.0;
        for (long long res = 0; res < period; ++res) {
            const std::complex<double> prefactor = zeta.power_value(res * a + offset);
            const std::complex<double> weight = sign * prefactor * tail;
            if (std::abs(weight) == 0.0) continue;
            out.at(mord, res) = Distribution::delta1d(boundary, mord, weight);
        }
    }
    return out;
}

LaurentDistSeries twisted_halfline_expansion(const RootOfUnity& zeta, long long a, long long w, int N) {
    if (w < 2 || w % 2 != 0) throw std::invalid_argument("twisted_halfline_expansion needs even w >= 2");
    return twisted_ray_expansion(zeta, a, w / 2, w, N);
}

}  // namespace orbitsum
