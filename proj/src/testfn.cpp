#include "orbitsum/testfn.hpp"

#include <cmath>
#include <stdexcept>

#include "orbitsum/quadrature.hpp"

namespace orbitsum {

namespace {

RPoly quadratic_from_form(const Eigen::VectorXd& center, const Eigen::MatrixXd& form) {
    const int dim = static_cast<int>(center.size());
    RPoly q(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const double a = form(i, j);
            if (a == 0.0) continue;
            std::vector<int> mono(dim, 0);
            mono[i] += 1;
            mono[j] += 1;
            q.add_term(mono, a);
            std::vector<int> mi(dim, 0);
            mi[i] = 1;
            q.add_term(mi, -a * center(j));
            std::vector<int> mj(dim, 0);
            mj[j] = 1;
            q.add_term(mj, -a * center(i));
            q.add_term(std::vector<int>(dim, 0), a * center(i) * center(j));
        }
    return q;
}

// Split a real quadratic q into (B, l, c): q = x^T B x + l.x + c.
void quadratic_parts(const RPoly& q, Eigen::MatrixXd& B, Eigen::VectorXd& l, double& c) {
    const int dim = q.nvars();
    B = Eigen::MatrixXd::Zero(dim, dim);
    l = Eigen::VectorXd::Zero(dim);
    c = 0.0;
    for (const auto& [m, coeff] : q.terms()) {
        int total = 0, first = -1, second = -1;
        for (int i = 0; i < dim; ++i) {
            total += m[i];
            for (int e = 0; e < m[i]; ++e) (first < 0 ? first : second) = i;
        }
        if (total == 0)
            c = coeff;
        else if (total == 1)
            l(first) = coeff;
        else if (total == 2) {
            if (second < 0) second = first;
            B(first, second) += coeff / (first == second ? 1.0 : 2.0);
            if (first != second) B(second, first) += coeff / 2.0;
        } else
            throw std::invalid_argument("exponent polynomial has degree > 2");
    }
}

double amplitude_coeff_sum(const CPoly& p) {
    double s = 0.0;
    for (const auto& [m, c] : p.terms()) s += std::abs(c);
    return s;
}

}  // namespace

TestFunction TestFunction::gaussian(CPoly amplitude, const Eigen::VectorXd& center, const Eigen::MatrixXd& form) {
    TestFunction f(static_cast<int>(center.size()));
    if (amplitude.nvars() != f.dim_) throw std::invalid_argument("amplitude arity mismatch");
    f.add_term({std::move(amplitude), quadratic_from_form(center, form)});
    return f;
}

TestFunction TestFunction::gaussian1d(CPoly amplitude, double center, double a) {
    Eigen::VectorXd c(1);
    c << center;
    Eigen::MatrixXd A(1, 1);
    A << a;
    return gaussian(std::move(amplitude), c, A);
}

TestFunction TestFunction::constant_one(int dim) {
    TestFunction f(dim);
    f.add_term({CPoly::constant(dim, 1.0), RPoly(dim)});
    return f;
}

void TestFunction::add_term(Term t) {
    if (t.amplitude.nvars() != dim_ || t.exponent.nvars() != dim_)
        throw std::invalid_argument("test-function term arity mismatch");
    if (t.amplitude.is_zero()) return;
    terms_.push_back(std::move(t));
}

std::complex<double> TestFunction::operator()(const std::vector<double>& point) const {
    if (static_cast<int>(point.size()) != dim_) throw std::invalid_argument("evaluation arity mismatch");
    std::complex<double> acc = 0.0;
    for (const auto& t : terms_) acc += t.amplitude.eval(point) * std::exp(-t.exponent.eval(point));
    return acc;
}

TestFunction TestFunction::derivative(int axis) const {
    TestFunction out(dim_);
    for (const auto& t : terms_) {
        CPoly dq = t.exponent.derivative(axis).map_coeffs([](double c) { return std::complex<double>(c); });
        CPoly amp = t.amplitude.derivative(axis) - t.amplitude * dq;
        if (!amp.is_zero()) out.terms_.push_back({std::move(amp), t.exponent});
    }
    return out;
}

TestFunction TestFunction::times(const CPoly& p) const {
    TestFunction out(dim_);
    for (const auto& t : terms_) {
        CPoly amp = t.amplitude * p;
        if (!amp.is_zero()) out.terms_.push_back({std::move(amp), t.exponent});
    }
    return out;
}

TestFunction operator+(const TestFunction& a, const TestFunction& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("test-function dim mismatch");
    TestFunction out = a;
    for (const auto& t : b.terms_) out.terms_.push_back(t);
    return out;
}

TestFunction operator*(std::complex<double> s, const TestFunction& f) {
    TestFunction out(f.dim_);
    for (const auto& t : f.terms_) {
        CPoly amp = CPoly::constant(f.dim_, s) * t.amplitude;
        if (!amp.is_zero()) out.terms_.push_back({std::move(amp), t.exponent});
    }
    return out;
}

TestFunction TestFunction::apply_poly_derivative(const CPoly& symbol) const {
    TestFunction total(dim_);
    for (const auto& [mono, coeff] : symbol.terms()) {
        TestFunction part = *this;
        for (int axis = 0; axis < dim_; ++axis)
            for (int e = 0; e < mono[axis]; ++e) part = part.derivative(axis);
        part = coeff * part;
        total = total + part;
    }
    return total;
}

TestFunction TestFunction::pullback_affine(const Eigen::MatrixXd& map, const Eigen::VectorXd& shift) const {
    if (map.rows() != dim_ || shift.size() != dim_) throw std::invalid_argument("pullback arity mismatch");
    const int in_dim = static_cast<int>(map.cols());
    TestFunction out(in_dim);
    for (const auto& t : terms_) {
        std::vector<std::vector<std::complex<double>>> cmap(dim_);
        std::vector<std::vector<double>> rmap(dim_);
        std::vector<std::complex<double>> cshift(dim_);
        std::vector<double> rshift(dim_);
        for (int i = 0; i < dim_; ++i) {
            cmap[i].resize(in_dim);
            rmap[i].resize(in_dim);
            for (int j = 0; j < in_dim; ++j) {
                cmap[i][j] = map(i, j);
                rmap[i][j] = map(i, j);
            }
            cshift[i] = shift(i);
            rshift[i] = shift(i);
        }
        out.terms_.push_back({t.amplitude.compose_affine(cmap, cshift), t.exponent.compose_affine(rmap, rshift)});
    }
    return out;
}

double TestFunction::decay_radius(double eps) const {
    if (eps <= 0) throw std::invalid_argument("decay_radius needs eps > 0");
    double radius = 1.0;
    for (const auto& t : terms_) {
        Eigen::MatrixXd B;
        Eigen::VectorXd l;
        double c0;
        quadratic_parts(t.exponent, B, l, c0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (B + B.transpose()));
        const double lmin = es.eigenvalues().minCoeff();
        if (lmin <= 0) throw std::domain_error("test-function term has no quadratic decay");
        const double cs = amplitude_coeff_sum(t.amplitude);
        const int deg = t.amplitude.total_degree();
        double r = 1.0;
        for (int it = 0; it < 200; ++it) {
            const double q_low = lmin * r * r - l.norm() * r - std::abs(c0);
            const double bound = cs * std::pow(1.0 + r, deg) * std::exp(-q_low);
            if (bound <= eps) break;
            r *= 1.25;
            if (r > 1e6) throw std::domain_error("decay radius exceeds 1e6");
        }
        radius = std::max(radius, r);
    }
    return radius;
}

TestFunction::AxisWindow TestFunction::axis_window(int axis, double eps) const {
    double w = 1.0;
    for (const auto& t : terms_) {
        Eigen::MatrixXd B;
        Eigen::VectorXd l;
        double c0;
        quadratic_parts(t.exponent, B, l, c0);
        const double baa = B(axis, axis);
        if (baa <= 0) throw std::domain_error("no decay along the requested axis");
        double cross = std::abs(l(axis));
        for (int j = 0; j < dim_; ++j)
            if (j != axis) cross += 2.0 * std::abs(B(axis, j)) * 100.0;
        const double u_star = cross / (2.0 * baa);
        const double need = std::log(std::max(amplitude_coeff_sum(t.amplitude), 1.0) / eps) + 40.0;
        w = std::max(w, u_star + std::sqrt(std::max(need, 1.0) / baa) + 10.0);
    }
    return {-w, w};
}

AxialTestFunction AxialTestFunction::gaussian(CPoly amplitude_ut, double axis_center, double axis_decay,
                                              double transverse_decay) {
    if (amplitude_ut.nvars() != 2) throw std::invalid_argument("axial amplitude must have 2 variables (u, t)");
    if (transverse_decay < 0) throw std::invalid_argument("transverse decay must be >= 0");
    RPoly e(2);
    if (axis_decay != 0.0) {
        e.add_term({2, 0}, axis_decay);
        e.add_term({1, 0}, -2.0 * axis_decay * axis_center);
        e.add_term({0, 0}, axis_decay * axis_center * axis_center);
    }
    if (transverse_decay != 0.0) e.add_term({0, 1}, transverse_decay);
    AxialTestFunction f;
    f.add_term({std::move(amplitude_ut), std::move(e)});
    return f;
}

AxialTestFunction AxialTestFunction::from_axis_function(const TestFunction& line_fn) {
    if (line_fn.dim() != 1) throw std::invalid_argument("axis pullback expects a 1-D function");
    AxialTestFunction out;
    for (const auto& t : line_fn.terms()) {
        // Re-index the single variable as u; t stays unused.
        CPoly amp(2);
        for (const auto& [m, c] : t.amplitude.terms()) amp.add_term({m[0], 0}, c);
        RPoly e(2);
        for (const auto& [m, c] : t.exponent.terms()) e.add_term({m[0], 0}, c);
        out.add_term({std::move(amp), std::move(e)});
    }
    return out;
}

AxialTestFunction AxialTestFunction::constant_one() {
    AxialTestFunction f;
    f.add_term({CPoly::constant(2, 1.0), RPoly(2)});
    return f;
}

void AxialTestFunction::add_term(Term t) {
    if (t.amplitude.nvars() != 2 || t.exponent.nvars() != 2)
        throw std::invalid_argument("axial term arity mismatch");
    for (const auto& [m, c] : t.exponent.terms())
        if (m[1] > 1 || (m[1] == 1 && m[0] > 0))
            throw std::invalid_argument("axial exponent must be linear in the transverse variable");
    if (t.amplitude.is_zero()) return;
    terms_.push_back(std::move(t));
}

std::complex<double> AxialTestFunction::value(double u, double t) const {
    std::complex<double> acc = 0.0;
    const std::vector<double> p = {u, t};
    for (const auto& term : terms_) acc += term.amplitude.eval(p) * std::exp(-term.exponent.eval(p));
    return acc;
}

TestFunction AxialTestFunction::restrict_to_sphere(double rho) const {
    // Substitute t = rho^2 - u^2.
    TestFunction out(1);
    for (const auto& term : terms_) {
        CPoly tc(2);
        tc.add_term({0, 0}, std::complex<double>(rho * rho));
        tc.add_term({2, 0}, std::complex<double>(-1.0));
        RPoly tr(2);
        tr.add_term({0, 0}, rho * rho);
        tr.add_term({2, 0}, -1.0);
        CPoly amp2 = term.amplitude.substitute(1, tc);
        RPoly exp2 = term.exponent.substitute(1, tr);
        CPoly amp1(1);
        for (const auto& [m, c] : amp2.terms()) amp1.add_term({m[0]}, c);
        RPoly exp1(1);
        for (const auto& [m, c] : exp2.terms()) exp1.add_term({m[0]}, c);
        TestFunction::Term t1{std::move(amp1), std::move(exp1)};
        out.add_term(std::move(t1));
    }
    return out;
}

double AxialTestFunction::decay_radius(double eps) const {
    // Bound on |x| = sqrt(u^2 + t): decay must come from the u^2 or t parts.
    double radius = 1.0;
    for (const auto& term : terms_) {
        double a = 0.0, b = 0.0, lin = 0.0, c0 = 0.0;
        for (const auto& [m, c] : term.exponent.terms()) {
            if (m[0] == 2)
                a = c;
            else if (m[0] == 1)
                lin = std::abs(c);
            else if (m[1] == 1)
                b = c;
            else
                c0 = std::abs(c);
        }
        const double lmin = std::min(a, b);
        if (lmin <= 0) throw std::domain_error("axial term has no joint decay");
        const double cs = amplitude_coeff_sum(term.amplitude);
        const int deg = term.amplitude.total_degree();
        double r = 1.0;
        for (int it = 0; it < 200; ++it) {
            // On |x| = r either u^2 >= r^2/2 or t >= r^2/2.
            const double q_low = lmin * 0.5 * r * r - lin * r - c0;
            const double bound = cs * std::pow(1.0 + r * r, deg) * std::exp(-q_low);
            if (bound <= eps) break;
            r *= 1.25;
            if (r > 1e6) throw std::domain_error("decay radius exceeds 1e6");
        }
        radius = std::max(radius, r);
    }
    return radius;
}

}  // namespace orbitsum
