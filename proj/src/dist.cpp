#include "orbitsum/dist.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

#include "orbitsum/quadrature.hpp"

namespace orbitsum {

namespace {

constexpr double kTailFactor = 1e-3;  // tail cut at tolerance * this

CPoly shift_poly(const CPoly& p, const Rational& by) {
    // p(x - by)
    std::vector<std::vector<std::complex<double>>> map = {{1.0}};
    std::vector<std::complex<double>> shift = {std::complex<double>(-to_double(by))};
    return p.compose_affine(map, shift);
}

std::complex<double> poly_eval1(const CPoly& p, double x) { return p.eval(std::vector<double>{x}); }

CPoly antiderivative1(const CPoly& p) {
    CPoly out(1);
    for (const auto& [m, c] : p.terms()) out.add_term({m[0] + 1}, c / static_cast<double>(m[0] + 1));
    return out;
}

std::complex<double> definite_integral1(const CPoly& p, const Rational& lo, const Rational& hi) {
    const CPoly anti = antiderivative1(p);
    return poly_eval1(anti, to_double(hi)) - poly_eval1(anti, to_double(lo));
}

// int_lo^hi f(x) e^{i w x} dx via repeated integration by parts (exact).
std::complex<double> poly_exp_integral(const CPoly& f, const Rational& lo, const Rational& hi, double w) {
    if (w == 0.0) return definite_integral1(f, lo, hi);
    const std::complex<double> iw(0.0, w);
    // antiderivative F(x) = e^{iwx} sum_j (-1)^j f^(j)(x) / (iw)^{j+1}
    auto F = [&](double x) {
        std::complex<double> acc = 0.0;
        CPoly g = f;
        std::complex<double> denom = iw;
        double sign = 1.0;
        while (!g.is_zero()) {
            acc += sign * poly_eval1(g, x) / denom;
            g = g.derivative(0);
            denom *= iw;
            sign = -sign;
        }
        return std::exp(std::complex<double>(0.0, w * x)) * acc;
    };
    return F(to_double(hi)) - F(to_double(lo));
}

}  // namespace

Distribution Distribution::delta(const std::vector<Rational>& point, std::vector<int> derivs,
                                 std::complex<double> weight) {
    const int dim = static_cast<int>(point.size());
    if (derivs.empty()) derivs.assign(dim, 0);
    if (static_cast<int>(derivs.size()) != dim) throw std::invalid_argument("delta derivative arity mismatch");
    Distribution d(dim);
    TensorTerm t;
    t.weight = weight;
    for (int i = 0; i < dim; ++i) t.factors.push_back(AtomFactor{point[i], derivs[i]});
    d.add_term(std::move(t));
    return d;
}

Distribution Distribution::delta1d(const Rational& point, int deriv, std::complex<double> weight) {
    return delta({point}, {deriv}, weight);
}

Distribution Distribution::density1d(std::optional<Rational> lo, std::optional<Rational> hi, CPoly density,
                                     std::complex<double> weight) {
    if (density.nvars() != 1) throw std::invalid_argument("density must be univariate");
    Distribution d(1);
    TensorTerm t;
    t.weight = weight;
    t.factors.push_back(DensityFactor{std::move(lo), std::move(hi), std::move(density)});
    d.add_term(std::move(t));
    return d;
}

Distribution Distribution::uniform1d(const Rational& lo, const Rational& hi, std::complex<double> height) {
    return density1d(lo, hi, CPoly::constant(1, 1.0), height);
}

Distribution Distribution::lebesgue(int dim) {
    Distribution d(dim);
    TensorTerm t;
    for (int i = 0; i < dim; ++i) t.factors.push_back(DensityFactor{std::nullopt, std::nullopt, CPoly::constant(1, 1.0)});
    d.add_term(std::move(t));
    return d;
}

Distribution Distribution::quadrant_density(const std::vector<Rational>& corner, CPoly per_axis_constant,
                                            std::complex<double> weight) {
    const int dim = static_cast<int>(corner.size());
    Distribution d(dim);
    TensorTerm t;
    t.weight = weight;
    for (int i = 0; i < dim; ++i) t.factors.push_back(DensityFactor{corner[i], std::nullopt, per_axis_constant});
    d.add_term(std::move(t));
    return d;
}

Distribution Distribution::sphere(const Rational& radius, std::complex<double> mass) {
    if (radius <= 0) throw std::invalid_argument("sphere radius must be positive");
    Distribution d(3);
    d.add_term(SphereTerm{radius, mass});
    return d;
}

Distribution Distribution::radial(const Rational& lo, const Rational& hi, CPoly weight_poly) {
    if (weight_poly.nvars() != 1) throw std::invalid_argument("radial weight must be univariate");
    Distribution d(3);
    d.add_term(RadialTerm{lo, hi, std::move(weight_poly)});
    return d;
}

void Distribution::add_term(TensorTerm t) {
    if (static_cast<int>(t.factors.size()) != dim_) throw std::invalid_argument("tensor term arity mismatch");
    if (t.weight == 0.0) return;
    tensor_.push_back(std::move(t));
}

void Distribution::add_term(SphereTerm t) {
    if (dim_ != 3) throw std::invalid_argument("sphere terms live in R^3");
    spheres_.push_back(std::move(t));
}

void Distribution::add_term(RadialTerm t) {
    if (dim_ != 3) throw std::invalid_argument("radial terms live in R^3");
    radials_.push_back(std::move(t));
}

bool Distribution::is_negligible(double eps) const {
    for (const auto& t : tensor_) {
        double amp = 1.0;
        for (const auto& f : t.factors)
            if (const auto* den = std::get_if<DensityFactor>(&f)) {
                double s = 0.0;
                for (const auto& [m, c] : den->density.terms()) s += std::abs(c);
                amp *= s;
            }
        if (std::abs(t.weight) * amp > eps) return false;
    }
    for (const auto& s : spheres_)
        if (std::abs(s.mass) > eps) return false;
    for (const auto& r : radials_) {
        double s = 0.0;
        for (const auto& [m, c] : r.weight_poly.terms()) s += std::abs(c);
        if (s > eps) return false;
    }
    return true;
}

Distribution operator+(const Distribution& a, const Distribution& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("distribution dim mismatch");
    Distribution out = a;
    for (const auto& t : b.tensor_) out.tensor_.push_back(t);
    for (const auto& t : b.spheres_) out.spheres_.push_back(t);
    for (const auto& t : b.radials_) out.radials_.push_back(t);
    return out;
}

Distribution operator*(std::complex<double> s, const Distribution& d) {
    Distribution out(d.dim_);
    if (s == 0.0) return out;
    for (auto t : d.tensor_) {
        t.weight *= s;
        out.tensor_.push_back(std::move(t));
    }
    for (auto t : d.spheres_) {
        t.mass *= s;
        out.spheres_.push_back(std::move(t));
    }
    for (auto t : d.radials_) {
        t.weight_poly = CPoly::constant(1, s) * t.weight_poly;
        out.radials_.push_back(std::move(t));
    }
    return out;
}

namespace {

std::complex<double> pair_tensor(const TensorTerm& term, int dim, const TestFunction& phi, double tol) {
    // Atoms first: differentiate, then pin the coordinate.
    TestFunction reduced = phi;
    double sign = 1.0;
    std::vector<int> density_axes;
    for (int axis = 0; axis < dim; ++axis) {
        if (const auto* atom = std::get_if<AtomFactor>(&term.factors[axis])) {
            for (int e = 0; e < atom->deriv; ++e) reduced = reduced.derivative(axis);
            if (atom->deriv % 2 == 1) sign = -sign;
            // Pin x_axis = point by substitution; the axis goes unused afterwards.
            TestFunction pinned(dim);
            const double x0 = to_double(atom->point);
            for (const auto& t : reduced.terms()) {
                CPoly amp = t.amplitude.substitute(axis, CPoly::constant(dim, x0));
                RPoly ex = t.exponent.substitute(axis, RPoly::constant(dim, x0));
                if (!amp.is_zero()) pinned.add_term({std::move(amp), std::move(ex)});
            }
            reduced = std::move(pinned);
        } else {
            density_axes.push_back(axis);
        }
    }
    if (reduced.terms().empty()) return 0.0;

    // Then integrate the density axes, innermost-first.
    std::vector<double> point(dim, 0.0);
    std::function<std::complex<double>(size_t)> level = [&](size_t idx) -> std::complex<double> {
        if (idx == density_axes.size()) return reduced(point);
        const int axis = density_axes[idx];
        const auto& den = std::get<DensityFactor>(term.factors[axis]);
        double lo, hi;
        if (den.lo && den.hi) {
            lo = to_double(*den.lo);
            hi = to_double(*den.hi);
        } else {
            const auto window = reduced.axis_window(axis, tol * kTailFactor);
            lo = den.lo ? std::max(to_double(*den.lo), window.lo) : window.lo;
            hi = den.hi ? std::min(to_double(*den.hi), window.hi) : window.hi;
        }
        const double local_tol = idx == 0 ? tol : tol * 1e-2;
        return integrate(
            [&](double x) {
                point[axis] = x;
                return poly_eval1(den.density, x) * level(idx + 1);
            },
            lo, hi, local_tol);
    };
    return term.weight * sign * level(0);
}

}  // namespace

std::complex<double> pair(const Distribution& d, const TestFunction& phi, double tol) {
    if (d.dim() != phi.dim()) throw std::invalid_argument("pairing arity mismatch");
    if (!d.sphere_terms().empty() || !d.radial_terms().empty())
        throw std::invalid_argument("sphere terms pair with axial test functions");
    std::complex<double> acc = 0.0;
    for (const auto& t : d.tensor_terms()) acc += pair_tensor(t, d.dim(), phi, tol);
    return acc;
}

namespace {

std::complex<double> sphere_average(const AxialTestFunction& phi, double rho, double tol) {
    // Archimedes: the axis coordinate of the uniform sphere measure is uniform.
    const TestFunction slice = phi.restrict_to_sphere(rho);
    if (rho <= 0.0) throw std::invalid_argument("sphere radius must be positive");
    return integrate([&](double u) { return slice(u); }, -rho, rho, tol * rho) / (2.0 * rho);
}

}  // namespace

std::complex<double> pair(const Distribution& d, const AxialTestFunction& phi, double tol) {
    if (d.dim() != 3) throw std::invalid_argument("axial pairing expects a distribution on R^3");
    if (!d.tensor_terms().empty()) throw std::invalid_argument("tensor terms in R^3 are not supported");
    std::complex<double> acc = 0.0;
    for (const auto& s : d.sphere_terms()) acc += s.mass * sphere_average(phi, to_double(s.radius), tol);
    for (const auto& r : d.radial_terms()) {
        acc += integrate(
            [&](double rho) { return poly_eval1(r.weight_poly, rho) * sphere_average(phi, rho, tol * 1e-2); },
            to_double(r.lo), to_double(r.hi), tol);
    }
    return acc;
}

Distribution rescale_k(const Distribution& d, long long k) {
    if (k < 1) throw std::invalid_argument("rescale_k needs k >= 1");
    const Rational kq(static_cast<long>(k));
    const double kd = static_cast<double>(k);
    Distribution out(d.dim());
    for (const auto& t : d.tensor_terms()) {
        TensorTerm nt;
        nt.weight = t.weight;
        for (const auto& f : t.factors) {
            if (const auto* atom = std::get_if<AtomFactor>(&f)) {
                nt.weight *= std::pow(kd, -atom->deriv);
                nt.factors.push_back(AtomFactor{atom->point / kq, atom->deriv});
            } else {
                const auto& den = std::get<DensityFactor>(f);
                // k * f(k x) on the support scaled by 1/k
                std::vector<std::vector<std::complex<double>>> map = {{std::complex<double>(kd)}};
                std::vector<std::complex<double>> shift = {0.0};
                CPoly scaled = den.density.compose_affine(map, shift);
                nt.weight *= kd;
                DensityFactor nd;
                nd.density = std::move(scaled);
                if (den.lo) nd.lo = *den.lo / kq;
                if (den.hi) nd.hi = *den.hi / kq;
                nt.factors.push_back(std::move(nd));
            }
        }
        out.add_term(std::move(nt));
    }
    for (const auto& s : d.sphere_terms()) out.add_term(SphereTerm{s.radius / kq, s.mass});
    for (const auto& r : d.radial_terms()) {
        std::vector<std::vector<std::complex<double>>> map = {{std::complex<double>(kd)}};
        std::vector<std::complex<double>> shift = {0.0};
        CPoly scaled = CPoly::constant(1, kd) * r.weight_poly.compose_affine(map, shift);
        out.add_term(RadialTerm{r.lo / kq, r.hi / kq, std::move(scaled)});
    }
    return out;
}

Distribution pushforward_coords(const Distribution& d, const std::vector<int>& axes) {
    if (!d.sphere_terms().empty() || !d.radial_terms().empty())
        throw std::invalid_argument("coordinate pushforward applies to tensor terms");
    std::vector<bool> keep(d.dim(), false);
    for (int a : axes) keep.at(a) = true;
    Distribution out(static_cast<int>(axes.size()));
    for (const auto& t : d.tensor_terms()) {
        TensorTerm nt;
        nt.weight = t.weight;
        for (int axis = 0; axis < d.dim(); ++axis) {
            if (keep[axis]) continue;
            if (const auto* atom = std::get_if<AtomFactor>(&t.factors[axis])) {
                if (atom->deriv > 0)
                    throw std::invalid_argument("derivative delta along the projection kernel is not supported");
            } else {
                const auto& den = std::get<DensityFactor>(t.factors[axis]);
                if (!den.lo || !den.hi)
                    throw std::invalid_argument("pushforward of a fiber with infinite mass");
                nt.weight *= definite_integral1(den.density, *den.lo, *den.hi);
            }
        }
        for (int a : axes) nt.factors.push_back(t.factors[a]);
        out.add_term(std::move(nt));
    }
    return out;
}

Distribution pushforward_axis(const Distribution& d) {
    if (d.dim() != 3) throw std::invalid_argument("axis pushforward expects a distribution on R^3");
    if (!d.tensor_terms().empty() || !d.radial_terms().empty())
        throw std::invalid_argument("axis pushforward supports sphere terms only");
    Distribution out(1);
    for (const auto& s : d.sphere_terms()) {
        // Uniform on [-rho, rho] with the same total mass.
        const std::complex<double> height = s.mass / (2.0 * to_double(s.radius));
        out = out + Distribution::uniform1d(-s.radius, s.radius, height);
    }
    return out;
}

namespace {

// Structural derivative of a single 1-D factor: list of (weight, factor).
std::vector<std::pair<std::complex<double>, Factor>> derivative_factor(const Factor& f) {
    std::vector<std::pair<std::complex<double>, Factor>> out;
    if (const auto* atom = std::get_if<AtomFactor>(&f)) {
        out.push_back({1.0, AtomFactor{atom->point, atom->deriv + 1}});
        return out;
    }
    const auto& den = std::get<DensityFactor>(f);
    CPoly dp = den.density.derivative(0);
    if (!dp.is_zero()) out.push_back({1.0, DensityFactor{den.lo, den.hi, std::move(dp)}});
    if (den.lo) out.push_back({poly_eval1(den.density, to_double(*den.lo)), AtomFactor{*den.lo, 0}});
    if (den.hi) out.push_back({-poly_eval1(den.density, to_double(*den.hi)), AtomFactor{*den.hi, 0}});
    return out;
}

bool factor_bounded(const Factor& f) {
    if (std::holds_alternative<AtomFactor>(f)) return true;
    const auto& den = std::get<DensityFactor>(f);
    return den.lo.has_value() && den.hi.has_value();
}

std::vector<std::pair<std::complex<double>, Factor>> convolve_factor(const Factor& a, const Factor& b) {
    const auto* atom_a = std::get_if<AtomFactor>(&a);
    const auto* atom_b = std::get_if<AtomFactor>(&b);
    if (atom_a && atom_b)
        return {{1.0, AtomFactor{atom_a->point + atom_b->point, atom_a->deriv + atom_b->deriv}}};
    if (!atom_a && !atom_b) throw std::invalid_argument("density-density convolution is not supported");
    const AtomFactor& atom = atom_a ? *atom_a : *atom_b;
    const DensityFactor& den = atom_a ? std::get<DensityFactor>(b) : std::get<DensityFactor>(a);
    // Translate the density by the atom, then differentiate structurally.
    DensityFactor shifted;
    shifted.density = shift_poly(den.density, atom.point);
    if (den.lo) shifted.lo = *den.lo + atom.point;
    if (den.hi) shifted.hi = *den.hi + atom.point;
    std::vector<std::pair<std::complex<double>, Factor>> current = {{1.0, std::move(shifted)}};
    for (int e = 0; e < atom.deriv; ++e) {
        std::vector<std::pair<std::complex<double>, Factor>> next;
        for (const auto& [w, f] : current)
            for (auto& [w2, f2] : derivative_factor(f)) next.push_back({w * w2, std::move(f2)});
        current = std::move(next);
    }
    return current;
}

}  // namespace

Distribution convolve(const Distribution& d, const Distribution& b) {
    if (d.dim() != b.dim()) throw std::invalid_argument("convolution dim mismatch");
    if (!d.sphere_terms().empty() || !b.sphere_terms().empty() || !d.radial_terms().empty() ||
        !b.radial_terms().empty())
        throw std::invalid_argument("convolution of sphere terms is not supported");
    for (const auto& t : b.tensor_terms())
        for (const auto& f : t.factors)
            if (!factor_bounded(f)) throw std::invalid_argument("convolution kernel must be compactly supported");
    for (const auto& td : d.tensor_terms())
        for (const auto& tb : b.tensor_terms())
            for (int axis = 0; axis < d.dim(); ++axis) {
                const bool da = factor_bounded(td.factors[axis]);
                const bool db = factor_bounded(tb.factors[axis]);
                if (!da && !db)
                    throw std::invalid_argument("both convolution operands have unbounded support");
            }

    Distribution out(d.dim());
    for (const auto& td : d.tensor_terms())
        for (const auto& tb : b.tensor_terms()) {
            std::vector<TensorTerm> partial = {{td.weight * tb.weight, {}}};
            for (int axis = 0; axis < d.dim(); ++axis) {
                auto pieces = convolve_factor(td.factors[axis], tb.factors[axis]);
                std::vector<TensorTerm> next;
                for (const auto& p : partial)
                    for (const auto& [w, f] : pieces) {
                        TensorTerm t = p;
                        t.weight *= w;
                        t.factors.push_back(f);
                        next.push_back(std::move(t));
                    }
                partial = std::move(next);
            }
            for (auto& t : partial) out.add_term(std::move(t));
        }
    return out;
}

Distribution derivative(const Distribution& d, int axis) {
    if (!d.sphere_terms().empty() || !d.radial_terms().empty())
        throw std::invalid_argument("structural derivative of sphere terms is not supported");
    Distribution out(d.dim());
    for (const auto& t : d.tensor_terms())
        for (const auto& [w, f] : derivative_factor(t.factors[axis])) {
            TensorTerm nt = t;
            nt.weight *= w;
            nt.factors[axis] = f;
            out.add_term(std::move(nt));
        }
    return out;
}

Distribution apply_symbol(const Distribution& d, const Poly<ComplexRational>& symbol) {
    if (symbol.nvars() != d.dim() && !(d.dim() == 3 && symbol.total_degree() == 0))
        throw std::invalid_argument("symbol arity mismatch");
    Distribution out(d.dim());
    for (const auto& [mono, coeff] : symbol.terms()) {
        int total = 0;
        for (int e : mono) total += e;
        if (total > 0 && (!d.sphere_terms().empty() || !d.radial_terms().empty()))
            throw std::invalid_argument("differential symbols on sphere terms are not supported");
        Distribution part = d;
        for (int axis = 0; axis < symbol.nvars(); ++axis)
            for (int e = 0; e < mono[axis]; ++e) part = derivative(part, axis);
        // p(i d): each derivative carries a factor i.
        std::complex<double> phase = 1.0;
        for (int e = 0; e < total; ++e) phase *= std::complex<double>(0.0, 1.0);
        out = out + (to_complex(coeff) * phase) * part;
    }
    return out;
}

std::complex<double> fourier_pair(const Distribution& d, const std::vector<double>& freq) {
    if (static_cast<int>(freq.size()) != d.dim()) throw std::invalid_argument("frequency arity mismatch");
    if (!d.sphere_terms().empty() || !d.radial_terms().empty())
        throw std::invalid_argument("use fourier_pair_axis for distributions on su(2)*");
    std::complex<double> acc = 0.0;
    for (const auto& t : d.tensor_terms()) {
        std::complex<double> v = t.weight;
        for (int axis = 0; axis < d.dim(); ++axis) {
            const double w = freq[axis];
            if (const auto* atom = std::get_if<AtomFactor>(&t.factors[axis])) {
                // <d^m delta_a, e^{iwx}> = (-1)^m (iw)^m e^{iwa}
                std::complex<double> f = std::exp(std::complex<double>(0.0, w * to_double(atom->point)));
                for (int e = 0; e < atom->deriv; ++e) f *= std::complex<double>(0.0, -w);
                v *= f;
            } else {
                const auto& den = std::get<DensityFactor>(t.factors[axis]);
                if (!den.lo || !den.hi) throw std::invalid_argument("fourier_pair requires compact support");
                v *= poly_exp_integral(den.density, *den.lo, *den.hi, w);
            }
        }
        acc += v;
    }
    return acc;
}

std::complex<double> fourier_pair_axis(const Distribution& d, double t) {
    if (d.dim() != 3) throw std::invalid_argument("fourier_pair_axis expects a distribution on R^3");
    std::complex<double> acc = 0.0;
    for (const auto& s : d.sphere_terms()) {
        // Push to the axis (uniform on [-rho, rho]) and transform there.
        const double rho = to_double(s.radius);
        const CPoly one = CPoly::constant(1, 1.0);
        acc += s.mass / (2.0 * rho) * poly_exp_integral(one, -s.radius, s.radius, t);
    }
    if (!d.radial_terms().empty() || !d.tensor_terms().empty())
        throw std::invalid_argument("fourier_pair_axis supports sphere terms only");
    return acc;
}

LaurentDistSeries::LaurentDistSeries(int n0, long long period, int order, int dim)
    : n0_(n0), period_(period), order_(order), dim_(dim) {
    if (period < 1) throw std::invalid_argument("series period must be >= 1");
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.assign(order + 1, std::vector<Distribution>(period, Distribution(dim)));
}

Distribution& LaurentDistSeries::at(int n, long long residue) {
    return coeffs_.at(n).at(residue % period_);
}

const Distribution& LaurentDistSeries::coeff(int n, long long k) const {
    return coeffs_.at(n).at(((k % period_) + period_) % period_);
}

int LaurentDistSeries::first_nonzero_order_above(int from, double eps) const {
    for (int n = from + 1; n <= order_; ++n)
        for (long long r = 0; r < period_; ++r)
            if (!coeffs_[n][r].is_negligible(eps)) return n;
    return -1;
}

namespace {

template <class Fn>
std::complex<double> series_pair_impl(const LaurentDistSeries& s, int N, long long k, Fn&& pair_with) {
    if (N > s.order()) throw std::invalid_argument("series truncation order exceeds stored coefficients");
    std::complex<double> acc = 0.0;
    for (int n = 0; n <= N; ++n) {
        const Distribution& theta = s.coeff(n, k);
        if (theta.is_negligible()) continue;
        acc += pair_with(theta) * std::pow(static_cast<double>(k), s.leading_exponent() - n);
    }
    return acc;
}

}  // namespace

std::complex<double> series_pair(const LaurentDistSeries& s, const TestFunction& phi, int N, long long k,
                                 double tol) {
    return series_pair_impl(s, N, k, [&](const Distribution& d) { return pair(d, phi, tol); });
}

std::complex<double> series_pair(const LaurentDistSeries& s, const AxialTestFunction& phi, int N, long long k,
                                 double tol) {
    return series_pair_impl(s, N, k, [&](const Distribution& d) { return pair(d, phi, tol); });
}

LaurentDistSeries apply_diff_op(const DiffOpSeries& op, const LaurentDistSeries& s, int N) {
    if (N > s.order() + op.valid_order())
        throw std::invalid_argument("operator order exhausted before the requested truncation");
    LaurentDistSeries out(s.leading_exponent(), s.period(), N, s.dim());
    for (int n = 0; n <= N; ++n) {
        for (int l = 0; l <= n; ++l) {
            const int m = n - l;
            if (m > s.order()) continue;
            if (!op.has_order(l)) continue;
            if (l > op.valid_order()) throw std::invalid_argument("operator order exhausted");
            const auto symbol = op.symbol(l);
            for (long long r = 0; r < s.period(); ++r) {
                const Distribution& theta = s.coeff(m, r);
                if (theta.is_negligible()) continue;
                out.at(n, r) = out.at(n, r) + apply_symbol(theta, symbol);
            }
        }
    }
    return out;
}

namespace {

using nlohmann::json;

json factor_json(const Factor& f) {
    if (const auto* atom = std::get_if<AtomFactor>(&f))
        return {{"kind", "atom"}, {"point", to_string(atom->point)}, {"deriv", atom->deriv}};
    const auto& den = std::get<DensityFactor>(f);
    json terms = json::array();
    for (const auto& [m, c] : den.density.terms())
        terms.push_back({{"degree", m[0]}, {"re", c.real()}, {"im", c.imag()}});
    return {{"kind", "density"},
            {"lo", den.lo ? json(to_string(*den.lo)) : json()},
            {"hi", den.hi ? json(to_string(*den.hi)) : json()},
            {"poly", terms}};
}

}  // namespace

std::string Distribution::to_json_string() const {
    json doc;
    doc["format"] = "orbitsum-distribution";
    doc["version"] = 1;
    doc["dim"] = dim_;
    json tensors = json::array();
    for (const auto& t : tensor_) {
        json factors = json::array();
        for (const auto& f : t.factors) factors.push_back(factor_json(f));
        tensors.push_back({{"re", t.weight.real()}, {"im", t.weight.imag()}, {"factors", factors}});
    }
    doc["tensor_terms"] = tensors;
    json spheres = json::array();
    for (const auto& s : spheres_)
        spheres.push_back({{"radius", to_string(s.radius)}, {"mass_re", s.mass.real()}, {"mass_im", s.mass.imag()}});
    doc["sphere_terms"] = spheres;
    json radials = json::array();
    for (const auto& r : radials_) {
        json terms = json::array();
        for (const auto& [m, c] : r.weight_poly.terms())
            terms.push_back({{"degree", m[0]}, {"re", c.real()}, {"im", c.imag()}});
        radials.push_back({{"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}, {"poly", terms}});
    }
    doc["radial_terms"] = radials;
    return doc.dump(2);
}

}  // namespace orbitsum
