#include "orbitsum/models.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace orbitsum {

namespace {

long long ceil_ll(double x) { return static_cast<long long>(std::ceil(x)); }
long long floor_ll(double x) { return static_cast<long long>(std::floor(x)); }

void require_even_positive(long long w) {
    if (w < 2 || w % 2 != 0)
        throw std::invalid_argument("weights must be even and >= 2 (spin condition)");
}

}  // namespace

Model t_star_s1() {
    Model m;
    m.name = "t-star-s1";
    m.group = GroupData::torus(1);
    m.d = 1;
    m.r = 0;
    m.multiplicity = [](const LatticePoint&, long long) { return 1; };
    m.for_each = [](long long k, double radius, const std::function<void(const LatticePoint&, long long)>& f) {
        const long long lo = ceil_ll(-radius * static_cast<double>(k));
        const long long hi = floor_ll(radius * static_cast<double>(k));
        for (long long n = lo; n <= hi; ++n) f({n}, 1);
    };
    m.moment_image = Polyhedron::whole_space(1);
    m.a_hat_germ = [](int order) { return germ_taylor({"one"}, order); };
    m.dh_base = []() { return Distribution::lebesgue(1); };
    return m;
}

Model complex_line(long long w, long long a) {
    require_even_positive(w);
    Model m;
    m.name = "complex-line(" + std::to_string(w) + "," + std::to_string(a) + ")";
    m.group = GroupData::torus(1);
    m.d = 1;
    m.r = 0;
    m.multiplicity = [w, a](const LatticePoint& mu, long long k) {
        const long long first = k * a + w / 2;
        if (mu[0] < first) return 0LL;
        return (mu[0] - first) % w == 0 ? 1LL : 0LL;
    };
    m.for_each = [w, a](long long k, double radius, const std::function<void(const LatticePoint&, long long)>& f) {
        const long long hi = floor_ll(radius * static_cast<double>(k));
        for (long long mu = k * a + w / 2; mu <= hi; mu += w) f({mu}, 1);
    };
    m.moment_image = Polyhedron::half_line(rat(a));
    m.a_hat_germ = [w](int order) { return germ_taylor({"x_over_sin", rat(w)}, order); };
    m.dh_base = [w, a]() {
        return Distribution::density1d(rat(a), std::nullopt, CPoly::constant(1, 1.0 / static_cast<double>(w)));
    };
    return m;
}

Model complex_space(const std::vector<LatticePoint>& weights, const LatticePoint& a) {
    if (weights.empty()) throw std::invalid_argument("complex-space needs at least one weight");
    const int r = static_cast<int>(a.size());
    for (const auto& w : weights) {
        if (static_cast<int>(w.size()) != r) throw std::invalid_argument("weight arity mismatch");
        for (long long c : w)
            if (c % 2 != 0) throw std::invalid_argument("weights must be even (spin condition)");
    }
    Model m;
    m.name = "complex-space";
    m.group = GroupData::torus(r);
    m.d = static_cast<int>(weights.size());
    m.r = 0;
    m.multiplicity = [weights, a](const LatticePoint& mu, long long k) {
        return vector_partition(weights, a, mu, k);
    };
    m.for_each = [weights, a, r](long long k, double radius,
                                 const std::function<void(const LatticePoint&, long long)>& f) {
        // Enumerate the j-box allowed by the properness functional u = sum of
        // (validated) weights; each j contributes one unit at its own mu.
        const int n = static_cast<int>(weights.size());
        std::vector<double> u(r, 0.0);
        for (const auto& w : weights)
            for (int c = 0; c < r; ++c) u[c] += static_cast<double>(w[c]);
        auto dot_u = [&](const std::vector<double>& v) {
            double s = 0;
            for (int c = 0; c < r; ++c) s += u[c] * v[c];
            return s;
        };
        std::vector<double> wu(n);
        for (int i = 0; i < n; ++i) {
            std::vector<double> wd(weights[i].begin(), weights[i].end());
            wu[i] = dot_u(wd);
            if (wu[i] <= 0) throw std::domain_error("weights do not admit the summed properness functional");
        }
        double unorm = 0;
        for (double c : u) unorm += std::abs(c);
        std::vector<double> ad(a.begin(), a.end());
        const double budget = radius * static_cast<double>(k) * unorm - static_cast<double>(k) * dot_u(ad);
        std::vector<long long> jmax(n);
        for (int i = 0; i < n; ++i) jmax[i] = std::max<long long>(-1, floor_ll(budget / wu[i]));
        std::vector<long long> j(n, 0);
        while (true) {
            LatticePoint mu(r);
            for (int c = 0; c < r; ++c) {
                long long v = k * a[c];
                for (int i = 0; i < n; ++i) v += (2 * j[i] + 1) * weights[i][c] / 2;
                mu[c] = v;
            }
            bool inside = true;
            for (int c = 0; c < r; ++c)
                inside = inside && std::abs(static_cast<double>(mu[c])) <= radius * static_cast<double>(k);
            if (inside) f(mu, 1);
            int axis = 0;
            while (axis < n) {
                if (++j[axis] <= jmax[axis]) break;
                j[axis] = 0;
                ++axis;
            }
            if (axis == n) break;
        }
    };

    // Product structure (one weight per axis) enables the germ and DH base.
    bool product = static_cast<int>(weights.size()) == r;
    std::vector<int> axis_of(weights.size(), -1);
    if (product) {
        std::vector<bool> used(r, false);
        for (size_t i = 0; i < weights.size(); ++i) {
            int axis = -1;
            for (int c = 0; c < r; ++c)
                if (weights[i][c] != 0) {
                    if (axis >= 0) {
                        axis = -2;
                        break;
                    }
                    axis = c;
                }
            if (axis < 0 || used[axis]) {
                product = false;
                break;
            }
            used[axis] = true;
            axis_of[i] = axis;
        }
    }

    m.a_hat_germ = [weights, r](int order) {
        PowerSeries total = PowerSeries::one(r, order);
        for (const auto& w : weights) {
            PowerSeries base = germ_taylor({"x_over_sin", rat(1)}, order);
            std::vector<Rational> form;
            for (long long c : w) form.emplace_back(static_cast<long>(c));
            total = total * base.substitute_linear_form(form, r);
        }
        return total;
    };
    if (product) {
        std::vector<std::pair<int, long long>> axis_weight(weights.size());
        for (size_t i = 0; i < weights.size(); ++i) axis_weight[i] = {axis_of[i], weights[i][axis_of[i]]};
        m.dh_base = [axis_weight, a, r]() {
            Distribution d(r);
            TensorTerm t;
            t.factors.resize(r);
            for (const auto& [axis, w] : axis_weight) {
                DensityFactor den;
                den.density = CPoly::constant(1, 1.0 / std::abs(static_cast<double>(w)));
                if (w > 0)
                    den.lo = rat(a[axis]);
                else
                    den.hi = rat(a[axis]);
                t.factors[axis] = std::move(den);
            }
            d.add_term(std::move(t));
            return d;
        };
        Polyhedron image(r);
        for (const auto& [axis, w] : axis_weight) {
            std::vector<Rational> normal(r, Rational(0));
            normal[axis] = w > 0 ? 1 : -1;
            image.add_half_space({normal, Rational(w > 0 ? 1 : -1) * rat(a[axis])});
        }
        m.moment_image = image;
    } else {
        m.moment_image = Polyhedron::whole_space(r);  // image test skipped for non-product weights
    }
    return m;
}

Model su2_orbit() {
    Model m;
    m.name = "su2-orbit";
    m.group = GroupData::su2();
    m.d = 1;
    m.r = 1;
    m.compact_support = true;
    m.multiplicity = [](const LatticePoint& lam, long long k) { return lam[0] == k ? 1LL : 0LL; };
    m.for_each = [](long long k, double, const std::function<void(const LatticePoint&, long long)>& f) {
        f({k}, 1);
    };
    m.moment_image = Polyhedron::interval(rat(1), rat(1));
    m.dh_base = []() { return Distribution::sphere(rat(1), 1.0); };
    m.has_t_restriction = true;
    m.direct_t_multiplicity = [](long long mu, long long k) { return static_cast<long long>(branching_c(k, mu)); };
    m.su2_label_bound = [](long long k) { return k; };
    return m;
}

Model su2_flag_square() {
    Model m;
    m.name = "su2-flag-square";
    m.group = GroupData::su2();
    m.d = 2;
    m.r = 1;
    m.compact_support = true;
    m.multiplicity = [](const LatticePoint& lam, long long k) {
        const long long l = lam[0];
        return (l >= 1 && l <= 2 * k && l % 2 == 1) ? 1LL : 0LL;
    };
    m.for_each = [](long long k, double, const std::function<void(const LatticePoint&, long long)>& f) {
        for (long long l = 1; l <= 2 * k; l += 2) f({l}, 1);
    };
    m.moment_image = Polyhedron::interval(rat(0), rat(2));
    m.dh_base = []() {
        CPoly half_rho(1);
        half_rho.add_term({1}, std::complex<double>(0.5));
        return Distribution::radial(rat(0), rat(2), half_rho);
    };
    m.has_t_restriction = true;
    m.direct_t_multiplicity = [](long long mu, long long k) {
        // Weight convolution of the two strings {k-1, k-3, ..., -(k-1)}.
        long long count = 0;
        for (long long m1 = -(k - 1); m1 <= k - 1; m1 += 2) count += branching_c(k, mu - m1);
        return count;
    };
    m.su2_label_bound = [](long long k) { return 2 * k; };
    return m;
}

Model custom_torus_model(const PiecewiseQP& pqp, std::string name) {
    if (pqp.rank() != 1) throw std::invalid_argument("custom models are rank-1 torus models");
    Model m;
    m.name = std::move(name);
    m.group = GroupData::torus(1);
    m.d = 1;
    m.r = 0;
    auto shared = std::make_shared<PiecewiseQP>(pqp);
    m.multiplicity = [shared](const LatticePoint& mu, long long k) {
        const Rational v = shared->eval(mu, k);
        if (!is_integer(v)) throw std::domain_error("custom model multiplicity is not an integer");
        return to_long(v);
    };
    m.for_each = [shared](long long k, double radius, const std::function<void(const LatticePoint&, long long)>& f) {
        const long long lo = ceil_ll(-radius * static_cast<double>(k));
        const long long hi = floor_ll(radius * static_cast<double>(k));
        for (long long n = lo; n <= hi; ++n) {
            const Rational v = shared->eval({n}, k);
            if (v != 0) f({n}, to_long(v));
        }
    };
    m.moment_image = Polyhedron::whole_space(1);
    int deg = 0;
    for (const auto& piece : pqp.pieces()) deg = std::max(deg, piece.values.degree());
    m.bound_p = deg;
    m.bound_c = 1.0;
    for (const auto& piece : pqp.pieces()) {
        double cs = 0.0;
        for (const auto& [res, poly] : piece.values.classes())
            for (const auto& [mono, c] : poly.terms()) cs += std::abs(to_double(c));
        m.bound_c += cs * static_cast<double>(std::llabs(piece.alpha));
    }
    return m;
}

Model with_defect(const Model& base, const LatticePoint& lambda, long long k, long long delta) {
    Model m = base;
    m.name = base.name + "+defect";
    const auto inner_mult = base.multiplicity;
    m.multiplicity = [inner_mult, lambda, k, delta](const LatticePoint& l, long long kk) {
        long long v = inner_mult(l, kk);
        if (kk == k && l == lambda) v += delta;
        return v;
    };
    const auto inner_each = base.for_each;
    m.for_each = [inner_each, lambda, k, delta](long long kk, double radius,
                                                const std::function<void(const LatticePoint&, long long)>& f) {
        inner_each(kk, radius, f);
        if (kk == k) {
            bool inside = true;
            for (long long c : lambda)
                inside = inside && std::abs(static_cast<double>(c)) <= radius * static_cast<double>(kk);
            if (inside) f(lambda, delta);
        }
    };
    return m;
}

long long multiplicity(const Model& m, const LatticePoint& lambda, long long k) {
    if (k < 1) throw std::invalid_argument("multiplicity needs k >= 1");
    return m.multiplicity(lambda, k);
}

double certified_radius(const Model& m, long long k, const TestFunction& phi, double tol) {
    if (m.compact_support) return 0.0;
    // Two refinement rounds: envelope target shrinks with the lattice count
    // and the polynomial multiplicity bound inside the current radius.
    double radius = phi.decay_radius(tol * 1e-3);
    for (int round = 0; round < 2; ++round) {
        const double count = std::pow(2.0 * radius * static_cast<double>(k) + 1.0, m.group.rank);
        const double mbound = m.bound_c * std::pow(1.0 + radius * static_cast<double>(k), m.bound_p);
        radius = std::max(radius, phi.decay_radius(tol * 1e-3 / std::max(1.0, count * mbound)));
    }
    return radius;
}

ThetaResult theta_pair(const Model& m, long long k, const TestFunction& phi, double tol) {
    if (m.group.kind != GroupData::Kind::Torus)
        throw std::invalid_argument("SU(2) models pair with axial test functions");
    if (phi.dim() != m.group.rank) throw std::invalid_argument("test-function arity mismatch");
    if (k < 1) throw std::invalid_argument("theta_pair needs k >= 1");
    const double radius = certified_radius(m, k, phi, tol);
    std::complex<double> acc = 0.0;
    const double kd = static_cast<double>(k);
    m.for_each(k, radius, [&](const LatticePoint& lambda, long long mult) {
        std::vector<double> xi(lambda.size());
        for (size_t i = 0; i < lambda.size(); ++i) xi[i] = static_cast<double>(lambda[i]) / kd;
        acc += static_cast<double>(mult) * phi(xi);
    });
    return {acc, radius};
}

ThetaResult theta_pair(const Model& m, long long k, const AxialTestFunction& phi, double tol) {
    if (m.group.kind != GroupData::Kind::SU2)
        throw std::invalid_argument("torus models pair with plain test functions");
    if (k < 1) throw std::invalid_argument("theta_pair needs k >= 1");
    std::complex<double> acc = 0.0;
    m.for_each(k, 0.0, [&](const LatticePoint& lambda, long long mult) {
        const Distribution beta = orbit_measure(m.group, IrrepLabel::su2(lambda[0]));
        acc += static_cast<double>(mult) * pair(rescale_k(beta, k), phi, tol);
    });
    return {acc, 0.0};
}

std::complex<double> dh_pair(const Model& m, int n, const TestFunction& phi, double tol) {
    if (m.group.kind != GroupData::Kind::Torus)
        throw std::invalid_argument("SU(2) models pair with axial test functions");
    if (!m.dh_base) throw std::invalid_argument("model has no DH base distribution");
    if (n < 0) throw std::invalid_argument("dh_pair order must be >= 0");
    if (n == 0) return pair(m.dh_base(), phi, tol);
    if (!m.a_hat_germ) throw std::invalid_argument("model has no A-hat germ (order > 0 unavailable)");
    const PowerSeries germ = m.a_hat_germ(n);
    const Poly<Rational> part = germ.coeffs().homogeneous_part(n);
    if (part.is_zero()) return 0.0;
    // g_n(-i d) phi, then pair with DH(1).
    CPoly symbol(part.nvars());
    for (const auto& [mono, c] : part.terms()) {
        int total = 0;
        for (int e : mono) total += e;
        std::complex<double> phase = 1.0;
        for (int e = 0; e < total; ++e) phase *= std::complex<double>(0.0, -1.0);
        symbol.add_term(mono, to_double(c) * phase);
    }
    return pair(m.dh_base(), phi.apply_poly_derivative(symbol), tol);
}

std::complex<double> dh_pair(const Model& m, int n, const AxialTestFunction& phi, double tol) {
    if (m.group.kind != GroupData::Kind::SU2)
        throw std::invalid_argument("torus models pair with plain test functions");
    if (!m.dh_base) throw std::invalid_argument("model has no DH base distribution");
    if (n > 0) throw std::invalid_argument("DH twists of order > 0 are unavailable for SU(2) models");
    return pair(m.dh_base(), phi, tol);
}

}  // namespace orbitsum
