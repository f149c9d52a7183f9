#include "orbitsum/quasipoly.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace orbitsum {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot_lattice(const std::vector<Rational>& a, const LatticePoint& p) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(static_cast<long>(p[i]));
    return s;
}

long long mod_positive(long long a, long long d) {
    long long m = a % d;
    return m < 0 ? m + d : m;
}

Rational floor_rational(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(f);
}

Rational ceil_rational(const Rational& q) {
    mpz_class f;
    mpz_cdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(f);
}

// Clip the cone of directions satisfying <normals_i, d> >= 0 down to at most
// two generating rays (2-D only). Returns verified nonzero generators.
std::vector<std::vector<Rational>> cone_generators_2d(const std::vector<std::vector<Rational>>& normals) {
    auto rot90 = [](const std::vector<Rational>& v) {
        return std::vector<Rational>{-v[1], v[0]};
    };
    if (normals.empty()) return {{Rational(1), Rational(0)}, {Rational(0), Rational(1)},
                                 {Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}};
    std::vector<Rational> g1 = rot90(normals[0]);
    std::vector<Rational> g2 = {-g1[0], -g1[1]};
    bool collapsed = false;
    for (size_t i = 1; i < normals.size() && !collapsed; ++i) {
        const Rational s1 = dot(g1, normals[i]);
        const Rational s2 = dot(g2, normals[i]);
        if (s1 >= 0 && s2 >= 0) continue;
        if (s1 < 0 && s2 < 0) {
            collapsed = true;
            break;
        }
        std::vector<Rational> boundary(2);
        for (int c = 0; c < 2; ++c) boundary[c] = s1 * g2[c] - s2 * g1[c];
        if (boundary[0] == 0 && boundary[1] == 0) {
            collapsed = true;
            break;
        }
        if (s1 > 0)
            g2 = boundary;
        else
            g1 = boundary;
    }
    std::vector<std::vector<Rational>> out;
    if (!collapsed) {
        for (auto* g : {&g1, &g2}) {
            bool ok = !((*g)[0] == 0 && (*g)[1] == 0);
            for (const auto& n : normals) ok = ok && dot(*g, n) >= 0;
            if (ok) out.push_back(*g);
        }
        // Midpoint candidate covers the strictly-interior case.
        std::vector<Rational> mid = {g1[0] + g2[0], g1[1] + g2[1]};
        bool ok = !(mid[0] == 0 && mid[1] == 0);
        for (const auto& n : normals) ok = ok && dot(mid, n) >= 0;
        if (ok) out.push_back(mid);
    }
    return out;
}

}  // namespace

Polyhedron Polyhedron::half_line(const Rational& lo) {
    Polyhedron p(1);
    p.add_half_space({{Rational(1)}, lo});
    return p;
}

Polyhedron Polyhedron::interval(const Rational& lo, const Rational& hi) {
    Polyhedron p(1);
    p.add_half_space({{Rational(1)}, lo});
    p.add_half_space({{Rational(-1)}, -hi});
    return p;
}

Polyhedron Polyhedron::box(const std::vector<Rational>& lo, const std::vector<Rational>& hi) {
    const int r = static_cast<int>(lo.size());
    Polyhedron p(r);
    for (int i = 0; i < r; ++i) {
        std::vector<Rational> e_plus(r, Rational(0)), e_minus(r, Rational(0));
        e_plus[i] = 1;
        e_minus[i] = -1;
        p.add_half_space({e_plus, lo[i]});
        p.add_half_space({e_minus, -hi[i]});
    }
    return p;
}

void Polyhedron::add_half_space(HalfSpace h) {
    if (static_cast<int>(h.normal.size()) != rank_) throw std::invalid_argument("half-space arity mismatch");
    faces_.push_back(std::move(h));
}

bool Polyhedron::contains(const std::vector<Rational>& xi) const {
    for (const auto& f : faces_)
        if (dot(f.normal, xi) < f.offset) return false;
    return true;
}

bool Polyhedron::contains_scaled(const LatticePoint& lambda, long long k) const {
    if (k <= 0) throw std::invalid_argument("contains_scaled: k must be positive");
    for (const auto& f : faces_)
        if (dot_lattice(f.normal, lambda) < f.offset * Rational(static_cast<long>(k))) return false;
    return true;
}

std::optional<std::vector<Rational>> Polyhedron::recession_direction() const {
    if (rank_ == 1) {
        bool up_blocked = false, down_blocked = false;
        for (const auto& f : faces_) {
            if (f.normal[0] > 0) down_blocked = true;
            if (f.normal[0] < 0) up_blocked = true;
        }
        if (!up_blocked) return std::vector<Rational>{Rational(1)};
        if (!down_blocked) return std::vector<Rational>{Rational(-1)};
        return std::nullopt;
    }
    if (rank_ == 2) {
        std::vector<std::vector<Rational>> normals;
        for (const auto& f : faces_) normals.push_back(f.normal);
        auto gens = cone_generators_2d(normals);
        if (gens.empty()) return std::nullopt;
        return gens.front();
    }
    throw std::invalid_argument("recession_direction implemented for rank <= 2");
}

Polyhedron::Box Polyhedron::bounding_box() const {
    if (recession_direction().has_value()) throw std::domain_error("polyhedron is unbounded");
    if (rank_ == 1) {
        // Tightest lower/upper bounds among the half-lines.
        std::optional<Rational> lo, hi;
        for (const auto& f : faces_) {
            if (f.normal[0] == 0) {
                if (f.offset > 0) return {{Rational(1)}, {Rational(0)}};  // empty
                continue;
            }
            Rational bound = f.offset / f.normal[0];
            if (f.normal[0] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (!lo || !hi) throw std::domain_error("polyhedron is unbounded");
        return {{*lo}, {*hi}};
    }
    if (rank_ == 2) {
        // Vertex enumeration over pairs of face boundaries.
        std::vector<std::vector<Rational>> vertices;
        const auto& fs = faces_;
        for (size_t i = 0; i < fs.size(); ++i)
            for (size_t j = i + 1; j < fs.size(); ++j) {
                const Rational det = fs[i].normal[0] * fs[j].normal[1] - fs[i].normal[1] * fs[j].normal[0];
                if (det == 0) continue;
                std::vector<Rational> v(2);
                v[0] = (fs[i].offset * fs[j].normal[1] - fs[j].offset * fs[i].normal[1]) / det;
                v[1] = (fs[i].normal[0] * fs[j].offset - fs[j].normal[0] * fs[i].offset) / det;
                if (contains(v)) vertices.push_back(std::move(v));
            }
        if (vertices.empty()) return {{Rational(1), Rational(1)}, {Rational(0), Rational(0)}};  // empty
        Box b{{vertices[0][0], vertices[0][1]}, {vertices[0][0], vertices[0][1]}};
        for (const auto& v : vertices)
            for (int c = 0; c < 2; ++c) {
                b.lo[c] = std::min(b.lo[c], v[c]);
                b.hi[c] = std::max(b.hi[c], v[c]);
            }
        return b;
    }
    throw std::invalid_argument("bounding_box implemented for rank <= 2");
}

QuasiPolynomial::QuasiPolynomial(int rank, long long period) : rank_(rank), period_(period) {
    if (period < 1) throw std::invalid_argument("quasi-polynomial period must be >= 1");
}

QuasiPolynomial QuasiPolynomial::constant(int rank, const Rational& value) {
    QuasiPolynomial q(rank, 1);
    q.set_class(std::vector<long long>(rank + 1, 0), Poly<Rational>::constant(rank + 1, value));
    return q;
}

QuasiPolynomial QuasiPolynomial::from_poly(int rank, Poly<Rational> p) {
    if (p.nvars() != rank + 1) throw std::invalid_argument("quasi-polynomial arity mismatch");
    QuasiPolynomial q(rank, 1);
    q.set_class(std::vector<long long>(rank + 1, 0), std::move(p));
    return q;
}

int QuasiPolynomial::degree() const {
    int d = 0;
    for (const auto& [r, p] : classes_) d = std::max(d, p.total_degree());
    return d;
}

void QuasiPolynomial::set_class(const std::vector<long long>& residue, Poly<Rational> p) {
    if (static_cast<int>(residue.size()) != rank_ + 1) throw std::invalid_argument("residue arity mismatch");
    if (p.nvars() != rank_ + 1) throw std::invalid_argument("polynomial arity mismatch");
    std::vector<long long> key(residue.size());
    for (size_t i = 0; i < residue.size(); ++i) key[i] = mod_positive(residue[i], period_);
    classes_[key] = std::move(p);
}

Rational QuasiPolynomial::eval(const LatticePoint& lambda, long long k) const {
    if (static_cast<int>(lambda.size()) != rank_) throw std::invalid_argument("lattice point arity mismatch");
    std::vector<long long> key(rank_ + 1);
    for (int i = 0; i < rank_; ++i) key[i] = mod_positive(lambda[i], period_);
    key[rank_] = mod_positive(k, period_);
    auto it = classes_.find(key);
    if (it == classes_.end()) return 0;
    std::vector<Rational> point;
    point.reserve(rank_ + 1);
    for (int i = 0; i < rank_; ++i) point.emplace_back(static_cast<long>(lambda[i]));
    point.emplace_back(static_cast<long>(k));
    return it->second.eval(point);
}

void PiecewiseQP::add_piece(Piece piece) {
    if (piece.domain.rank() != rank_ || piece.values.rank() != rank_)
        throw std::invalid_argument("piece rank mismatch");
    pieces_.push_back(std::move(piece));
}

Rational PiecewiseQP::eval(const LatticePoint& lambda, long long k) const {
    Rational total = 0;
    for (const auto& piece : pieces_)
        if (piece.domain.contains_scaled(lambda, k))
            total += Rational(static_cast<long>(piece.alpha)) * piece.values.eval(lambda, k);
    return total;
}

namespace {

using nlohmann::json;

json rational_json(const Rational& q) { return to_string(q); }
Rational rational_from_json(const json& j) { return rat_from_string(j.get<std::string>()); }

json poly_json(const Poly<Rational>& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({{"exponents", m}, {"coeff", rational_json(c)}});
    return {{"nvars", p.nvars()}, {"terms", terms}};
}

Poly<Rational> poly_from_json(const json& j) {
    Poly<Rational> p(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exponents").get<std::vector<int>>(), rational_from_json(t.at("coeff")));
    return p;
}

}  // namespace

std::string PiecewiseQP::to_json_string() const {
    json doc;
    doc["format"] = "orbitsum-pqp";
    doc["version"] = 1;
    doc["rank"] = rank_;
    json pieces = json::array();
    for (const auto& piece : pieces_) {
        json faces = json::array();
        for (const auto& f : piece.domain.half_spaces()) {
            json normal = json::array();
            for (const auto& c : f.normal) normal.push_back(rational_json(c));
            faces.push_back({{"normal", normal}, {"offset", rational_json(f.offset)}});
        }
        json classes = json::array();
        for (const auto& [residue, poly] : piece.values.classes())
            classes.push_back({{"residue", residue}, {"poly", poly_json(poly)}});
        pieces.push_back({{"alpha", piece.alpha},
                          {"half_spaces", faces},
                          {"period", piece.values.period()},
                          {"classes", classes}});
    }
    doc["pieces"] = pieces;
    return doc.dump(2);
}

PiecewiseQP PiecewiseQP::from_json_string(const std::string& text) {
    json doc = json::parse(text);
    if (doc.at("format") != "orbitsum-pqp") throw std::invalid_argument("not an orbitsum-pqp document");
    if (doc.at("version").get<int>() != 1) throw std::invalid_argument("unsupported pqp version");
    const int rank = doc.at("rank").get<int>();
    PiecewiseQP out(rank);
    for (const auto& pj : doc.at("pieces")) {
        Polyhedron domain(rank);
        for (const auto& fj : pj.at("half_spaces")) {
            HalfSpace h;
            for (const auto& c : fj.at("normal")) h.normal.push_back(rational_from_json(c));
            h.offset = rational_from_json(fj.at("offset"));
            domain.add_half_space(std::move(h));
        }
        QuasiPolynomial values(rank, pj.at("period").get<long long>());
        for (const auto& cj : pj.at("classes"))
            values.set_class(cj.at("residue").get<std::vector<long long>>(), poly_from_json(cj.at("poly")));
        out.add_piece({std::move(domain), pj.at("alpha").get<long long>(), std::move(values)});
    }
    return out;
}

long long vector_partition(const std::vector<LatticePoint>& weights, const LatticePoint& a,
                           const LatticePoint& mu, long long k) {
    if (weights.empty()) throw std::invalid_argument("vector_partition needs at least one weight");
    const int r = static_cast<int>(weights[0].size());
    for (const auto& w : weights) {
        if (static_cast<int>(w.size()) != r) throw std::invalid_argument("weight arity mismatch");
        for (long long c : w)
            if (c % 2 != 0) throw std::invalid_argument("weights must have even entries");
    }

    // Properness certificate: u with <u, w_i> > 0 for every weight.
    std::vector<Rational> u;
    if (r == 1) {
        const bool pos = weights[0][0] > 0;
        u = {Rational(pos ? 1 : -1)};
    } else if (r == 2) {
        std::vector<std::vector<Rational>> normals;
        for (const auto& w : weights)
            normals.push_back({Rational(static_cast<long>(w[0])), Rational(static_cast<long>(w[1]))});
        auto gens = cone_generators_2d(normals);
        for (const auto& g : gens) {
            bool strict = true;
            for (const auto& n : normals) strict = strict && dot(g, n) > 0;
            if (strict) {
                u = g;
                break;
            }
        }
    } else {
        std::vector<Rational> sum(r, Rational(0));
        for (const auto& w : weights)
            for (int i = 0; i < r; ++i) sum[i] += Rational(static_cast<long>(w[i]));
        u = sum;
    }
    if (u.empty()) throw std::domain_error("weights do not lie in an open half-space (moment map not proper)");
    for (const auto& w : weights)
        if (dot_lattice(u, w) <= 0)
            throw std::domain_error("weights do not lie in an open half-space (moment map not proper)");

    // Target: sum_i j_i w_i = mu - k a - (1/2) sum_i w_i.
    LatticePoint target(r);
    for (int c = 0; c < r; ++c) {
        long long t = mu[c] - k * a[c];
        for (const auto& w : weights) t -= w[c] / 2;
        target[c] = t;
    }
    const Rational budget = dot_lattice(u, target);
    if (budget < 0) return 0;

    const int n = static_cast<int>(weights.size());
    std::vector<long long> bound(n);
    double volume = 1.0;
    for (int i = 0; i < n; ++i) {
        bound[i] = to_long(floor_rational(budget / dot_lattice(u, weights[i])));
        volume *= static_cast<double>(bound[i] + 1);
    }
    if (volume > 1e7) throw std::domain_error("vector_partition enumeration bound exceeds 1e7 points");

    long long count = 0;
    LatticePoint rest = target;
    std::function<void(int)> recurse = [&](int i) {
        if (i == n) {
            for (int c = 0; c < r; ++c)
                if (rest[c] != 0) return;
            ++count;
            return;
        }
        // Re-derive the per-branch bound from what is left of the budget.
        const Rational left = dot_lattice(u, rest);
        if (left < 0) return;
        const long long hi = std::min(bound[i], to_long(floor_rational(left / dot_lattice(u, weights[i]))));
        for (long long j = 0; j <= hi; ++j) {
            if (j > 0)
                for (int c = 0; c < r; ++c) rest[c] -= weights[i][c];
            recurse(i + 1);
        }
        for (int c = 0; c < r; ++c) rest[c] += hi * weights[i][c];
    };
    recurse(0);
    return count;
}

WindowComparison compare_on_window(const LatticeOracle& m1, const LatticeOracle& m2,
                                   const Polyhedron& window, long long k_max) {
    const auto box = window.bounding_box();
    const int r = window.rank();
    for (long long k = 1; k <= k_max; ++k) {
        std::vector<long long> lo(r), hi(r);
        for (int c = 0; c < r; ++c) {
            lo[c] = to_long(ceil_rational(box.lo[c] * Rational(static_cast<long>(k))));
            hi[c] = to_long(floor_rational(box.hi[c] * Rational(static_cast<long>(k))));
        }
        LatticePoint lambda = lo;
        while (true) {
            bool in_range = true;
            for (int c = 0; c < r; ++c) in_range = in_range && lambda[c] <= hi[c];
            if (in_range && window.contains_scaled(lambda, k)) {
                if (m1(lambda, k) != m2(lambda, k)) return {false, lambda, k};
            }
            int axis = 0;
            while (axis < r) {
                if (++lambda[axis] <= hi[axis]) break;
                lambda[axis] = lo[axis];
                ++axis;
            }
            if (axis == r) break;
        }
    }
    return {};
}

WindowComparison pqp_diff_zero_on_window(const PiecewiseQP& m1, const PiecewiseQP& m2,
                                         const Polyhedron& window, long long k_max) {
    return compare_on_window([&](const LatticePoint& l, long long k) { return m1.eval(l, k); },
                             [&](const LatticePoint& l, long long k) { return m2.eval(l, k); }, window, k_max);
}

}  // namespace orbitsum
