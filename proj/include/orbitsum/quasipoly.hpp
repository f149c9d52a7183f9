#ifndef ORBITSUM_QUASIPOLY_HPP
#define ORBITSUM_QUASIPOLY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orbitsum/poly.hpp"
#include "orbitsum/rational.hpp"

namespace orbitsum {

using LatticePoint = std::vector<long long>;

// Closed rational polyhedron { xi : <normal_i, xi> >= offset_i }.
struct HalfSpace {
    std::vector<Rational> normal;
    Rational offset;
};

class Polyhedron {
  public:
    explicit Polyhedron(int rank = 1) : rank_(rank) {}

    static Polyhedron whole_space(int rank) { return Polyhedron(rank); }
    static Polyhedron half_line(const Rational& lo);                       // [lo, inf)
    static Polyhedron interval(const Rational& lo, const Rational& hi);    // [lo, hi]
    static Polyhedron box(const std::vector<Rational>& lo, const std::vector<Rational>& hi);

    int rank() const { return rank_; }
    const std::vector<HalfSpace>& half_spaces() const { return faces_; }
    void add_half_space(HalfSpace h);

    bool contains(const std::vector<Rational>& xi) const;
    // Membership of lambda/k without division: <a, lambda> >= b*k for k > 0.
    bool contains_scaled(const LatticePoint& lambda, long long k) const;

    // Exact bounding box; throws if the polyhedron is unbounded or rank > 2.
    struct Box {
        std::vector<Rational> lo, hi;
    };
    Box bounding_box() const;

    // A nonzero direction d with <a_i, d> >= 0 for all faces, if one exists.
    std::optional<std::vector<Rational>> recession_direction() const;

  private:
    int rank_;
    std::vector<HalfSpace> faces_;
};

// Quasi-polynomial on Z^r x Z: period D, one polynomial in (lambda_1..lambda_r, k)
// per residue class of (lambda, k) mod D. Missing classes evaluate to zero.
class QuasiPolynomial {
  public:
    explicit QuasiPolynomial(int rank = 1, long long period = 1);

    static QuasiPolynomial constant(int rank, const Rational& value);
    static QuasiPolynomial from_poly(int rank, Poly<Rational> p);  // period 1; vars = (lambda.., k)

    int rank() const { return rank_; }
    long long period() const { return period_; }
    int degree() const;

    void set_class(const std::vector<long long>& residue, Poly<Rational> p);
    const std::map<std::vector<long long>, Poly<Rational>>& classes() const { return classes_; }

    Rational eval(const LatticePoint& lambda, long long k) const;

  private:
    int rank_;
    long long period_;
    std::map<std::vector<long long>, Poly<Rational>> classes_;
};

// Piecewise quasi-polynomial  m = sum_P alpha_P m_P [C_P]  (closed membership).
class PiecewiseQP {
  public:
    struct Piece {
        Polyhedron domain;
        long long alpha = 1;
        QuasiPolynomial values;
    };

    explicit PiecewiseQP(int rank = 1) : rank_(rank) {}

    int rank() const { return rank_; }
    void add_piece(Piece piece);
    const std::vector<Piece>& pieces() const { return pieces_; }

    Rational eval(const LatticePoint& lambda, long long k) const;

    std::string to_json_string() const;
    static PiecewiseQP from_json_string(const std::string& text);

  private:
    int rank_;
    std::vector<Piece> pieces_;
};

inline Rational pqp_eval(const PiecewiseQP& m, const LatticePoint& lambda, long long k) {
    return m.eval(lambda, k);
}

// Counts j in N^n with mu = k*a + sum_i (j_i + 1/2) w_i by bounded enumeration.
// All weights must have even entries and lie in an open half-space.
long long vector_partition(const std::vector<LatticePoint>& weights, const LatticePoint& a,
                           const LatticePoint& mu, long long k);

struct WindowComparison {
    bool equal = true;
    LatticePoint lambda;  // first counterexample, if any
    long long k = 0;
};

using LatticeOracle = std::function<Rational(const LatticePoint&, long long)>;

// Exhaustive equality of two oracles on { lambda : lambda/k in window }, 1 <= k <= k_max.
WindowComparison compare_on_window(const LatticeOracle& m1, const LatticeOracle& m2,
                                   const Polyhedron& window, long long k_max);

WindowComparison pqp_diff_zero_on_window(const PiecewiseQP& m1, const PiecewiseQP& m2,
                                         const Polyhedron& window, long long k_max);

}  // namespace orbitsum

#endif
