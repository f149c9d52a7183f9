#ifndef ORBITSUM_POLY_HPP
#define ORBITSUM_POLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace orbitsum {

// Sparse multivariate polynomial over an exact or floating scalar.
// Monomials are keyed by their exponent vector (size == nvars).
template <class T>
class Poly {
  public:
    using Monomial = std::vector<int>;

    Poly() : nvars_(1) {}
    explicit Poly(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw std::invalid_argument("poly needs at least one variable");
    }

    static Poly constant(int nvars, T value) {
        Poly p(nvars);
        p.add_term(Monomial(nvars, 0), std::move(value));
        return p;
    }
    static Poly variable(int nvars, int axis, T coeff = T(1)) {
        Poly p(nvars);
        Monomial m(nvars, 0);
        m.at(axis) = 1;
        p.add_term(m, std::move(coeff));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, T>& terms() const { return terms_; }

    void add_term(Monomial m, T coeff) {
        if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("monomial arity mismatch");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!(coeff == T(0))) terms_.emplace(std::move(m), std::move(coeff));
        } else {
            it->second = it->second + coeff;
            if (it->second == T(0)) terms_.erase(it);
        }
    }

    T coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? T(0) : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
        return d;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, T(0) - c);
        return out;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
                out.add_term(std::move(m), ca * cb);
            }
        return out;
    }
    friend Poly operator*(const T& s, const Poly& p) {
        Poly out(p.nvars_);
        for (const auto& [m, c] : p.terms_) out.add_term(m, s * c);
        return out;
    }

    Poly derivative(int axis) const {
        Poly out(nvars_);
        for (const auto& [m, c] : terms_) {
            if (m[axis] == 0) continue;
            Monomial d = m;
            d[axis] -= 1;
            out.add_term(std::move(d), c * T(m[axis]));
        }
        return out;
    }

    template <class X>
    auto eval(const std::vector<X>& point) const {
        using R = decltype(std::declval<T>() * std::declval<X>());
        R total = R(0);
        for (const auto& [m, c] : terms_) {
            R v = R(c);
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < m[i]; ++e) v = v * point[i];
            total = total + v;
        }
        return total;
    }

    // Substitute x_i = sum_j map[i][j] * y_j + shift[i]; result lives in
    // as many variables as each row of `map` has columns.
    Poly compose_affine(const std::vector<std::vector<T>>& map, const std::vector<T>& shift) const {
        if (static_cast<int>(map.size()) != nvars_ || static_cast<int>(shift.size()) != nvars_)
            throw std::invalid_argument("affine map arity mismatch");
        const int out_vars = map.empty() ? 1 : static_cast<int>(map[0].size());
        Poly out(out_vars);
        std::vector<Poly> images;
        images.reserve(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            Poly img = Poly::constant(out_vars, shift[i]);
            for (int j = 0; j < out_vars; ++j)
                if (!(map[i][j] == T(0))) img = img + Poly::variable(out_vars, j, map[i][j]);
            images.push_back(std::move(img));
        }
        for (const auto& [m, c] : terms_) {
            Poly v = Poly::constant(out_vars, c);
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < m[i]; ++e) v = v * images[i];
            out = out + v;
        }
        return out;
    }

    // Replace variable `axis` by `image` (same variable set).
    Poly substitute(int axis, const Poly& image) const {
        if (image.nvars_ != nvars_) throw std::invalid_argument("substitute arity mismatch");
        Poly out(nvars_);
        for (const auto& [m, c] : terms_) {
            Monomial base = m;
            const int e = base[axis];
            base[axis] = 0;
            Poly v(nvars_);
            v.add_term(std::move(base), c);
            for (int i = 0; i < e; ++i) v = v * image;
            out = out + v;
        }
        return out;
    }

    Poly truncate_total_degree(int order) const {
        Poly out(nvars_);
        for (const auto& [m, c] : terms_)
            if (std::accumulate(m.begin(), m.end(), 0) <= order) out.add_term(m, c);
        return out;
    }

    Poly homogeneous_part(int degree) const {
        Poly out(nvars_);
        for (const auto& [m, c] : terms_)
            if (std::accumulate(m.begin(), m.end(), 0) == degree) out.add_term(m, c);
        return out;
    }

    template <class F>
    auto map_coeffs(F&& f) const {
        using U = decltype(f(std::declval<T>()));
        Poly<U> out(nvars_);
        for (const auto& [m, c] : terms_) out.add_term(m, f(c));
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

  private:
    template <class U>
    friend class Poly;
    int nvars_;
    std::map<Monomial, T> terms_;
};

}  // namespace orbitsum

#endif
