#ifndef TENVAL_SYMTENSOR_HPP
#define TENVAL_SYMTENSOR_HPP

// Symmetric tensors of rank p over R^n in exponent coordinates: a tensor is
// stored as the map beta -> m_beta where beta ranges over multi-indices with
// |beta| = p and m_beta is the common value of every full-tensor entry whose
// index tuple has content beta. Under the isomorphism with homogeneous
// polynomials, f(x) = sum_beta multinomial(p; beta) * m_beta * x^beta; the
// algebra below (symmetric product, GL action by substitution) is phrased in
// terms of that isomorphism.

#include <map>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace tenval {

using Exponent = std::vector<int>;

inline void check_exponent(const Exponent& e, int dim, int rank) {
    if (static_cast<int>(e.size()) != dim)
        throw DimensionMismatch("SymTensor: exponent length != dim");
    int total = 0;
    for (int k : e) {
        if (k < 0) throw BadParameter("SymTensor: negative exponent");
        total += k;
    }
    if (total != rank) throw BadParameter("SymTensor: exponent degree != rank");
}

inline std::vector<Exponent> enumerate_exponents(int dim, int rank) {
    std::vector<Exponent> out;
    Exponent cur(static_cast<std::size_t>(dim), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == dim - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, left - k);
        }
    };
    if (dim < 1) throw BadParameter("enumerate_exponents: dim < 1");
    if (rank < 0) throw BadParameter("enumerate_exponents: rank < 0");
    rec(rec, 0, rank);
    return out; // lexicographically sorted by construction
}

class SymTensor {
public:
    SymTensor(int dim, int rank) : dim_(dim), rank_(rank) {
        if (dim < 1) throw BadParameter("SymTensor: dim < 1");
        if (rank < 0) throw BadParameter("SymTensor: rank < 0");
    }

    static SymTensor scalar(int dim, const Rational& value) {
        SymTensor t(dim, 0);
        t.set_coord(Exponent(static_cast<std::size_t>(dim), 0), value);
        return t;
    }
    static SymTensor from_vector(const Vec& v) {
        SymTensor t(v.dim(), 1);
        for (int i = 0; i < v.dim(); ++i) {
            Exponent e(static_cast<std::size_t>(v.dim()), 0);
            e[static_cast<std::size_t>(i)] = 1;
            t.set_coord(e, v[i]);
        }
        return t;
    }

    int dim() const { return dim_; }
    int rank() const { return rank_; }

    // Zero coordinates are never stored.
    const std::map<Exponent, Rational>& coords() const { return m_; }

    Rational coord(const Exponent& e) const {
        check_exponent(e, dim_, rank_);
        auto it = m_.find(e);
        return it == m_.end() ? Rational(0) : it->second;
    }

    void set_coord(const Exponent& e, const Rational& value) {
        check_exponent(e, dim_, rank_);
        if (value == 0)
            m_.erase(e);
        else
            m_[e] = value;
    }

    bool is_zero() const { return m_.empty(); }

    Rational to_scalar() const {
        if (rank_ != 0) throw BadParameter("SymTensor::to_scalar: rank != 0");
        return coord(Exponent(static_cast<std::size_t>(dim_), 0));
    }
    Vec to_vector() const {
        if (rank_ != 1) throw BadParameter("SymTensor::to_vector: rank != 1");
        Vec v(dim_);
        for (const auto& [e, val] : m_)
            for (int i = 0; i < dim_; ++i)
                if (e[static_cast<std::size_t>(i)] == 1) v[i] = val;
        return v;
    }

    bool operator==(const SymTensor& o) const {
        return dim_ == o.dim_ && rank_ == o.rank_ && m_ == o.m_;
    }
    bool operator!=(const SymTensor& o) const { return !(*this == o); }

    SymTensor& operator+=(const SymTensor& o) {
        check_same(o);
        for (const auto& [e, val] : o.m_) {
            auto it = m_.find(e);
            if (it == m_.end()) {
                m_.emplace(e, val);
            } else {
                it->second += val;
                if (it->second == 0) m_.erase(it);
            }
        }
        return *this;
    }
    SymTensor operator+(const SymTensor& o) const {
        SymTensor t = *this;
        t += o;
        return t;
    }
    SymTensor operator-() const {
        SymTensor t(dim_, rank_);
        for (const auto& [e, val] : m_) t.m_[e] = -val;
        return t;
    }
    SymTensor operator-(const SymTensor& o) const { return *this + (-o); }
    friend SymTensor operator*(const Rational& c, const SymTensor& t) {
        SymTensor r(t.dim_, t.rank_);
        if (c == 0) return r;
        for (const auto& [e, val] : t.m_) r.m_[e] = c * val;
        return r;
    }

private:
    void check_same(const SymTensor& o) const {
        if (dim_ != o.dim_ || rank_ != o.rank_)
            throw DimensionMismatch("SymTensor: dim/rank mismatch");
    }
    int dim_;
    int rank_;
    std::map<Exponent, Rational> m_;
};

namespace detail {

// Homogeneous polynomials as sparse exponent -> coefficient maps; these are
// the *weighted* coordinates w_beta = multinomial(p; beta) * m_beta.
using Poly = std::map<Exponent, Rational>;

inline Poly to_poly(const SymTensor& t) {
    Poly f;
    for (const auto& [e, val] : t.coords())
        f[e] = Rational(multinomial(t.rank(), e)) * val;
    return f;
}

inline SymTensor from_poly(int dim, int rank, const Poly& f) {
    SymTensor t(dim, rank);
    for (const auto& [e, w] : f)
        t.set_coord(e, w / Rational(multinomial(rank, e)));
    return t;
}

inline Poly mul_poly(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, wa] : a)
        for (const auto& [eb, wb] : b) {
            Exponent e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto it = out.find(e);
            if (it == out.end())
                out.emplace(std::move(e), wa * wb);
            else
                it->second += wa * wb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace detail

// v^(sym p): the p-fold symmetric power of a vector, m_beta = prod v_i^beta_i.
inline SymTensor power(const Vec& v, int p) {
    SymTensor t(v.dim(), p);
    for (const auto& e : enumerate_exponents(v.dim(), p)) {
        Rational val(1);
        for (int i = 0; i < v.dim() && val != 0; ++i)
            val *= pow_rational(v[i], e[static_cast<std::size_t>(i)]);
        t.set_coord(e, val);
    }
    return t;
}

// Symmetric product: under the polynomial isomorphism this is plain
// multiplication of the associated forms.
inline SymTensor sym_product(const SymTensor& a, const SymTensor& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("sym_product: dim mismatch");
    return detail::from_poly(a.dim(), a.rank() + b.rank(),
                             detail::mul_poly(detail::to_poly(a), detail::to_poly(b)));
}

// GL action: the unique linear extension of v^(sym p) -> (phi v)^(sym p).
// On polynomials it is the substitution x -> phi^T x.
inline SymTensor gl_action(const Mat& phi, const SymTensor& t) {
    if (phi.dim() != t.dim()) throw DimensionMismatch("gl_action: dim mismatch");
    const int n = t.dim();
    // linear form replacing x_i: column i of phi, as a degree-1 poly
    std::vector<detail::Poly> sub(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) {
            if (phi.at(r, i) == 0) continue;
            Exponent e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(r)] = 1;
            sub[static_cast<std::size_t>(i)][e] = phi.at(r, i);
        }
    detail::Poly out;
    const Exponent unit_exp(static_cast<std::size_t>(n), 0);
    for (const auto& [e, w] : detail::to_poly(t)) {
        detail::Poly term{{unit_exp, w}};
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k)
                term = detail::mul_poly(term, sub[static_cast<std::size_t>(i)]);
        for (const auto& [ee, ww] : term) {
            auto it = out.find(ee);
            if (it == out.end())
                out.emplace(ee, ww);
            else
                it->second += ww;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return detail::from_poly(n, t.rank(), out);
}

// Coordinates of a planar tensor in the scaled basis K_i = C(p,i) * m_(p-i,i),
// i = 0..p; with this scaling the coordinates of v^(sym p) are exactly the
// coefficients of the binomial expansion of (v1 x1 + v2 x2)^p.
inline std::vector<Rational> planar_coords(const SymTensor& t) {
    if (t.dim() != 2) throw DimensionMismatch("planar_coords: dim != 2");
    const int p = t.rank();
    std::vector<Rational> k(static_cast<std::size_t>(p) + 1);
    for (int i = 0; i <= p; ++i)
        k[static_cast<std::size_t>(i)] =
            Rational(binomial_int(p, i)) * t.coord(Exponent{p - i, i});
    return k;
}

inline SymTensor from_planar_coords(const std::vector<Rational>& k) {
    if (k.empty()) throw BadParameter("from_planar_coords: empty coordinates");
    const int p = static_cast<int>(k.size()) - 1;
    SymTensor t(2, p);
    for (int i = 0; i <= p; ++i)
        t.set_coord(Exponent{p - i, i},
                    k[static_cast<std::size_t>(i)] / Rational(binomial_int(p, i)));
    return t;
}

enum class ShearKind { upper, lower };

// Closed-form shear action on planar coordinates, independent of gl_action:
// for the upper shear [[1,z],[0,1]],  K'_i = sum_{j>=i} C(j,i)     K_j z^(j-i);
// for the lower shear [[1,0],[z,1]],  K'_i = sum_{j<=i} C(p-j,p-i) K_j z^(i-j).
inline SymTensor shear_expansion_reference(ShearKind kind, const Rational& z,
                                           const SymTensor& t) {
    if (t.dim() != 2) throw DimensionMismatch("shear_expansion_reference: dim != 2");
    const int p = t.rank();
    const std::vector<Rational> k = planar_coords(t);
    std::vector<Rational> out(static_cast<std::size_t>(p) + 1, Rational(0));
    for (int i = 0; i <= p; ++i) {
        Rational acc(0);
        if (kind == ShearKind::upper) {
            for (int j = i; j <= p; ++j)
                acc += Rational(binomial_int(j, i)) * k[static_cast<std::size_t>(j)] *
                       pow_rational(z, j - i);
        } else {
            for (int j = 0; j <= i; ++j)
                acc += Rational(binomial_int(p - j, p - i)) * k[static_cast<std::size_t>(j)] *
                       pow_rational(z, i - j);
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return from_planar_coords(out);
}

// Last planar coordinate of phi acting on e1^(sym p/2) (sym) e2^(sym p/2);
// equals (phi_21 * phi_22)^(p/2).
inline Rational middle_term_coordinate(const Mat& phi, int p) {
    if (phi.dim() != 2) throw DimensionMismatch("middle_term_coordinate: dim != 2");
    if (p < 0 || p % 2 != 0) throw BadParameter("middle_term_coordinate: p must be even");
    return pow_rational(phi.at(1, 0) * phi.at(1, 1), p / 2);
}

// sum_{j=0}^{i} C(-p/2, i-j) * C(p/2, j) with generalized binomials; vanishes
// for i >= 1 and equals 1 at i = 0 (convolution identity), which downstream
// cancellation arguments rely on.
inline Rational vandermonde_sum(int p, int i) {
    if (i < 0) throw BadParameter("vandermonde_sum: i < 0");
    const Rational half_p = make_rational(p, 2);
    Rational acc(0);
    for (int j = 0; j <= i; ++j)
        acc += binomial_general(-half_p, i - j) * binomial_general(half_p, j);
    return acc;
}

} // namespace tenval

#endif
