#pragma once

#include <tenval/polytope.hpp>
#include <tenval/symtensor.hpp>

#include <string>
#include <vector>

namespace tenval {

// Sum of all products of `degree` factors drawn (with repetition) from
// `points`, under the symmetric product — the complete homogeneous symmetric
// polynomial evaluated on the points.  Computed by dynamic programming over
// one point at a time.  The moment integral of a simplex is proportional to
// this sum over its vertices.
inline SymTensor complete_homogeneous(int degree, const std::vector<Vec>& points) {
    if (degree < 0) throw BadParameter("complete_homogeneous: negative degree");
    if (points.empty()) throw BadParameter("complete_homogeneous: no points");
    const int n = points.front().dim();
    std::vector<SymTensor> acc;
    acc.reserve(static_cast<std::size_t>(degree) + 1);
    acc.push_back(SymTensor::scalar(n, 1));
    for (int j = 1; j <= degree; ++j) acc.emplace_back(n, j);
    for (const auto& v : points) {
        if (v.dim() != n) throw DimensionMismatch("complete_homogeneous: mixed dimensions");
        std::vector<SymTensor> next = acc;
        for (int j = 1; j <= degree; ++j)
            for (int a = 1; a <= j; ++a)
                next[static_cast<std::size_t>(j)] =
                    next[static_cast<std::size_t>(j)] +
                    sym_product(power(v, a), acc[static_cast<std::size_t>(j - a)]);
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(degree)];
}

// Exact moment integral of x^(sym p) over the full-dimensional simplex
// spanned by dim+1 vertices:
//
//   integral = vol * n! p! / (n+p)! * complete_homogeneous(p, vertices).
//
// Spot checks: p = 0 gives the volume; p = 1 gives volume times centroid.
inline SymTensor simplex_moment_integral(const std::vector<Vec>& vertices, int p) {
    if (p < 0) throw BadParameter("simplex_moment_integral: p < 0");
    if (vertices.empty()) throw BadParameter("simplex_moment_integral: no vertices");
    const int n = vertices.front().dim();
    if (static_cast<int>(vertices.size()) != n + 1)
        throw DimensionMismatch("simplex_moment_integral: need dim+1 vertices");
    Mat edges(n);
    for (int i = 0; i < n; ++i) {
        Vec d = vertices[static_cast<std::size_t>(i + 1)] - vertices[0];
        for (int j = 0; j < n; ++j) edges.at(i, j) = d[j];
    }
    Rational vol = edges.det();
    if (vol < 0) vol = -vol;
    if (vol == 0) throw NotFullDimensional("simplex_moment_integral: flat simplex");
    vol = vol / factorial(n);
    const Rational scale =
        vol * Rational(factorial(n) * factorial(p)) / Rational(factorial(n + p));
    return scale * complete_homogeneous(p, vertices);
}

// Moment tensor (n+p) * integral of x^(sym p) over P, computed by fanning the
// boundary triangulation into cones at the origin (interior, so the cones tile
// P) and summing the closed-form simplex moments.
inline SymTensor moment_tensor(const Polytope& P, int p) {
    if (p < 0) throw BadParameter("moment_tensor: p < 0");
    const int n = P.dim();
    SymTensor acc(n, p);
    for (const auto& t : P.boundary_triangulation()) {
        std::vector<Vec> cone;
        cone.reserve(t.points.size() + 1);
        cone.push_back(Vec::zero(n));
        cone.insert(cone.end(), t.points.begin(), t.points.end());
        acc = acc + simplex_moment_integral(cone, p);
    }
    return Rational(n + p) * acc;
}

// Surface tensor: sum over facets of h(N_F)^(1-p) * N_F^(sym p), i.e. the
// p-th power-of-normal integral against the support-weighted surface measure.
// Vanishes for p = 1 (the area normals of a closed boundary sum to zero).
inline SymTensor lp_surface_tensor(const Polytope& P, int p) {
    if (p < 0) throw BadParameter("lp_surface_tensor: p < 0");
    DiscreteSurfaceMeasure mu = surface_area_measure(P, p);
    SymTensor acc(P.dim(), p);
    for (const auto& atom : mu.atoms) acc = acc + atom.weight * power(atom.direction, p);
    return acc;
}

namespace detail {

// Shared facet-sum core of the boundary moment tensors.  Per boundary simplex
// T with area normal N, support h = h_P(N) and vertices w_1..w_n, the
// contribution of the integrand x^(sym r) (sym) u^(sym s) h(u)^(1-s) is
//
//   h^(1-s) * (n-1)! r! / (n-1+r)! * N'^(sym s) (sym) complete_homogeneous(r, w)
//
// where N' is the (optionally quarter-rotated) area normal.  The length |N|
// cancels between the unit-normal powers, the support normalization and the
// surface area of T, which keeps every coordinate rational.
inline SymTensor boundary_moment_sum(const Polytope& P, int r, int s, bool rotate_normal) {
    if (r < 0 || s < 0) throw BadParameter("boundary moment tensor: negative degree");
    const int n = P.dim();
    const Rational factor =
        Rational(factorial(n - 1) * factorial(r)) / Rational(factorial(n - 1 + r));
    const Mat rho = rotate_normal ? Mat::rotation_quarter() : Mat::identity(n);
    SymTensor acc(n, r + s);
    for (const auto& t : P.boundary_triangulation()) {
        const Vec slot = rotate_normal ? rho.apply(t.area_normal) : t.area_normal;
        const Rational w = factor * pow_rational(t.support, 1 - s);
        acc = acc + w * sym_product(power(slot, s), complete_homogeneous(r, t.points));
    }
    return acc;
}

} // namespace detail

// Boundary moment tensor: integral over the boundary of
// x^(sym r) (sym) u^(sym s) weighted by h_P(u)^(1-s), u the outer unit normal.
// Reduces to moment_tensor for s = 0 (divergence identity) and to
// lp_surface_tensor for r = 0.
inline SymTensor mrs(const Polytope& P, int r, int s) {
    return detail::boundary_moment_sum(P, r, s, false);
}

// Planar variant of mrs with the normal slot rotated a quarter turn: the
// tensor factor uses rho * u while the support weight still uses u itself.
inline SymTensor mrs_rho(const Polytope& P, int r, int s) {
    if (P.dim() != 2) throw DimensionMismatch("mrs_rho: defined only in dimension 2");
    return detail::boundary_moment_sum(P, r, s, true);
}

// Coefficients of the closed form for mrs_rho on straight double pyramids,
// with out-of-range binomial coefficients equal to zero.  For i != p the band
// p-i <= l <= i vanishes.
inline Rational m_coeff(int p, int i, int l) {
    if (p < 0 || i < 0 || i > p || l < 0 || l > p)
        throw BadParameter("m_coeff: need 0 <= i, l <= p");
    if (i == p) return l % 2 == 0 ? Rational(1) : Rational(-1);
    Int value = binomial_int(p - i - 1, l);
    Int corr = binomial_int(p - i - 1, l - i - 1);
    value += (i % 2 == 0) ? corr : -corr;
    return Rational(value);
}

// Closed form for mrs_rho(conv{-a e1, b e1, -c e2, d e2}, i, p-i), expressed
// in planar basis coordinates: coordinate l is
//
//   1/(i+1) * m_coeff(p,i,l) * [ (-1)^(i+l) a^(1+i-l) c^(1-p+i+l)
//                              +          b^(1+i-l) c^(1-p+i+l)
//                              + (-1)^p   a^(1+i-l) d^(1-p+i+l)
//                              + (-1)^(p+i+l) b^(1+i-l) d^(1-p+i+l) ].
//
// Independent of the facet-sum evaluation path; serves as its cross-check.
inline SymTensor double_pyramid_closed_form(const Rational& a, const Rational& b,
                                            const Rational& c, const Rational& d,
                                            int i, int p) {
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0)
        throw BadParameter("double_pyramid_closed_form: parameters must be positive");
    if (p < 0 || i < 0 || i > p)
        throw BadParameter("double_pyramid_closed_form: need 0 <= i <= p");
    auto sign = [](int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); };
    std::vector<Rational> coords(static_cast<std::size_t>(p) + 1, Rational(0));
    for (int l = 0; l <= p; ++l) {
        const Rational ai = pow_rational(a, 1 + i - l);
        const Rational bi = pow_rational(b, 1 + i - l);
        const Rational ci = pow_rational(c, 1 - p + i + l);
        const Rational di = pow_rational(d, 1 - p + i + l);
        const Rational bracket = sign(i + l) * ai * ci + bi * ci + sign(p) * ai * di +
                                 sign(p + i + l) * bi * di;
        coords[static_cast<std::size_t>(l)] =
            m_coeff(p, i, l) * bracket / Rational(i + 1);
    }
    return from_planar_coords(coords);
}

// ------------------------------------------------------------------
// Descriptors: a serializable name for one valuation, with optional
// conjugation by polarity on the input and a quarter rotation on the output.
// ------------------------------------------------------------------

enum class ValuationKind { moment, lp_normal, mrs, mrs_rho, euler, vol };

struct ValuationDescriptor {
    ValuationKind kind = ValuationKind::euler;
    int r = 0;
    int s = 0;
    bool polar_input = false;
    bool rho_output = false;

    // Tensor rank of the output.
    int rank() const {
        switch (kind) {
            case ValuationKind::euler:
            case ValuationKind::vol: return 0;
            default: return r + s;
        }
    }

    void validate(int dim) const {
        if (r < 0 || s < 0) throw BadParameter("descriptor: negative degree");
        switch (kind) {
            case ValuationKind::moment:
                if (s != 0) throw BadParameter("descriptor: moment requires s = 0");
                break;
            case ValuationKind::lp_normal:
                if (r != 0) throw BadParameter("descriptor: lp_normal requires r = 0");
                break;
            case ValuationKind::euler:
            case ValuationKind::vol:
                if (r != 0 || s != 0)
                    throw BadParameter("descriptor: scalar valuation requires r = s = 0");
                break;
            case ValuationKind::mrs_rho:
                if (dim != 2) throw DimensionMismatch("descriptor: mrs_rho requires dimension 2");
                break;
            case ValuationKind::mrs: break;
        }
        if (rho_output && dim != 2)
            throw DimensionMismatch("descriptor: rho_output requires dimension 2");
    }

    bool operator==(const ValuationDescriptor&) const = default;
};

// Scaling exponent: evaluate(desc, lambda * P) = lambda^deg * evaluate(desc, P)
// for rational lambda > 0.  Polar input flips the sign of the exponent.
inline int homogeneity_degree(const ValuationDescriptor& d, int dim) {
    int deg = 0;
    switch (d.kind) {
        case ValuationKind::euler: deg = 0; break;
        case ValuationKind::vol: deg = dim; break;
        default: deg = dim + d.r - d.s; break;
    }
    return d.polar_input ? -deg : deg;
}

inline SymTensor evaluate(const ValuationDescriptor& d, const Polytope& P) {
    d.validate(P.dim());
    const Polytope Q = d.polar_input ? P.polar() : P;
    SymTensor out(P.dim(), d.rank());
    switch (d.kind) {
        case ValuationKind::euler: out = SymTensor::scalar(P.dim(), 1); break;
        case ValuationKind::vol: out = SymTensor::scalar(P.dim(), volume(Q)); break;
        case ValuationKind::moment: out = moment_tensor(Q, d.r); break;
        case ValuationKind::lp_normal: out = lp_surface_tensor(Q, d.s); break;
        case ValuationKind::mrs: out = mrs(Q, d.r, d.s); break;
        case ValuationKind::mrs_rho: out = mrs_rho(Q, d.r, d.s); break;
    }
    if (d.rho_output) out = gl_action(Mat::rotation_quarter(), out);
    return out;
}

} // namespace tenval
