#ifndef TENVAL_POLYTOPE_HPP
#define TENVAL_POLYTOPE_HPP

// Convex polytopes with the origin in the interior, in exact rational
// arithmetic. Facet normals are stored unnormalized with |N_F| equal to the
// facet's (n-1)-volume, so every boundary integral downstream stays rational;
// unit normals are never materialized. General vertex input is supported for
// n <= 3; boxes, crosspolytopes, double pyramids and simplices carry
// closed-form facet structure in any dimension.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace tenval {

struct Facet {
    Vec normal;                           // outward, |normal| = (n-1)-volume
    Rational support;                     // h_P(normal), strictly positive
    std::vector<int> vertex_ids;          // cycle for n = 3, sorted otherwise
    std::vector<std::vector<int>> pieces; // simplex decomposition, n ids each
};

struct BoundarySimplex {
    std::vector<Vec> points; // n points spanning an (n-1)-simplex on a facet
    Vec area_normal;         // outward, |area_normal| = H^{n-1}(simplex)
    Rational support;        // h_P(area_normal)
};

struct SurfaceAtom {
    Vec direction;   // unnormalized outward facet normal N_F
    Rational weight; // h_P(N_F)^{1-p}; the atom's rank-p mass is weight * N_F^(sym p)
};

struct DiscreteSurfaceMeasure {
    int dim = 0;
    int p = 0;
    std::vector<SurfaceAtom> atoms;
};

// Generalized cross product of dim-1 vectors in R^dim (cofactor expansion);
// the wedge of the edge vectors of an (n-1)-simplex has length (n-1)! times
// the simplex's (n-1)-volume.
inline Vec wedge(int dim, const std::vector<Vec>& edges) {
    if (static_cast<int>(edges.size()) != dim - 1)
        throw DimensionMismatch("wedge: need dim-1 edge vectors");
    Vec out(dim);
    for (int k = 0; k < dim; ++k) {
        Mat minor(dim - 1);
        for (int r = 0; r < dim - 1; ++r) {
            if (edges[static_cast<std::size_t>(r)].dim() != dim)
                throw DimensionMismatch("wedge: edge dimension mismatch");
            int cc = 0;
            for (int c = 0; c < dim; ++c)
                if (c != k) minor.at(r, cc++) = edges[static_cast<std::size_t>(r)][c];
        }
        out[k] = (k % 2 == 0 ? 1 : -1) * minor.det();
    }
    return out;
}

// Outward area normal of the (n-1)-simplex spanned by pts, oriented away from
// the origin; valid only while the origin avoids the simplex's hyperplane.
inline std::pair<Vec, Rational> oriented_area_normal(const std::vector<Vec>& pts) {
    const int n = pts.at(0).dim();
    std::vector<Vec> edges;
    for (std::size_t i = 1; i < pts.size(); ++i) edges.push_back(pts[i] - pts[0]);
    Vec raw = wedge(n, edges);
    if (raw.is_zero()) throw NotFullDimensional("degenerate boundary simplex");
    Vec normal = make_rational(1, factorial(n - 1)) * raw;
    Rational h = normal.dot(pts[0]);
    if (h == 0) throw OriginNotInterior("origin lies on a facet hyperplane");
    if (h < 0) {
        normal = -normal;
        h = -h;
    }
    return {normal, h};
}

class Polytope;
Polytope make_box(std::vector<Rational> neg, std::vector<Rational> pos);
Polytope make_crosspolytope(std::vector<Rational> neg, std::vector<Rational> pos);

namespace detail {

inline Rational cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; returns the hull in counterclockwise order
// starting from the lexicographically smallest vertex, collinear points
// dropped. Input must be deduplicated and sorted.
inline std::vector<Vec> hull_2d(const std::vector<Vec>& pts) {
    const std::size_t m = pts.size();
    std::vector<Vec> lower, upper;
    for (const auto& p : pts) {
        while (lower.size() >= 2 &&
               cross2(lower[lower.size() - 2], lower.back(), p) <= 0)
            lower.pop_back();
        lower.push_back(p);
    }
    for (std::size_t i = m; i-- > 0;) {
        const auto& p = pts[i];
        while (upper.size() >= 2 &&
               cross2(upper[upper.size() - 2], upper.back(), p) <= 0)
            upper.pop_back();
        upper.push_back(p);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

} // namespace detail

class Polytope {
public:
    enum class Family { general, box, crosspolytope };

    static Polytope from_vertices(int dim, std::vector<Vec> points);

    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    Family family() const { return family_; }

    Rational support(const Vec& x) const {
        if (x.dim() != dim_) throw DimensionMismatch("support: dimension mismatch");
        Rational best = vertices_.at(0).dot(x);
        for (std::size_t i = 1; i < vertices_.size(); ++i) {
            Rational v = vertices_[i].dot(x);
            if (v > best) best = v;
        }
        return best;
    }

    bool contains(const Vec& x) const {
        if (x.dim() != dim_) throw DimensionMismatch("contains: dimension mismatch");
        for (const auto& f : facets_)
            if (f.normal.dot(x) > f.support) return false;
        return true;
    }

    std::vector<BoundarySimplex> boundary_triangulation() const {
        std::vector<BoundarySimplex> out;
        for (const auto& f : facets_)
            for (const auto& piece : f.pieces) {
                BoundarySimplex t;
                for (int id : piece) t.points.push_back(vertices_.at(static_cast<std::size_t>(id)));
                if (dim_ == 1) {
                    t.area_normal = f.normal;
                    t.support = f.support;
                } else {
                    auto [normal, h] = oriented_area_normal(t.points);
                    // orient with the facet, not away from the origin
                    if (normal.dot(f.normal) < 0) {
                        normal = -normal;
                        h = -h;
                    }
                    t.area_normal = normal;
                    t.support = h;
                }
                out.push_back(std::move(t));
            }
        return out;
    }

    Polytope polar() const {
        if (family_ == Family::box || family_ == Family::crosspolytope) {
            std::vector<Rational> neg, pos;
            for (const auto& a : neg_) neg.push_back(Rational(1) / a);
            for (const auto& b : pos_) pos.push_back(Rational(1) / b);
            return family_ == Family::box ? make_crosspolytope(std::move(neg), std::move(pos))
                                          : make_box(std::move(neg), std::move(pos));
        }
        if (dim_ > 3)
            throw UnsupportedDimension("polar: general polytopes supported only for dim <= 3");
        std::vector<Vec> verts;
        for (const auto& f : facets_) verts.push_back((Rational(1) / f.support) * f.normal);
        return from_vertices(dim_, std::move(verts));
    }

    bool same_vertex_set(const Polytope& o) const {
        if (dim_ != o.dim_) return false;
        std::vector<Vec> a = vertices_, b = o.vertices_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    friend Polytope linear_image(const Mat& phi, const Polytope& P);
    friend Polytope make_box(std::vector<Rational> neg, std::vector<Rational> pos);
    friend Polytope make_crosspolytope(std::vector<Rational> neg, std::vector<Rational> pos);
    friend Polytope make_double_pyramid(const Rational& a, const Rational& b,
                                        const Rational& c, const Rational& d,
                                        const Vec& x, const Vec& y);
    friend Polytope make_simplex(int n, const Rational& scale);

private:
    Polytope() = default;

    static Polytope from_parts(int dim, std::vector<Vec> vertices, std::vector<Facet> facets,
                               Family family, std::vector<Rational> neg,
                               std::vector<Rational> pos) {
        Polytope p;
        p.dim_ = dim;
        p.vertices_ = std::move(vertices);
        p.facets_ = std::move(facets);
        p.family_ = family;
        p.neg_ = std::move(neg);
        p.pos_ = std::move(pos);
        for (const auto& f : p.facets_)
            if (f.support <= 0) throw OriginNotInterior("facet with nonpositive support");
        return p;
    }

    static Polytope build_1d(const std::vector<Vec>& sorted_pts);
    static Polytope build_2d(const std::vector<Vec>& sorted_pts);
    static Polytope build_3d(const std::vector<Vec>& sorted_pts);

    int dim_ = 0;
    std::vector<Vec> vertices_;
    std::vector<Facet> facets_;
    Family family_ = Family::general;
    std::vector<Rational> neg_, pos_; // box/crosspolytope per-axis extents
};

inline Polytope Polytope::build_1d(const std::vector<Vec>& pts) {
    const Vec& lo = pts.front();
    const Vec& hi = pts.back();
    if (lo == hi) throw NotFullDimensional("from_vertices: all points equal");
    std::vector<Facet> fs(2);
    fs[0].normal = Vec{Rational(-1)};
    fs[0].support = -lo[0];
    fs[0].vertex_ids = {0};
    fs[0].pieces = {{0}};
    fs[1].normal = Vec{Rational(1)};
    fs[1].support = hi[0];
    fs[1].vertex_ids = {1};
    fs[1].pieces = {{1}};
    return from_parts(1, {lo, hi}, std::move(fs), Family::general, {}, {});
}

inline Polytope Polytope::build_2d(const std::vector<Vec>& pts) {
    std::vector<Vec> hull = detail::hull_2d(pts);
    if (hull.size() < 3) throw NotFullDimensional("from_vertices: points are collinear");
    const int m = static_cast<int>(hull.size());
    std::vector<Facet> fs;
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        Vec d = hull[static_cast<std::size_t>(j)] - hull[static_cast<std::size_t>(i)];
        Facet f;
        f.normal = Vec{d[1], -d[0]}; // outward for a counterclockwise cycle
        f.support = f.normal.dot(hull[static_cast<std::size_t>(i)]);
        f.vertex_ids = {i, j};
        f.pieces = {{i, j}};
        fs.push_back(std::move(f));
    }
    return from_parts(2, std::move(hull), std::move(fs), Family::general, {}, {});
}

inline Polytope Polytope::build_3d(const std::vector<Vec>& pts) {
    const int m = static_cast<int>(pts.size());
    {
        std::vector<std::vector<Rational>> rows;
        for (int i = 1; i < m; ++i) {
            Vec d = pts[static_cast<std::size_t>(i)] - pts[0];
            rows.push_back({d[0], d[1], d[2]});
        }
        if (exact_rank(rows) < 3)
            throw NotFullDimensional("from_vertices: points span less than 3 dimensions");
    }

    // Supporting planes by brute force over point triples, keyed by the
    // primitive integer form of (outward normal, offset).
    std::map<std::vector<Int>, std::pair<Vec, Rational>> planes;
    auto record = [&](Vec n, Rational h) {
        Int lcm(1);
        for (int k = 0; k < 3; ++k) lcm = boost::multiprecision::lcm(lcm, den(n[k]));
        lcm = boost::multiprecision::lcm(lcm, den(h));
        std::vector<Int> key = {num(n[0]) * (lcm / den(n[0])), num(n[1]) * (lcm / den(n[1])),
                                num(n[2]) * (lcm / den(n[2])), num(h) * (lcm / den(h))};
        Int g(0);
        for (const auto& v : key) g = boost::multiprecision::gcd(g, abs(v));
        for (auto& v : key) v /= g;
        planes.emplace(std::move(key), std::make_pair(std::move(n), std::move(h)));
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                Vec n = wedge(3, {pts[static_cast<std::size_t>(j)] - pts[static_cast<std::size_t>(i)],
                                  pts[static_cast<std::size_t>(k)] - pts[static_cast<std::size_t>(i)]});
                if (n.is_zero()) continue;
                Rational h = n.dot(pts[static_cast<std::size_t>(i)]);
                bool above = false, below = false;
                for (int q = 0; q < m && !(above && below); ++q) {
                    Rational s = n.dot(pts[static_cast<std::size_t>(q)]) - h;
                    if (s > 0) above = true;
                    if (s < 0) below = true;
                }
                if (!above)
                    record(n, h);
                else if (!below)
                    record(-n, -h);
            }

    // Assemble each facet: order its points into a cycle via a planar hull.
    struct ProtoFacet {
        Vec normal;
        Rational support;
        std::vector<Vec> cycle;
    };
    std::vector<ProtoFacet> protos;
    std::set<Vec> vertex_set;
    for (const auto& [key, plane] : planes) {
        const auto& [n, h] = plane;
        std::vector<Vec> on;
        for (const auto& q : pts)
            if (n.dot(q) == h) on.push_back(q);
        Vec u = on.at(1) - on.at(0);
        Vec w = wedge(3, {n, u}); // in-plane direction orthogonal to u
        std::vector<Vec> flat;
        for (const auto& q : on) flat.push_back(Vec{u.dot(q - on[0]), w.dot(q - on[0])});
        std::sort(flat.begin(), flat.end());
        std::vector<Vec> cycle2 = detail::hull_2d(flat);
        if (cycle2.size() < 3) continue; // plane supports only an edge or vertex

        std::map<Vec, Vec> back;
        for (std::size_t t = 0; t < on.size(); ++t)
            back.emplace(Vec{u.dot(on[t] - on[0]), w.dot(on[t] - on[0])}, on[t]);
        ProtoFacet pf;
        pf.normal = Vec(3);
        for (const auto& f2 : cycle2) pf.cycle.push_back(back.at(f2));
        // polygon vector area; orient the cycle outward
        Vec area(3);
        for (std::size_t t = 0; t < pf.cycle.size(); ++t) {
            const Vec& a = pf.cycle[t];
            const Vec& b = pf.cycle[(t + 1) % pf.cycle.size()];
            area = area + wedge(3, {a, b});
        }
        area = make_rational(1, 2) * area;
        if (area.dot(n) < 0) {
            std::reverse(pf.cycle.begin(), pf.cycle.end());
            area = -area;
        }
        pf.normal = area;
        pf.support = area.dot(pf.cycle[0]);
        for (const auto& v : pf.cycle) vertex_set.insert(v);
        protos.push_back(std::move(pf));
    }
    if (protos.size() < 4) throw NotFullDimensional("from_vertices: degenerate hull");

    std::vector<Vec> verts(vertex_set.begin(), vertex_set.end());
    std::map<Vec, int> id_of;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        id_of.emplace(verts[static_cast<std::size_t>(i)], i);

    std::sort(protos.begin(), protos.end(), [](const ProtoFacet& a, const ProtoFacet& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.support < b.support;
    });
    std::vector<Facet> fs;
    for (auto& pf : protos) {
        Facet f;
        f.normal = pf.normal;
        f.support = pf.support;
        for (const auto& v : pf.cycle) f.vertex_ids.push_back(id_of.at(v));
        std::size_t lo = 0;
        for (std::size_t t = 1; t < f.vertex_ids.size(); ++t)
            if (f.vertex_ids[t] < f.vertex_ids[lo]) lo = t;
        std::rotate(f.vertex_ids.begin(), f.vertex_ids.begin() + static_cast<long>(lo),
                    f.vertex_ids.end());
        for (std::size_t t = 1; t + 1 < f.vertex_ids.size(); ++t)
            f.pieces.push_back({f.vertex_ids[0], f.vertex_ids[t], f.vertex_ids[t + 1]});
        fs.push_back(std::move(f));
    }
    return from_parts(3, std::move(verts), std::move(fs), Family::general, {}, {});
}

inline Polytope Polytope::from_vertices(int dim, std::vector<Vec> points) {
    if (dim < 1) throw BadParameter("from_vertices: dim < 1");
    if (dim > 3)
        throw UnsupportedDimension("from_vertices: general hulls supported only for dim <= 3");
    for (const auto& p : points)
        if (p.dim() != dim) throw DimensionMismatch("from_vertices: point dimension mismatch");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (static_cast<int>(points.size()) < dim + 1)
        throw NotFullDimensional("from_vertices: need at least dim+1 distinct points");
    switch (dim) {
        case 1: return build_1d(points);
        case 2: return build_2d(points);
        default: return build_3d(points);
    }
}

inline Rational volume(const Polytope& P) {
    // cone decomposition from the origin: each facet cone has volume h/n
    // under the area-scaled normal convention
    Rational acc(0);
    for (const auto& f : P.facets()) acc += f.support;
    return acc / P.dim();
}

inline Polytope linear_image(const Mat& phi, const Polytope& P) {
    if (phi.dim() != P.dim()) throw DimensionMismatch("linear_image: dimension mismatch");
    Rational det = phi.det();
    if (det == 0) throw SingularMatrix("linear_image: singular matrix");
    Rational adet = det < 0 ? -det : det;

    Polytope out;
    out.dim_ = P.dim();
    for (const auto& v : P.vertices()) out.vertices_.push_back(phi.apply(v));
    // area normals transform by the cofactor matrix |det| phi^{-t}
    Mat inv_t = phi.inverse_transpose();
    for (const auto& f : P.facets()) {
        Facet g;
        g.normal = adet * inv_t.apply(f.normal);
        g.support = adet * f.support;
        g.vertex_ids = f.vertex_ids;
        g.pieces = f.pieces;
        out.facets_.push_back(std::move(g));
    }
    // a diagonal map keeps box/crosspolytope structure (polar stays closed-form)
    bool diagonal = true;
    for (int r = 0; r < phi.dim() && diagonal; ++r)
        for (int c = 0; c < phi.dim() && diagonal; ++c)
            if (r != c && phi.at(r, c) != 0) diagonal = false;
    if (diagonal && (P.family_ == Polytope::Family::box ||
                     P.family_ == Polytope::Family::crosspolytope)) {
        out.family_ = P.family_;
        out.neg_.resize(P.neg_.size());
        out.pos_.resize(P.pos_.size());
        for (int i = 0; i < P.dim(); ++i) {
            Rational di = phi.at(i, i);
            if (di > 0) {
                out.neg_[static_cast<std::size_t>(i)] = di * P.neg_[static_cast<std::size_t>(i)];
                out.pos_[static_cast<std::size_t>(i)] = di * P.pos_[static_cast<std::size_t>(i)];
            } else {
                out.neg_[static_cast<std::size_t>(i)] = -di * P.pos_[static_cast<std::size_t>(i)];
                out.pos_[static_cast<std::size_t>(i)] = -di * P.neg_[static_cast<std::size_t>(i)];
            }
        }
    }
    return out;
}

inline DiscreteSurfaceMeasure surface_area_measure(const Polytope& P, int p) {
    if (p < 0) throw BadParameter("surface_area_measure: p < 0");
    DiscreteSurfaceMeasure mu;
    mu.dim = P.dim();
    mu.p = p;
    for (const auto& f : P.facets())
        mu.atoms.push_back({f.normal, pow_rational(f.support, 1 - p)});
    return mu;
}

namespace detail {

inline void check_extents(const std::vector<Rational>& neg, const std::vector<Rational>& pos) {
    if (neg.empty() || neg.size() != pos.size())
        throw BadParameter("family: extent lists empty or mismatched");
    for (const auto& v : neg)
        if (v <= 0) throw BadParameter("family: nonpositive parameter");
    for (const auto& v : pos)
        if (v <= 0) throw BadParameter("family: nonpositive parameter");
}

// Membership of q in the crosspolytope conv{-neg_i e_i, pos_i e_i}.
inline bool crosspolytope_contains(const std::vector<Rational>& neg,
                                   const std::vector<Rational>& pos, const Vec& q,
                                   bool strictly) {
    Rational acc(0);
    for (int i = 0; i < q.dim(); ++i) {
        Rational up = q[i] / pos[static_cast<std::size_t>(i)];
        Rational dn = -q[i] / neg[static_cast<std::size_t>(i)];
        acc += up > dn ? up : dn;
    }
    return strictly ? acc < 1 : acc <= 1;
}

} // namespace detail

inline Polytope make_box(std::vector<Rational> neg, std::vector<Rational> pos) {
    detail::check_extents(neg, pos);
    const int n = static_cast<int>(neg.size());

    std::vector<Vec> verts;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Vec v(n);
        for (int i = 0; i < n; ++i)
            v[i] = (mask >> i) & 1 ? pos[static_cast<std::size_t>(i)]
                                   : -neg[static_cast<std::size_t>(i)];
        verts.push_back(std::move(v));
    }
    std::sort(verts.begin(), verts.end());
    std::map<Vec, int> id_of;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        id_of.emplace(verts[static_cast<std::size_t>(i)], i);

    std::vector<Facet> fs;
    for (int axis = 0; axis < n; ++axis)
        for (int side = 0; side < 2; ++side) {
            Rational area(1);
            for (int j = 0; j < n; ++j)
                if (j != axis)
                    area *= neg[static_cast<std::size_t>(j)] + pos[static_cast<std::size_t>(j)];
            Facet f;
            f.normal = Vec(n);
            f.normal[axis] = side ? area : -area;
            f.support = area * (side ? pos[static_cast<std::size_t>(axis)]
                                     : neg[static_cast<std::size_t>(axis)]);
            Rational fixed = side ? pos[static_cast<std::size_t>(axis)]
                                  : -neg[static_cast<std::size_t>(axis)];
            for (int i = 0; i < static_cast<int>(verts.size()); ++i)
                if (verts[static_cast<std::size_t>(i)][axis] == fixed)
                    f.vertex_ids.push_back(i);
            // staircase (Kuhn) triangulation of the (n-1)-dimensional face
            std::vector<int> free_axes;
            for (int j = 0; j < n; ++j)
                if (j != axis) free_axes.push_back(j);
            std::vector<int> perm = free_axes;
            std::sort(perm.begin(), perm.end());
            do {
                Vec cur(n);
                cur[axis] = fixed;
                for (int j : free_axes) cur[j] = -neg[static_cast<std::size_t>(j)];
                std::vector<int> piece = {id_of.at(cur)};
                for (int j : perm) {
                    cur[j] = pos[static_cast<std::size_t>(j)];
                    piece.push_back(id_of.at(cur));
                }
                f.pieces.push_back(std::move(piece));
            } while (std::next_permutation(perm.begin(), perm.end()));
            fs.push_back(std::move(f));
        }
    return Polytope::from_parts(n, std::move(verts), std::move(fs), Polytope::Family::box,
                                std::move(neg), std::move(pos));
}

inline Polytope make_crosspolytope(std::vector<Rational> neg, std::vector<Rational> pos) {
    detail::check_extents(neg, pos);
    const int n = static_cast<int>(neg.size());

    std::vector<Vec> verts;
    for (int i = 0; i < n; ++i) {
        Vec lo(n), hi(n);
        lo[i] = -neg[static_cast<std::size_t>(i)];
        hi[i] = pos[static_cast<std::size_t>(i)];
        verts.push_back(std::move(lo));
        verts.push_back(std::move(hi));
    }
    std::sort(verts.begin(), verts.end());
    std::map<Vec, int> id_of;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        id_of.emplace(verts[static_cast<std::size_t>(i)], i);

    std::vector<Facet> fs;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<Vec> simplex;
        for (int i = 0; i < n; ++i) {
            Vec v(n);
            v[i] = (mask >> i) & 1 ? pos[static_cast<std::size_t>(i)]
                                   : -neg[static_cast<std::size_t>(i)];
            simplex.push_back(std::move(v));
        }
        auto [normal, h] = oriented_area_normal(simplex);
        Facet f;
        f.normal = std::move(normal);
        f.support = std::move(h);
        std::vector<int> ids;
        for (const auto& v : simplex) ids.push_back(id_of.at(v));
        std::sort(ids.begin(), ids.end());
        f.vertex_ids = ids;
        f.pieces = {std::move(ids)};
        fs.push_back(std::move(f));
    }
    std::sort(fs.begin(), fs.end(), [](const Facet& a, const Facet& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.support < b.support;
    });
    return Polytope::from_parts(n, std::move(verts), std::move(fs),
                                Polytope::Family::crosspolytope, std::move(neg), std::move(pos));
}

// [B, -c(x,1), d(y,1)]: the double pyramid over the axis crosspolytope
// B = conv{-a e_i, b e_i} in e_n-perp with apexes -c(x,1) below and d(y,1)
// above. Validity (the hull meets e_n-perp in exactly B) is equivalent to
// (cd/(c+d))(y - x) lying in B, checked exactly.
inline Polytope make_double_pyramid(const Rational& a, const Rational& b, const Rational& c,
                                    const Rational& d, const Vec& x, const Vec& y) {
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0)
        throw BadParameter("double_pyramid: nonpositive parameter");
    const int base_dim = x.dim();
    if (base_dim < 1 || y.dim() != base_dim)
        throw DimensionMismatch("double_pyramid: tilt vector dimensions");
    const int n = base_dim + 1;
    std::vector<Rational> neg(static_cast<std::size_t>(base_dim), a);
    std::vector<Rational> pos(static_cast<std::size_t>(base_dim), b);

    if (x.is_zero() && y.is_zero()) {
        neg.push_back(c);
        pos.push_back(d);
        return make_crosspolytope(std::move(neg), std::move(pos));
    }

    const bool strict_needed = n > 3;
    Vec meet = (c * d / (c + d)) * (y - x);
    if (!detail::crosspolytope_contains(neg, pos, meet, strict_needed)) {
        if (n > 3 && detail::crosspolytope_contains(neg, pos, meet, false))
            throw UnsupportedDimension(
                "double_pyramid: tangential apex line unsupported for dim > 3");
        throw InvalidDoublePyramid("double_pyramid: apex tilt violates the base section");
    }

    auto lift = [&](const Vec& base_pt, const Rational& last) {
        Vec v(n);
        for (int i = 0; i < base_dim; ++i) v[i] = base_pt[i];
        v[n - 1] = last;
        return v;
    };
    std::vector<Vec> verts;
    for (int i = 0; i < base_dim; ++i) {
        Vec lo(base_dim), hi(base_dim);
        lo[i] = -a;
        hi[i] = b;
        verts.push_back(lift(lo, Rational(0)));
        verts.push_back(lift(hi, Rational(0)));
    }
    Vec apex_dn = lift((-c) * x, -c);
    Vec apex_up = lift(d * y, d);
    verts.push_back(apex_dn);
    verts.push_back(apex_up);

    if (n <= 3) return Polytope::from_vertices(n, std::move(verts));

    std::sort(verts.begin(), verts.end());
    std::map<Vec, int> id_of;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        id_of.emplace(verts[static_cast<std::size_t>(i)], i);
    std::vector<Facet> fs;
    for (int mask = 0; mask < (1 << base_dim); ++mask)
        for (int side = 0; side < 2; ++side) {
            std::vector<Vec> simplex;
            for (int i = 0; i < base_dim; ++i) {
                Vec v(base_dim);
                v[i] = (mask >> i) & 1 ? b : -a;
                simplex.push_back(lift(v, Rational(0)));
            }
            simplex.push_back(side ? apex_up : apex_dn);
            auto [normal, h] = oriented_area_normal(simplex);
            Facet f;
            f.normal = std::move(normal);
            f.support = std::move(h);
            std::vector<int> ids;
            for (const auto& v : simplex) ids.push_back(id_of.at(v));
            std::sort(ids.begin(), ids.end());
            f.vertex_ids = ids;
            f.pieces = {std::move(ids)};
            fs.push_back(std::move(f));
        }
    std::sort(fs.begin(), fs.end(), [](const Facet& a_, const Facet& b_) {
        if (a_.normal != b_.normal) return a_.normal < b_.normal;
        return a_.support < b_.support;
    });
    return Polytope::from_parts(n, std::move(verts), std::move(fs), Polytope::Family::general,
                                {}, {});
}

inline Polytope make_straight_double_pyramid(int n, const Rational& a, const Rational& b,
                                             const Rational& c, const Rational& d) {
    if (n < 2) throw BadParameter("straight_double_pyramid: dim < 2");
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0)
        throw BadParameter("straight_double_pyramid: nonpositive parameter");
    std::vector<Rational> neg(static_cast<std::size_t>(n - 1), a);
    std::vector<Rational> pos(static_cast<std::size_t>(n - 1), b);
    neg.push_back(c);
    pos.push_back(d);
    return make_crosspolytope(std::move(neg), std::move(pos));
}

inline Polytope make_straight_triangle(const Rational& a, const Rational& b, const Rational& c,
                                       const Rational& d) {
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0)
        throw BadParameter("straight_triangle: nonpositive parameter");
    return Polytope::from_vertices(2, {Vec{-a, -c}, Vec{b, -c}, Vec{Rational(0), d}});
}

// Regular-ish simplex: scale * (conv{e_1..e_n, 0} - barycenter); the origin is
// the barycenter, hence interior.
inline Polytope make_simplex(int n, const Rational& scale) {
    if (n < 1) throw BadParameter("simplex: dim < 1");
    if (scale <= 0) throw BadParameter("simplex: nonpositive parameter");
    Vec g(n);
    for (int i = 0; i < n; ++i) g[i] = make_rational(1, n + 1);
    std::vector<Vec> verts;
    verts.push_back(scale * (-g));
    for (int i = 0; i < n; ++i) verts.push_back(scale * (Vec::unit(n, i) - g));
    if (n <= 3) return Polytope::from_vertices(n, std::move(verts));

    std::sort(verts.begin(), verts.end());
    std::vector<Facet> fs;
    for (std::size_t drop = 0; drop < verts.size(); ++drop) {
        std::vector<Vec> simplex;
        std::vector<int> ids;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (i != drop) {
                simplex.push_back(verts[i]);
                ids.push_back(static_cast<int>(i));
            }
        auto [normal, h] = oriented_area_normal(simplex);
        Facet f;
        f.normal = std::move(normal);
        f.support = std::move(h);
        f.vertex_ids = ids;
        f.pieces = {std::move(ids)};
        fs.push_back(std::move(f));
    }
    std::sort(fs.begin(), fs.end(), [](const Facet& a, const Facet& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.support < b.support;
    });
    return Polytope::from_parts(n, std::move(verts), std::move(fs), Polytope::Family::general,
                                {}, {});
}

struct PyramidFamily {
    Polytope p, q, u, i;
};

// Four double pyramids over the common base conv{-a e_i, b e_i} satisfying
// P u Q = U and P n Q = I:
//   P = [B, -c(x,1), r(y,1)]   Q = [B, -r(y,1), d(y,1)]
//   U = [B, -c(x,1), d(y,1)]   I = [B, -r(y,1), r(y,1)]
// Beyond the validity of all four, the union identity needs the apex of Q to
// sit inside P's lower cone: rc(x-y)/(c-r) in B when r < c (x = y when r = c).
inline PyramidFamily pyramid_family(const Rational& a, const Rational& b, const Rational& c,
                                    const Rational& d, const Rational& r, const Vec& x,
                                    const Vec& y) {
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0 || r <= 0)
        throw BadParameter("pyramid_family: nonpositive parameter");
    if (r > c || r > d)
        throw InvalidDoublePyramid("pyramid_family: requires r <= min(c, d)");
    const int base_dim = x.dim();
    if (y.dim() != base_dim) throw DimensionMismatch("pyramid_family: tilt dimensions");
    std::vector<Rational> neg(static_cast<std::size_t>(base_dim), a);
    std::vector<Rational> pos(static_cast<std::size_t>(base_dim), b);
    if (r == c) {
        if (x != y)
            throw InvalidDoublePyramid("pyramid_family: r = c forces equal tilts");
    } else {
        Vec nest = (r * c / (c - r)) * (x - y);
        if (!detail::crosspolytope_contains(neg, pos, nest, base_dim + 1 > 3))
            throw InvalidDoublePyramid("pyramid_family: lower apex of Q escapes P");
    }
    return PyramidFamily{make_double_pyramid(a, b, c, r, x, y),
                         make_double_pyramid(a, b, r, d, y, y),
                         make_double_pyramid(a, b, c, d, x, y),
                         make_double_pyramid(a, b, r, r, y, y)};
}

} // namespace tenval

#endif
