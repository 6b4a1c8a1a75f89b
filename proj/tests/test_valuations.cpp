#include <catch2/catch_amalgamated.hpp>

#include <tenval/valuations.hpp>

#include <vector>

using namespace tenval;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

Polytope unit_square() { return make_box({Q(1), Q(1)}, {Q(1), Q(1)}); }
Polytope unit_cube() { return make_box({Q(1), Q(1), Q(1)}, {Q(1), Q(1), Q(1)}); }

// A small corpus of full-dimensional bodies with the origin interior,
// deliberately including asymmetric and tilted shapes.
std::vector<Polytope> corpus(int dim) {
    std::vector<Polytope> out;
    if (dim == 2) {
        out.push_back(unit_square());
        out.push_back(make_box({Q(1), Q(1)}, {Q(1), Q(2)}));
        out.push_back(make_crosspolytope({Q(1), Q(1)}, {Q(1), Q(2)}));
        out.push_back(make_double_pyramid(Q(1), Q(3, 2), Q(1), Q(1, 2), Vec{Q(1, 4)},
                                          Vec{Q(-1, 4)}));
        out.push_back(make_straight_triangle(Q(1), Q(2), Q(1), Q(3, 2)));
        out.push_back(make_simplex(2, Q(2)));
    } else {
        out.push_back(unit_cube());
        out.push_back(make_crosspolytope({Q(1), Q(1), Q(1)}, {Q(1), Q(2), Q(1)}));
        out.push_back(make_simplex(3, Q(2)));
        out.push_back(make_double_pyramid(Q(1), Q(3, 2), Q(2), Q(1, 2),
                                          Vec{Q(1, 4), Q(-1, 8)}, Vec{Q(0), Q(1, 2)}));
    }
    return out;
}

// Product of the factorials of the entries of an exponent.
Rational exponent_factorial(const Exponent& e) {
    Rational out(1);
    for (int k : e) out = out * Rational(factorial(k));
    return out;
}

SymTensor zero_tensor(int dim, int rank) { return SymTensor(dim, rank); }

} // namespace

TEST_CASE("complete homogeneous sums match brute-force enumeration") {
    const std::vector<Vec> pts = {Vec{Q(1), Q(2)}, Vec{Q(-1), Q(1, 2)}, Vec{Q(3), Q(0)}};
    // degree 0 is the scalar 1, degree 1 the plain sum
    CHECK(complete_homogeneous(0, pts) == SymTensor::scalar(2, Q(1)));
    SymTensor sum(2, 1);
    for (const auto& v : pts) sum = sum + power(v, 1);
    CHECK(complete_homogeneous(1, pts) == sum);
    // degree 2 and 3: enumerate multisets {i <= j (<= k)} explicitly
    SymTensor deg2(2, 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i; j < pts.size(); ++j)
            deg2 = deg2 + sym_product(power(pts[i], 1), power(pts[j], 1));
    CHECK(complete_homogeneous(2, pts) == deg2);
    SymTensor deg3(2, 3);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i; j < pts.size(); ++j)
            for (std::size_t k = j; k < pts.size(); ++k)
                deg3 = deg3 + sym_product(sym_product(power(pts[i], 1), power(pts[j], 1)),
                                          power(pts[k], 1));
    CHECK(complete_homogeneous(3, pts) == deg3);
    // single point: the sum collapses to the power
    CHECK(complete_homogeneous(3, {pts[0]}) == power(pts[0], 3));
}

TEST_CASE("simplex moments match the Dirichlet closed form") {
    // On the simplex conv{0, e_1, .., e_n} the monomial x^beta integrates to
    // (prod_i beta_i!) / (n + |beta|)!, a textbook closed form that is
    // independent of everything in this library.  The coordinate of the
    // moment tensor at exponent beta is exactly that monomial integral.
    for (int n : {2, 3}) {
        std::vector<Vec> verts;
        verts.push_back(Vec::zero(n));
        for (int i = 0; i < n; ++i) verts.push_back(Vec::unit(n, i));
        for (int p = 0; p <= 4; ++p) {
            const SymTensor t = simplex_moment_integral(verts, p);
            for (const auto& beta : enumerate_exponents(n, p)) {
                CHECK(t.coord(beta) ==
                      exponent_factorial(beta) / Rational(factorial(n + p)));
            }
        }
    }
}

TEST_CASE("simplex moments: volume, centroid, and degenerate input") {
    const std::vector<Vec> tri = {Vec{Q(1), Q(1)}, Vec{Q(4), Q(1)}, Vec{Q(1), Q(3)}};
    // p = 0 is the volume
    CHECK(simplex_moment_integral(tri, 0) == SymTensor::scalar(2, Q(3)));
    // p = 1 is volume times centroid
    SymTensor first = simplex_moment_integral(tri, 1);
    CHECK(first.coord({1, 0}) == Q(3) * Q(2));          // centroid x = 2
    CHECK(first.coord({0, 1}) == Q(3) * Q(5, 3));       // centroid y = 5/3
    // flat simplices are rejected
    const std::vector<Vec> flat = {Vec{Q(0), Q(0)}, Vec{Q(1), Q(1)}, Vec{Q(2), Q(2)}};
    CHECK_THROWS_AS(simplex_moment_integral(flat, 2), NotFullDimensional);
    CHECK_THROWS_AS(simplex_moment_integral(tri, -1), BadParameter);
}

TEST_CASE("simplex moments transform covariantly under linear maps") {
    // Change of variables: integrating x^(sym p) over phi(S) equals
    // |det phi| times the tensor action of phi on the integral over S.
    const std::vector<Vec> tri = {Vec{Q(1), Q(0)}, Vec{Q(0), Q(1)}, Vec{Q(-1), Q(-1, 2)}};
    std::vector<Mat> maps;
    maps.push_back(Mat::shear_upper(Q(3, 2)));
    {
        Mat m = Mat::diag({Q(2), Q(-1, 3)});
        maps.push_back(m);
    }
    {
        Mat m = Mat::identity(2);
        m.at(0, 0) = Q(1);
        m.at(0, 1) = Q(2);
        m.at(1, 0) = Q(1, 2);
        m.at(1, 1) = Q(3);
        maps.push_back(m);
    }
    for (const auto& phi : maps) {
        Rational adet = phi.det();
        if (adet < 0) adet = -adet;
        for (int p = 0; p <= 3; ++p) {
            std::vector<Vec> image;
            for (const auto& v : tri) image.push_back(phi.apply(v));
            CHECK(simplex_moment_integral(image, p) ==
                  adet * gl_action(phi, simplex_moment_integral(tri, p)));
        }
    }
}

TEST_CASE("simplex moments add under centroid subdivision") {
    // Splitting a simplex at its centroid into dim+1 simplices must preserve
    // every moment; this pins the formula on simplices in general position,
    // away from the origin-cornered case covered by the Dirichlet form.
    for (int n : {2, 3}) {
        std::vector<Vec> verts;
        if (n == 2)
            verts = {Vec{Q(1), Q(2)}, Vec{Q(5), Q(1)}, Vec{Q(2), Q(7, 2)}};
        else
            verts = {Vec{Q(1), Q(2), Q(-1)}, Vec{Q(5), Q(1), Q(0)}, Vec{Q(2), Q(7, 2), Q(1)},
                     Vec{Q(0), Q(1), Q(3)}};
        Vec centroid = Vec::zero(n);
        for (const auto& v : verts) centroid = centroid + v;
        centroid = Q(1, n + 1) * centroid;
        for (int p = 0; p <= 3; ++p) {
            SymTensor split(n, p);
            for (std::size_t skip = 0; skip < verts.size(); ++skip) {
                std::vector<Vec> part;
                for (std::size_t i = 0; i < verts.size(); ++i)
                    part.push_back(i == skip ? centroid : verts[i]);
                split = split + simplex_moment_integral(part, p);
            }
            CHECK(split == simplex_moment_integral(verts, p));
        }
    }
}

TEST_CASE("moment tensors on hand-checked bodies") {
    const Polytope sq = unit_square();
    // p = 0: (n+0) * volume
    CHECK(moment_tensor(sq, 0) == SymTensor::scalar(2, Q(8)));
    // odd p vanishes on centrally symmetric bodies
    CHECK(moment_tensor(sq, 1) == zero_tensor(2, 1));
    CHECK(moment_tensor(sq, 3) == zero_tensor(2, 3));
    // p = 2 on [-1,1]^2: 4 * integral of x_i x_j
    SymTensor sq2 = moment_tensor(sq, 2);
    CHECK(sq2.coord({2, 0}) == Q(16, 3));
    CHECK(sq2.coord({1, 1}) == Q(0));
    CHECK(sq2.coord({0, 2}) == Q(16, 3));
    // asymmetric box [-1,1] x [-1,2]: first moment is (n+1) * vol * centroid
    const Polytope box = make_box({Q(1), Q(1)}, {Q(1), Q(2)});
    SymTensor box1 = moment_tensor(box, 1);
    CHECK(box1.coord({1, 0}) == Q(0));
    CHECK(box1.coord({0, 1}) == Q(9));  // 3 * vol 6 * centroid 1/2
    // cube [-1,1]^3 at p = 2: 5 * (8/3) on the diagonal
    SymTensor cube2 = moment_tensor(unit_cube(), 2);
    CHECK(cube2.coord({2, 0, 0}) == Q(40, 3));
    CHECK(cube2.coord({0, 2, 0}) == Q(40, 3));
    CHECK(cube2.coord({1, 1, 0}) == Q(0));
}

TEST_CASE("surface tensors on hand-checked bodies") {
    const Polytope sq = unit_square();
    // p = 0 sums the support-weighted facet measures: equals n * volume
    CHECK(lp_surface_tensor(sq, 0) == SymTensor::scalar(2, Q(8)));
    // p = 2 on the square: per edge h^(-1) N^(sym 2) with |N| = 2, h = 2
    SymTensor sq2 = lp_surface_tensor(sq, 2);
    CHECK(sq2.coord({2, 0}) == Q(4));
    CHECK(sq2.coord({1, 1}) == Q(0));
    CHECK(sq2.coord({0, 2}) == Q(4));
    // p = 1 vanishes on every body: area normals of a closed boundary cancel
    for (int n : {2, 3})
        for (const auto& P : corpus(n)) CHECK(lp_surface_tensor(P, 1) == zero_tensor(n, 1));
}

TEST_CASE("moment and surface tensors are the extreme boundary moment tensors") {
    // s = 0 recovers the moment tensor (a divergence-type identity connecting
    // the interior cone decomposition with the boundary sum), and r = 0
    // recovers the surface tensor.  The two sides are computed by genuinely
    // different code paths.
    for (int n : {2, 3}) {
        for (const auto& P : corpus(n)) {
            for (int p = 0; p <= 4; ++p) {
                CHECK(moment_tensor(P, p) == mrs(P, p, 0));
                CHECK(lp_surface_tensor(P, p) == mrs(P, 0, p));
            }
        }
    }
}

TEST_CASE("quarter-turn boundary tensors match the double pyramid closed form") {
    // On the straight double pyramid conv{-a e1, b e1, -c e2, d e2} every
    // mixed tensor mrs_rho(i, p-i) has an explicit rational closed form.
    const Rational a = Q(1), b = Q(3, 2), c = Q(5, 4), d = Q(1, 2);
    const Polytope P = make_crosspolytope({a, c}, {b, d});
    for (int p = 0; p <= 5; ++p) {
        for (int i = 0; i <= p; ++i) {
            SymTensor expected = double_pyramid_closed_form(a, b, c, d, i, p);
            CHECK(mrs_rho(P, i, p - i) == expected);
            if (i == p - 1) CHECK(expected == zero_tensor(2, p));
        }
    }
    // a second, integer-parameter body
    const Rational a2 = Q(2), b2 = Q(1), c2 = Q(3), d2 = Q(1);
    const Polytope P2 = make_crosspolytope({a2, c2}, {b2, d2});
    for (int p = 0; p <= 4; ++p)
        for (int i = 0; i <= p; ++i)
            CHECK(mrs_rho(P2, i, p - i) == double_pyramid_closed_form(a2, b2, c2, d2, i, p));
}

TEST_CASE("closed-form coefficients: band structure and boundary rows") {
    // top row i = p alternates in sign
    for (int l = 0; l <= 4; ++l) CHECK(m_coeff(4, 4, l) == (l % 2 == 0 ? Q(1) : Q(-1)));
    // for i < p the band p-i <= l <= i vanishes
    for (int p = 1; p <= 6; ++p)
        for (int i = 0; i < p; ++i)
            for (int l = p - i; l <= i; ++l) CHECK(m_coeff(p, i, l) == Q(0));
    // spot values from expanding the two binomial terms by hand
    CHECK(m_coeff(3, 1, 0) == Q(1));   // C(1,0) + C(1,-2) = 1
    CHECK(m_coeff(3, 1, 3) == Q(-1));  // C(1,3) - C(1,1) = -1
    CHECK(m_coeff(4, 2, 0) == Q(1));
    CHECK(m_coeff(4, 2, 4) == Q(1));   // C(1,4) + C(1,1) = 1
    CHECK_THROWS_AS(m_coeff(3, 4, 0), BadParameter);
    CHECK_THROWS_AS(m_coeff(3, 0, -1), BadParameter);
}

TEST_CASE("moments of the polar box have a product closed form") {
    // The polar of conv{-a e1, b e1, -c e2, d e2} is the box
    // [-1/a, 1/b] x [-1/c, 1/d], whose top moment coordinate factors:
    //   [moment_tensor(box, p)]_{(0,p)} =
    //     (p+2)/(p+1) * (1/a + 1/b) * (1/d^(p+1) + (-1)^p / c^(p+1)).
    const std::vector<std::array<Rational, 4>> params = {
        {Q(1), Q(1), Q(1), Q(1)},
        {Q(2), Q(3), Q(1), Q(5)},
        {Q(1, 2), Q(4, 3), Q(2), Q(3, 4)},
    };
    for (const auto& [a, b, c, d] : params) {
        const Polytope box = make_box({1 / a, 1 / c}, {1 / b, 1 / d});
        for (int p = 0; p <= 4; ++p) {
            Exponent top(2, 0);
            top[1] = p;
            const Rational sign = p % 2 == 0 ? Q(1) : Q(-1);
            const Rational expected = Rational(p + 2) / Rational(p + 1) * (1 / a + 1 / b) *
                                      (pow_rational(1 / d, p + 1) +
                                       sign * pow_rational(1 / c, p + 1));
            CHECK(moment_tensor(box, p).coord(top) == expected);
        }
    }
    // the symmetric unit case at p = 2 pins the often-quoted 16/3
    CHECK(moment_tensor(unit_square(), 2).coord({0, 2}) == Q(16, 3));
}

TEST_CASE("homogeneity degrees match actual scaling") {
    std::vector<ValuationDescriptor> ds;
    ds.push_back({ValuationKind::euler, 0, 0, false, false});
    ds.push_back({ValuationKind::vol, 0, 0, false, false});
    ds.push_back({ValuationKind::vol, 0, 0, true, false});
    ds.push_back({ValuationKind::moment, 2, 0, false, false});
    ds.push_back({ValuationKind::lp_normal, 0, 3, false, false});
    ds.push_back({ValuationKind::lp_normal, 0, 2, true, false});
    ds.push_back({ValuationKind::mrs, 1, 2, false, false});
    ds.push_back({ValuationKind::mrs_rho, 2, 1, false, false});
    ds.push_back({ValuationKind::moment, 2, 0, true, true});
    const Rational lambda = Q(3, 2);
    for (int n : {2, 3}) {
        const Polytope P = corpus(n).back();
        const Mat scale = Mat::diag(std::vector<Rational>(static_cast<std::size_t>(n), lambda));
        for (const auto& d : ds) {
            if ((d.kind == ValuationKind::mrs_rho || d.rho_output) && n != 2) continue;
            const int deg = homogeneity_degree(d, n);
            CHECK(evaluate(d, linear_image(scale, P)) ==
                  pow_rational(lambda, deg) * evaluate(d, P));
        }
    }
    // spot values: moment grows one degree faster than volume per position
    // power; surface tensors lose one per normal power; polar input negates.
    CHECK(homogeneity_degree({ValuationKind::moment, 2, 0, false, false}, 2) == 4);
    CHECK(homogeneity_degree({ValuationKind::lp_normal, 0, 2, false, false}, 3) == 1);
    CHECK(homogeneity_degree({ValuationKind::lp_normal, 0, 2, true, false}, 3) == -1);
    CHECK(homogeneity_degree({ValuationKind::vol, 0, 0, false, false}, 3) == 3);
    CHECK(homogeneity_degree({ValuationKind::euler, 0, 0, false, false}, 3) == 0);
}

TEST_CASE("descriptor validation rejects inconsistent parameters") {
    CHECK_THROWS_AS((ValuationDescriptor{ValuationKind::moment, 1, 1, false, false}).validate(2),
                    BadParameter);
    CHECK_THROWS_AS((ValuationDescriptor{ValuationKind::lp_normal, 1, 1, false, false}).validate(2),
                    BadParameter);
    CHECK_THROWS_AS((ValuationDescriptor{ValuationKind::euler, 1, 0, false, false}).validate(2),
                    BadParameter);
    CHECK_THROWS_AS((ValuationDescriptor{ValuationKind::vol, 0, 1, false, false}).validate(2),
                    BadParameter);
    CHECK_THROWS_AS((ValuationDescriptor{ValuationKind::moment, -1, 0, false, false}).validate(2),
                    BadParameter);
    CHECK_THROWS_AS((ValuationDescriptor{ValuationKind::mrs_rho, 1, 1, false, false}).validate(3),
                    DimensionMismatch);
    CHECK_THROWS_AS((ValuationDescriptor{ValuationKind::moment, 2, 0, false, true}).validate(3),
                    DimensionMismatch);
    CHECK_NOTHROW((ValuationDescriptor{ValuationKind::mrs, 1, 2, true, false}).validate(3));
    // mrs_rho itself refuses dimension 3 polytopes
    CHECK_THROWS_AS(mrs_rho(unit_cube(), 1, 1), DimensionMismatch);
}

TEST_CASE("evaluate composes polar input and rotated output") {
    const Polytope P = make_crosspolytope({Q(1), Q(1)}, {Q(1), Q(2)});
    ValuationDescriptor plain{ValuationKind::moment, 2, 0, false, false};
    ValuationDescriptor polar{ValuationKind::moment, 2, 0, true, false};
    ValuationDescriptor rotated{ValuationKind::moment, 2, 0, true, true};
    CHECK(evaluate(plain, P) == moment_tensor(P, 2));
    CHECK(evaluate(polar, P) == moment_tensor(P.polar(), 2));
    CHECK(evaluate(rotated, P) == gl_action(Mat::rotation_quarter(), moment_tensor(P.polar(), 2)));
    ValuationDescriptor eul{ValuationKind::euler, 0, 0, false, false};
    ValuationDescriptor vol_polar{ValuationKind::vol, 0, 0, true, false};
    CHECK(evaluate(eul, P) == SymTensor::scalar(2, Q(1)));
    CHECK(evaluate(vol_polar, P) == SymTensor::scalar(2, volume(P.polar())));
}
