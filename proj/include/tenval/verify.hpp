#pragma once

#include <tenval/valuations.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tenval {

// ------------------------------------------------------------------
// Reports
// ------------------------------------------------------------------

struct ValuationSample {
    Polytope polytope;
    SymTensor value;
};

struct CheckReport {
    std::string check;
    int cases = 0;
    std::vector<std::string> failures; // smallest witness first
    bool exact = true;                 // rational equality (false only for the MC gate)
    bool passed() const { return failures.empty(); }
};

using ValuationFn = std::function<SymTensor(const Polytope&)>;

inline std::string descriptor_name(const ValuationDescriptor& d) {
    std::ostringstream os;
    if (d.rho_output) os << "rho.";
    switch (d.kind) {
        case ValuationKind::euler: os << "euler"; break;
        case ValuationKind::vol: os << "vol"; break;
        case ValuationKind::moment: os << "moment(p=" << d.r << ")"; break;
        case ValuationKind::lp_normal: os << "lp_normal(p=" << d.s << ")"; break;
        case ValuationKind::mrs: os << "mrs(r=" << d.r << ",s=" << d.s << ")"; break;
        case ValuationKind::mrs_rho: os << "mrs_rho(r=" << d.r << ",s=" << d.s << ")"; break;
    }
    if (d.polar_input) os << ".polar";
    return os.str();
}

inline ValuationFn as_function(const ValuationDescriptor& d) {
    return [d](const Polytope& P) { return evaluate(d, P); };
}

namespace detail {

inline std::string describe(const Vec& v) {
    std::string out = "(";
    for (int i = 0; i < v.dim(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

inline std::string describe(const Polytope& P) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : P.vertices()) {
        if (!first) out += ",";
        first = false;
        out += describe(v);
    }
    return out + "}";
}

inline std::string describe(const Mat& m) {
    std::string out = "[";
    for (int r = 0; r < m.dim(); ++r) {
        if (r) out += ";";
        for (int c = 0; c < m.dim(); ++c) {
            if (c) out += ",";
            out += to_string(m.at(r, c));
        }
    }
    return out + "]";
}

// Sort key for failure witnesses: fewest vertices first, then smallest
// denominators, so the report leads with the easiest counterexample.
struct Witness {
    std::size_t vertex_count = 0;
    Int max_denominator = 1;
    std::string text;

    bool operator<(const Witness& o) const {
        if (vertex_count != o.vertex_count) return vertex_count < o.vertex_count;
        if (max_denominator != o.max_denominator) return max_denominator < o.max_denominator;
        return text < o.text;
    }
};

inline Witness make_witness(const Polytope& P, std::string text) {
    Witness w;
    w.vertex_count = P.vertices().size();
    for (const auto& v : P.vertices())
        for (int i = 0; i < v.dim(); ++i) w.max_denominator = std::max(w.max_denominator, den(v[i]));
    w.text = std::move(text);
    return w;
}

inline void finish_report(CheckReport& report, std::vector<Witness> witnesses) {
    std::sort(witnesses.begin(), witnesses.end());
    for (auto& w : witnesses) report.failures.push_back(std::move(w.text));
}

} // namespace detail

// ------------------------------------------------------------------
// Law checks (failures are reported, never thrown)
// ------------------------------------------------------------------

// mu(U) + mu(I) = mu(P) + mu(Q) on each union/intersection family.
inline CheckReport check_additivity(const std::string& name, const ValuationFn& mu,
                                    const std::vector<PyramidFamily>& families) {
    CheckReport report;
    report.check = "additivity " + name;
    std::vector<detail::Witness> bad;
    for (const auto& fam : families) {
        ++report.cases;
        SymTensor lhs = mu(fam.u) + mu(fam.i);
        SymTensor rhs = mu(fam.p) + mu(fam.q);
        if (!(lhs == rhs))
            bad.push_back(detail::make_witness(
                fam.u, "P=" + detail::describe(fam.p) + " Q=" + detail::describe(fam.q)));
    }
    detail::finish_report(report, std::move(bad));
    return report;
}

inline CheckReport check_additivity(const ValuationDescriptor& d,
                                    const std::vector<PyramidFamily>& families) {
    return check_additivity(descriptor_name(d), as_function(d), families);
}

enum class CovarianceLaw { covariant, contravariant, det_power };

// Compares evaluate(d, phi P) with the transform of evaluate(d, P) prescribed
// by the law: phi-action, inverse-transpose action, or det(phi)^s phi-action
// (the latter requires det phi = +-1).
inline CheckReport check_covariance(const ValuationDescriptor& d, const Polytope& P,
                                    const Mat& phi, CovarianceLaw law) {
    CheckReport report;
    report.check = "covariance " + descriptor_name(d);
    report.cases = 1;
    const Rational det = phi.det();
    if (law == CovarianceLaw::det_power && det != 1 && det != -1)
        throw BadParameter("check_covariance: det_power law requires det = +-1");

    SymTensor lhs = evaluate(d, linear_image(phi, P));
    SymTensor base = evaluate(d, P);
    SymTensor rhs(P.dim(), base.rank());
    switch (law) {
        case CovarianceLaw::covariant: rhs = gl_action(phi, base); break;
        case CovarianceLaw::contravariant: rhs = gl_action(phi.inverse_transpose(), base); break;
        case CovarianceLaw::det_power: {
            rhs = gl_action(phi, base);
            if (det < 0 && d.s % 2 == 1) rhs = -rhs;
            break;
        }
    }
    if (!(lhs == rhs)) {
        std::vector<detail::Witness> bad;
        bad.push_back(detail::make_witness(
            P, "P=" + detail::describe(P) + " phi=" + detail::describe(phi)));
        detail::finish_report(report, std::move(bad));
    }
    return report;
}

// evaluate(d, lambda P) = lambda^expected_degree * evaluate(d, P).
inline CheckReport check_homogeneity(const ValuationDescriptor& d, const Polytope& P,
                                     const Rational& lambda, int expected_degree) {
    if (lambda <= 0) throw BadParameter("check_homogeneity: lambda must be positive");
    CheckReport report;
    report.check = "homogeneity " + descriptor_name(d);
    report.cases = 1;
    const int n = P.dim();
    Polytope scaled = linear_image(Mat::diag(std::vector<Rational>(static_cast<std::size_t>(n), lambda)), P);
    SymTensor lhs = evaluate(d, scaled);
    SymTensor rhs = pow_rational(lambda, expected_degree) * evaluate(d, P);
    if (!(lhs == rhs)) {
        std::vector<detail::Witness> bad;
        bad.push_back(detail::make_witness(
            P, "P=" + detail::describe(P) + " lambda=" + to_string(lambda)));
        detail::finish_report(report, std::move(bad));
    }
    return report;
}

// Splits mu into its even and odd parts with respect to conjugation by a
// determinant -1 map theta:
//   mu_even(P) = (mu(P) + theta . mu(theta^-1 P)) / 2
//   mu_odd(P)  = (mu(P) - theta . mu(theta^-1 P)) / 2
// so that mu = mu_even + mu_odd pointwise.
inline std::pair<ValuationFn, ValuationFn> even_odd_split(const ValuationFn& mu,
                                                          const Mat& theta) {
    if (theta.det() != -1) throw BadParameter("even_odd_split: theta must have determinant -1");
    const Mat theta_inv = theta.inverse();
    auto conjugate = [mu, theta, theta_inv](const Polytope& P) {
        return gl_action(theta, mu(linear_image(theta_inv, P)));
    };
    const Rational half = make_rational(1, 2);
    ValuationFn even = [mu, conjugate, half](const Polytope& P) {
        return half * (mu(P) + conjugate(P));
    };
    ValuationFn odd = [mu, conjugate, half](const Polytope& P) {
        return half * (mu(P) - conjugate(P));
    };
    return {even, odd};
}

// ------------------------------------------------------------------
// Classification structure: basis descriptors, rank, decomposition
// ------------------------------------------------------------------

// The spanning family for rank-p covariant valuations in dimension n:
//   p = 0:          euler, vol, vol o polar                     (3 members)
//   n = 2, p >= 1:  mrs_rho(i, p-i) for i != p-1, and
//                   rho . moment(p) o polar                     (p+1 members)
//   n >= 3, p = 1:  moment(1)                                   (1 member)
//   n >= 3, p >= 2: moment(p), lp_normal(p) o polar             (2 members)
inline std::vector<ValuationDescriptor> basis_descriptors(int n, int p) {
    if (n < 2) throw BadParameter("basis_descriptors: dimension < 2");
    if (p < 0) throw BadParameter("basis_descriptors: negative rank");
    std::vector<ValuationDescriptor> out;
    if (p == 0) {
        out.push_back({ValuationKind::euler, 0, 0, false, false});
        out.push_back({ValuationKind::vol, 0, 0, false, false});
        out.push_back({ValuationKind::vol, 0, 0, true, false});
        return out;
    }
    if (n == 2) {
        for (int i = 0; i <= p; ++i) {
            if (i == p - 1) continue;
            out.push_back({ValuationKind::mrs_rho, i, p - i, false, false});
        }
        out.push_back({ValuationKind::moment, p, 0, true, true});
        return out;
    }
    out.push_back({ValuationKind::moment, p, 0, false, false});
    if (p >= 2) out.push_back({ValuationKind::lp_normal, 0, p, true, false});
    return out;
}

// Exact rank of the matrix with one row per basis descriptor whose columns
// concatenate, over all sample polytopes, the tensor coordinates of that
// descriptor's value.  Full rank certifies linear independence of the basis
// as functions on polytopes.
inline int basis_rank(int n, int p, const std::vector<Polytope>& polytopes) {
    const auto basis = basis_descriptors(n, p);
    if (polytopes.size() < basis.size() + 3)
        throw InsufficientSamples("basis_rank: need at least rank + 3 sample polytopes");
    const auto exps = enumerate_exponents(n, p);
    std::vector<std::vector<Rational>> rows;
    for (const auto& d : basis) {
        std::vector<Rational> row;
        for (const auto& P : polytopes) {
            if (P.dim() != n) throw DimensionMismatch("basis_rank: sample dimension mismatch");
            SymTensor t = evaluate(d, P);
            for (const auto& e : exps) row.push_back(t.coord(e));
        }
        rows.push_back(std::move(row));
    }
    return exact_rank(std::move(rows));
}

struct Decomposition {
    std::vector<ValuationDescriptor> basis;
    std::vector<Rational> coefficients; // aligned with basis
    std::vector<Rational> residual;     // one entry per (sample, coordinate)
    bool exact = false;                 // true iff the residual vanishes
};

// Writes the sampled valuation as a rational combination of the basis
// descriptors; exact residuals expose samples outside the span.
inline Decomposition decompose(const std::vector<ValuationSample>& samples, int n, int p) {
    const auto basis = basis_descriptors(n, p);
    if (samples.size() < basis.size())
        throw RankDeficient("decompose: fewer samples than basis elements");
    const auto exps = enumerate_exponents(n, p);
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (const auto& sample : samples) {
        if (sample.polytope.dim() != n || sample.value.dim() != n ||
            sample.value.rank() != p)
            throw DimensionMismatch("decompose: sample shape mismatch");
        std::vector<SymTensor> basis_values;
        basis_values.reserve(basis.size());
        for (const auto& d : basis) basis_values.push_back(evaluate(d, sample.polytope));
        for (const auto& e : exps) {
            std::vector<Rational> row;
            row.reserve(basis.size());
            for (const auto& t : basis_values) row.push_back(t.coord(e));
            a.push_back(std::move(row));
            b.push_back(sample.value.coord(e));
        }
    }
    LinearSolve solve = solve_least_residual(a, b);
    Decomposition out;
    out.basis = basis;
    out.coefficients = std::move(solve.solution);
    out.residual = std::move(solve.residual);
    out.exact = solve.residual_zero;
    return out;
}

// ------------------------------------------------------------------
// Monte Carlo moment oracle
// ------------------------------------------------------------------

struct McMomentEstimate {
    int dim = 0;
    int p = 0;
    long long samples = 0;
    long long accepted = 0;
    std::vector<Exponent> exponents;     // lexicographic order
    std::vector<double> values;          // (n+p) * integral estimates
    std::vector<double> standard_errors; // one per exponent
};

// Rejection sampling in the vertex bounding box.  Each coordinate is drawn as
// a dyadic rational k / 2^53 (53 bits from mt19937_64) along the box axis, so
// the facet test N . (lo + k/2^53 * span) <= h clears denominators into an
// exact integer comparison sum(a_i k_i) <= rhs that fits 128 bits for
// test-sized inputs (with an exact rational fallback otherwise).  Results are
// reproducible to the bit for a fixed seed.  Estimates carry the same (n+p)
// prefactor as moment_tensor; integrand evaluation is the float channel.
inline McMomentEstimate mc_moment_oracle(const Polytope& P, int p, long long samples,
                                         std::uint64_t seed) {
    if (p < 0) throw BadParameter("mc_moment_oracle: p < 0");
    if (samples < 10000) throw InsufficientSamples("mc_moment_oracle: need at least 10^4 samples");
    if (P.dim() > 3) throw UnsupportedDimension("mc_moment_oracle: dimension > 3");
    const int n = P.dim();
    const std::size_t un = static_cast<std::size_t>(n);

    std::vector<Rational> lo(un), hi(un);
    for (int i = 0; i < n; ++i) {
        lo[static_cast<std::size_t>(i)] = P.vertices().front()[i];
        hi[static_cast<std::size_t>(i)] = P.vertices().front()[i];
    }
    for (const auto& v : P.vertices())
        for (int i = 0; i < n; ++i) {
            lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], v[i]);
            hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], v[i]);
        }
    double box_volume = 1.0;
    std::vector<double> lo_d(un), span_d(un);
    std::vector<Rational> span(un);
    for (std::size_t i = 0; i < un; ++i) {
        span[i] = hi[i] - lo[i];
        lo_d[i] = lo[i].convert_to<double>();
        span_d[i] = span[i].convert_to<double>();
        box_volume *= span_d[i];
    }

    // Integer form of each facet inequality in grid coordinates k in [0, 2^53)^n.
    using Wide = boost::multiprecision::int128_t;
    struct IntFacet {
        std::vector<std::int64_t> a;
        Wide rhs = 0;
    };
    std::vector<IntFacet> int_facets;
    bool fast = true;
    const Int int64_cap = Int(1) << 62;
    const Int wide_cap = Int(1) << 126;
    for (const auto& f : P.facets()) {
        Rational b = f.support;
        std::vector<Rational> coeff(un);
        Int common(1);
        for (std::size_t i = 0; i < un; ++i) {
            coeff[i] = f.normal[static_cast<int>(i)] * span[i];
            b -= f.normal[static_cast<int>(i)] * lo[i];
            common = boost::multiprecision::lcm(common, den(coeff[i]));
        }
        common = boost::multiprecision::lcm(common, den(b));
        IntFacet t;
        for (std::size_t i = 0; i < un; ++i) {
            Int ai = num(coeff[i]) * (common / den(coeff[i]));
            if (ai >= int64_cap || ai <= -int64_cap) fast = false;
            t.a.push_back(fast ? ai.convert_to<std::int64_t>() : 0);
        }
        Int rhs = (num(b) * (common / den(b))) << 53;
        if (rhs >= wide_cap || rhs <= -wide_cap) fast = false;
        if (fast) t.rhs = rhs.convert_to<Wide>();
        int_facets.push_back(std::move(t));
    }

    McMomentEstimate est;
    est.dim = n;
    est.p = p;
    est.samples = samples;
    est.exponents = enumerate_exponents(n, p);
    const std::size_t m = est.exponents.size();
    std::vector<double> sum(m, 0.0), sum_sq(m, 0.0);

    const Int two53 = Int(1) << 53;
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> grid(un);
    std::vector<double> x(un);
    for (long long it = 0; it < samples; ++it) {
        for (std::size_t i = 0; i < un; ++i) {
            grid[i] = rng() >> 11;
            x[i] = lo_d[i] + static_cast<double>(grid[i]) * 0x1.0p-53 * span_d[i];
        }
        bool inside = true;
        if (fast) {
            for (const auto& t : int_facets) {
                Wide acc = 0;
                for (std::size_t i = 0; i < un; ++i) acc += Wide(t.a[i]) * grid[i];
                if (acc > t.rhs) {
                    inside = false;
                    break;
                }
            }
        } else {
            for (const auto& f : P.facets()) {
                Rational acc(0);
                for (std::size_t i = 0; i < un; ++i)
                    acc += f.normal[static_cast<int>(i)] *
                           (lo[i] + Rational(Int(grid[i])) / Rational(two53) * span[i]);
                if (acc > f.support) {
                    inside = false;
                    break;
                }
            }
        }
        if (!inside) continue;
        ++est.accepted;
        for (std::size_t k = 0; k < m; ++k) {
            double g = 1.0;
            for (std::size_t i = 0; i < un; ++i)
                for (int rep = 0; rep < est.exponents[k][i]; ++rep) g *= x[i];
            sum[k] += g;
            sum_sq[k] += g * g;
        }
    }

    const double factor = static_cast<double>(n + p) * box_volume;
    const double nn = static_cast<double>(samples);
    est.values.resize(m);
    est.standard_errors.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double mean = sum[k] / nn;
        const double var = std::max(0.0, sum_sq[k] / nn - mean * mean);
        est.values[k] = factor * mean;
        est.standard_errors[k] = factor * std::sqrt(var / nn);
    }
    return est;
}

// Three-standard-error agreement gate between an exact tensor and an MC
// estimate (inclusive, so a zero-variance exact match passes).
inline bool mc_within_three_sigma(const SymTensor& exact, const McMomentEstimate& est) {
    if (exact.dim() != est.dim || exact.rank() != est.p)
        throw DimensionMismatch("mc_within_three_sigma: shape mismatch");
    for (std::size_t k = 0; k < est.exponents.size(); ++k) {
        const double target = exact.coord(est.exponents[k]).convert_to<double>();
        if (std::abs(target - est.values[k]) > 3.0 * est.standard_errors[k]) return false;
    }
    return true;
}

// ------------------------------------------------------------------
// Seeded sample generators (all draws go through mt19937_64, which the
// standard pins down exactly, so corpora are reproducible everywhere)
// ------------------------------------------------------------------

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Uniform draw from the eighths grid {2/8, 3/8, ..., 32/8} = [1/4, 4].
inline Rational random_grid_value(std::mt19937_64& rng) {
    return make_rational(2 + static_cast<long>(rng() % 31), 8);
}

// Uniform draw from the tilt grid {-8/8, ..., 8/8}.
inline Rational random_tilt_value(std::mt19937_64& rng) {
    return make_rational(static_cast<long>(rng() % 17) - 8, 8);
}

inline Vec random_tilt(std::mt19937_64& rng, int base_dim) {
    Vec v(base_dim);
    for (int i = 0; i < base_dim; ++i) v[i] = random_tilt_value(rng);
    return v;
}

inline Polytope random_straight_double_pyramid(std::mt19937_64& rng, int n) {
    return make_straight_double_pyramid(n, random_grid_value(rng), random_grid_value(rng),
                                        random_grid_value(rng), random_grid_value(rng));
}

// Tilted double pyramid; retries until the apex line meets the base section.
inline Polytope random_double_pyramid(std::mt19937_64& rng, int n) {
    if (n < 2) throw BadParameter("random_double_pyramid: dim < 2");
    for (;;) {
        const Rational a = random_grid_value(rng), b = random_grid_value(rng);
        const Rational c = random_grid_value(rng), d = random_grid_value(rng);
        const Vec x = random_tilt(rng, n - 1), y = random_tilt(rng, n - 1);
        try {
            return make_double_pyramid(a, b, c, d, x, y);
        } catch (const InvalidDoublePyramid&) {
        } catch (const UnsupportedDimension&) {
        }
    }
}

// Union/intersection family of double pyramids; retries until both the four
// pyramids and the apex-nesting condition hold (straight tilts always do).
inline PyramidFamily random_pyramid_family(std::mt19937_64& rng, int n) {
    if (n < 2) throw BadParameter("random_pyramid_family: dim < 2");
    for (int attempt = 0;; ++attempt) {
        const Rational a = random_grid_value(rng), b = random_grid_value(rng);
        const Rational c = random_grid_value(rng), d = random_grid_value(rng);
        Rational r = random_grid_value(rng);
        const Rational cap = std::min(c, d);
        while (r > cap) r = r / 2;
        const bool straight = attempt >= 64 || (rng() % 4 == 0);
        const Vec x = straight ? Vec::zero(n - 1) : random_tilt(rng, n - 1);
        const Vec y = straight ? Vec::zero(n - 1) : random_tilt(rng, n - 1);
        try {
            return pyramid_family(a, b, c, d, r, x, y);
        } catch (const InvalidDoublePyramid&) {
        } catch (const UnsupportedDimension&) {
        }
    }
}

// Product of `count` random elementary shears (unit determinant); optionally
// pre-multiplied by diag(-1, 1, ..., 1) for determinant -1.
inline Mat random_unimodular(std::mt19937_64& rng, int n, bool negative_det,
                             int count = 4) {
    if (n < 2) throw BadParameter("random_unimodular: dim < 2");
    Mat m = Mat::identity(n);
    if (negative_det) m.at(0, 0) = Rational(-1);
    for (int k = 0; k < count; ++k) {
        const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        if (j >= i) ++j;
        Rational z = random_tilt_value(rng);
        if (z == 0) z = Rational(1);
        Mat shear = Mat::identity(n);
        shear.at(i, j) = z;
        m = m * shear;
    }
    return m;
}

// ------------------------------------------------------------------
// Named suites
// ------------------------------------------------------------------

namespace detail {

inline std::vector<ValuationDescriptor> implemented_descriptors(int n) {
    std::vector<ValuationDescriptor> out = {
        {ValuationKind::euler, 0, 0, false, false},
        {ValuationKind::vol, 0, 0, false, false},
        {ValuationKind::vol, 0, 0, true, false},
        {ValuationKind::moment, 1, 0, false, false},
        {ValuationKind::moment, 2, 0, false, false},
        {ValuationKind::moment, 3, 0, false, false},
        {ValuationKind::moment, 2, 0, true, false},
        {ValuationKind::lp_normal, 0, 0, false, false},
        {ValuationKind::lp_normal, 0, 2, false, false},
        {ValuationKind::lp_normal, 0, 3, false, false},
        {ValuationKind::lp_normal, 0, 2, true, false},
        {ValuationKind::mrs, 1, 1, false, false},
        {ValuationKind::mrs, 2, 1, false, false},
        {ValuationKind::mrs, 1, 2, false, false},
    };
    if (n == 2) {
        out.push_back({ValuationKind::mrs_rho, 0, 2, false, false});
        out.push_back({ValuationKind::mrs_rho, 1, 1, false, false});
        out.push_back({ValuationKind::mrs_rho, 2, 0, false, false});
        out.push_back({ValuationKind::mrs_rho, 1, 2, false, false});
        out.push_back({ValuationKind::moment, 2, 0, true, true});
    }
    return out;
}

inline std::string dim_tag(int n) { return "n=" + std::to_string(n) + " "; }

inline std::vector<CheckReport> suite_additivity(std::uint64_t seed, int cases) {
    std::vector<CheckReport> reports;
    for (int n : {2, 3}) {
        std::mt19937_64 rng(mix_seed(seed, 100 + static_cast<std::uint64_t>(n)));
        std::vector<PyramidFamily> families;
        families.reserve(static_cast<std::size_t>(cases));
        for (int k = 0; k < cases; ++k) families.push_back(random_pyramid_family(rng, n));
        for (const auto& d : implemented_descriptors(n)) {
            CheckReport r = check_additivity(d, families);
            r.check = "additivity " + dim_tag(n) + descriptor_name(d);
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

inline void merge_case(CheckReport& into, const CheckReport& single) {
    into.cases += single.cases;
    for (const auto& f : single.failures) into.failures.push_back(f);
    into.exact = into.exact && single.exact;
}

inline std::vector<CheckReport> suite_covariance(std::uint64_t seed, int cases) {
    std::vector<CheckReport> reports;
    for (int n : {2, 3}) {
        struct Entry {
            ValuationDescriptor desc;
            CovarianceLaw law;
            const char* label;
        };
        std::vector<Entry> entries = {
            {{ValuationKind::moment, 1, 0, false, false}, CovarianceLaw::covariant, "covariant"},
            {{ValuationKind::moment, 2, 0, false, false}, CovarianceLaw::covariant, "covariant"},
            {{ValuationKind::moment, 3, 0, false, false}, CovarianceLaw::covariant, "covariant"},
            {{ValuationKind::moment, 4, 0, false, false}, CovarianceLaw::covariant, "covariant"},
            {{ValuationKind::lp_normal, 0, 2, true, false}, CovarianceLaw::covariant, "covariant"},
            {{ValuationKind::lp_normal, 0, 3, true, false}, CovarianceLaw::covariant, "covariant"},
            {{ValuationKind::lp_normal, 0, 4, true, false}, CovarianceLaw::covariant, "covariant"},
            {{ValuationKind::lp_normal, 0, 2, false, false}, CovarianceLaw::contravariant,
             "contravariant"},
            {{ValuationKind::lp_normal, 0, 3, false, false}, CovarianceLaw::contravariant,
             "contravariant"},
        };
        if (n == 2) {
            entries.push_back({{ValuationKind::mrs_rho, 1, 2, false, false},
                               CovarianceLaw::det_power, "det_power"});
            entries.push_back({{ValuationKind::mrs_rho, 0, 3, false, false},
                               CovarianceLaw::det_power, "det_power"});
            entries.push_back({{ValuationKind::mrs_rho, 2, 1, false, false},
                               CovarianceLaw::det_power, "det_power"});
        }
        std::mt19937_64 rng(mix_seed(seed, 200 + static_cast<std::uint64_t>(n)));
        std::vector<Polytope> polys;
        std::vector<Mat> mats;
        for (int k = 0; k < cases; ++k) {
            polys.push_back(random_double_pyramid(rng, n));
            mats.push_back(random_unimodular(rng, n, k % 2 == 1));
        }
        for (const auto& entry : entries) {
            CheckReport merged;
            merged.check = "covariance " + dim_tag(n) + std::string(entry.label) + " " +
                           descriptor_name(entry.desc);
            for (int k = 0; k < cases; ++k)
                merge_case(merged, check_covariance(entry.desc, polys[static_cast<std::size_t>(k)],
                                                    mats[static_cast<std::size_t>(k)], entry.law));
            std::sort(merged.failures.begin(), merged.failures.end());
            reports.push_back(std::move(merged));
        }
    }
    return reports;
}

inline std::vector<CheckReport> suite_homogeneity(std::uint64_t seed, int cases) {
    const std::vector<Rational> lambdas = {make_rational(1, 3), Rational(2), make_rational(5, 2)};
    std::vector<CheckReport> reports;
    for (int n : {2, 3}) {
        std::mt19937_64 rng(mix_seed(seed, 300 + static_cast<std::uint64_t>(n)));
        const int reps = std::max(1, cases / 10);
        std::vector<Polytope> polys;
        for (int k = 0; k < reps; ++k) polys.push_back(random_double_pyramid(rng, n));
        for (const auto& d : implemented_descriptors(n)) {
            CheckReport merged;
            merged.check = "homogeneity " + dim_tag(n) + descriptor_name(d) +
                           " degree=" + std::to_string(homogeneity_degree(d, n));
            for (const auto& P : polys)
                for (const auto& lambda : lambdas)
                    merge_case(merged, check_homogeneity(d, P, lambda, homogeneity_degree(d, n)));
            std::sort(merged.failures.begin(), merged.failures.end());
            reports.push_back(std::move(merged));
        }
    }
    return reports;
}

inline std::vector<CheckReport> suite_closed_form(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(mix_seed(seed, 400));
    CheckReport agree;
    agree.check = "closed_form agreement p<=5";
    CheckReport vanish;
    vanish.check = "closed_form vanishing at i=p-1";
    std::vector<Witness> agree_bad, vanish_bad;
    for (int k = 0; k < cases; ++k) {
        const Rational a = random_grid_value(rng), b = random_grid_value(rng);
        const Rational c = random_grid_value(rng), d = random_grid_value(rng);
        const Polytope dp = make_crosspolytope({a, c}, {b, d});
        for (int p = 1; p <= 5; ++p) {
            for (int i = 0; i <= p; ++i) {
                ++agree.cases;
                SymTensor lhs = double_pyramid_closed_form(a, b, c, d, i, p);
                SymTensor rhs = mrs_rho(dp, i, p - i);
                if (!(lhs == rhs))
                    agree_bad.push_back(make_witness(
                        dp, "P=" + describe(dp) + " i=" + std::to_string(i) +
                                " p=" + std::to_string(p)));
            }
            ++vanish.cases;
            if (!(mrs_rho(dp, p - 1, 1) == SymTensor(2, p)))
                vanish_bad.push_back(make_witness(dp, "P=" + describe(dp) +
                                                          " p=" + std::to_string(p)));
        }
    }
    finish_report(agree, std::move(agree_bad));
    finish_report(vanish, std::move(vanish_bad));
    return {std::move(agree), std::move(vanish)};
}

inline std::vector<CheckReport> suite_rank(std::uint64_t seed, int cases) {
    (void)cases;
    std::vector<CheckReport> reports;
    struct Goal {
        int n, p, expected;
    };
    const std::vector<Goal> goals = {{2, 0, 3}, {2, 1, 2}, {2, 2, 3}, {2, 3, 4}, {2, 4, 5},
                                     {2, 5, 6}, {3, 0, 3}, {3, 1, 1}, {3, 2, 2}, {3, 3, 2},
                                     {3, 4, 2}};
    for (const auto& goal : goals) {
        std::mt19937_64 rng(mix_seed(seed, 500 + static_cast<std::uint64_t>(goal.n * 16 + goal.p)));
        const std::size_t need = basis_descriptors(goal.n, goal.p).size() + 4;
        std::vector<Polytope> polys;
        for (std::size_t k = 0; k < need; ++k) {
            polys.push_back(k % 2 == 0 ? random_double_pyramid(rng, goal.n)
                                       : random_straight_double_pyramid(rng, goal.n));
        }
        CheckReport r;
        r.check = "rank n=" + std::to_string(goal.n) + " p=" + std::to_string(goal.p) +
                  " expected=" + std::to_string(goal.expected);
        r.cases = 1;
        const int got = basis_rank(goal.n, goal.p, polys);
        if (got != goal.expected)
            r.failures.push_back("rank=" + std::to_string(got) +
                                 " expected=" + std::to_string(goal.expected));
        reports.push_back(std::move(r));
    }
    return reports;
}

inline std::vector<CheckReport> suite_oracle(std::uint64_t seed, int cases) {
    (void)cases;
    const long long n_samples = 1000000;
    std::vector<std::pair<std::string, Polytope>> targets;
    targets.emplace_back("square", make_box({Rational(1), Rational(1)}, {Rational(1), Rational(1)}));
    targets.emplace_back("tilted double pyramid",
                         make_double_pyramid(Rational(1), make_rational(3, 2), Rational(1),
                                             make_rational(1, 2), Vec{make_rational(1, 4)},
                                             Vec{make_rational(-1, 4)}));
    targets.emplace_back("octahedron",
                         make_crosspolytope({Rational(1), Rational(1), Rational(1)},
                                            {Rational(1), Rational(2), Rational(1)}));
    std::vector<CheckReport> reports;
    int salt = 0;
    for (const auto& [label, P] : targets) {
        CheckReport r;
        r.check = "oracle moment p=2 " + label;
        r.exact = false;
        r.cases = 1;
        McMomentEstimate est =
            mc_moment_oracle(P, 2, n_samples, mix_seed(seed, 600 + static_cast<std::uint64_t>(salt++)));
        if (!mc_within_three_sigma(moment_tensor(P, 2), est))
            r.failures.push_back("estimate outside three standard errors on " + label);
        reports.push_back(std::move(r));
    }
    return reports;
}

} // namespace detail

// Named verification suites; "all" concatenates every suite in a fixed order.
inline std::vector<CheckReport> run_suite(const std::string& name, std::uint64_t seed,
                                          int cases) {
    if (cases < 1) throw BadParameter("run_suite: cases < 1");
    if (name == "additivity") return detail::suite_additivity(seed, cases);
    if (name == "covariance") return detail::suite_covariance(seed, cases);
    if (name == "homogeneity") return detail::suite_homogeneity(seed, cases);
    if (name == "closed_form") return detail::suite_closed_form(seed, cases);
    if (name == "rank") return detail::suite_rank(seed, cases);
    if (name == "oracle") return detail::suite_oracle(seed, cases);
    if (name == "all") {
        std::vector<CheckReport> out;
        for (const char* part :
             {"additivity", "covariance", "homogeneity", "closed_form", "rank", "oracle"}) {
            auto sub = run_suite(part, seed, cases);
            out.insert(out.end(), std::make_move_iterator(sub.begin()),
                       std::make_move_iterator(sub.end()));
        }
        return out;
    }
    throw BadParameter("run_suite: unknown suite '" + name + "'");
}

} // namespace tenval
