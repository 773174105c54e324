#pragma once

// Contact order of curve branches by jet matching: the largest k <= cap such
// that some formal reparametrization s -> phi(s), phi(0) = 0, phi'(0) != 0,
// makes the jets agree through order k in every component. Also the
// clause-predicted orders for the cubic-parabola family, and intersection
// multiplicity of plane conics at a common point.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cayley/cubics.hpp"
#include "cayley/error.hpp"
#include "cayley/jets.hpp"
#include "cayley/params.hpp"
#include "cayley/series.hpp"

namespace cayley {

/// Order of contact: exact value, or "at least cap" when matching reaches the
/// cap. Convention: order k means the jets agree through order k after
/// reparametrization, i.e. (k+1)-point contact.
struct ContactOrder {
    int value;
    bool at_least;

    static ContactOrder exactly(int k) { return {k, false}; }
    static ContactOrder bound(int cap) { return {cap, true}; }

    friend bool operator==(const ContactOrder&, const ContactOrder&) = default;

    /// >= k holds both for exact values >= k and for the at-least sentinel.
    bool reaches(int k) const { return value >= k; }
};

inline std::string to_string(const ContactOrder& o) {
    return o.at_least ? ">=" + std::to_string(o.value) : std::to_string(o.value);
}

/// Clamp a predicted order to a smaller matching cap so that engine output
/// and prediction stay comparable.
inline ContactOrder clamp_order(const ContactOrder& o, int cap) {
    if (o.value >= cap) return ContactOrder::bound(cap);
    return o;
}

struct MatchResult {
    ContactOrder order;
    /// First order at which matching failed, and the component witnessing it.
    std::optional<int> fail_order;
    std::optional<int> fail_component;
    /// Reparametrization coefficients phi[1..] determined before the failure.
    std::vector<Rational> phi;
};

/// Coefficient-by-coefficient matching. At order m the unknown phi_m enters
/// every component linearly through the component's linear coefficient, so a
/// regular second jet always pins phi_m; components with zero linear
/// coefficient contribute exact consistency constraints instead.
inline MatchResult match_jets(const Jet& j1, const Jet& j2, int cap = 5) {
    detail::require(cap >= 1, errc::invalid_parameter, "matching cap must be >= 1");
    detail::require(j1.kind == j2.kind && j1.chart == j2.chart &&
                        detail::proportional(j1.basepoint, j2.basepoint),
                    errc::incomparable_jets,
                    "jets must share basepoint and chart");
    int order = std::min(j1.order(), j2.order());
    detail::require(order >= cap + 1, errc::truncation,
                    "jet truncation order must exceed the matching cap");

    MatchResult res{ContactOrder::bound(cap), std::nullopt, std::nullopt, {}};
    Series phi(order);
    auto truncate_to = [order](const Series& s) {
        Series out(order);
        for (int k = 0; k <= order; ++k) out[k] = s[k];
        return out;
    };
    std::array<Series, 3> f{truncate_to(j1.comp[0]), truncate_to(j1.comp[1]),
                            truncate_to(j1.comp[2])};
    std::array<Series, 3> g{truncate_to(j2.comp[0]), truncate_to(j2.comp[1]),
                            truncate_to(j2.comp[2])};

    for (int m = 1; m <= cap; ++m) {
        // base_l = coefficient of s^m of g_l(phi) with phi_m..cap still zero
        std::array<Rational, 3> base;
        std::array<Rational, 3> lin;
        for (int l = 0; l < 3; ++l) {
            base[l] = compose(g[l], phi)[m];
            lin[l] = g[l][1];
        }
        int pivot = -1;
        for (int l = 0; l < 3; ++l)
            if (lin[l] != 0) { pivot = l; break; }
        detail::require(pivot >= 0, errc::internal, "irregular jet escaped validation");
        Rational phi_m = (f[pivot][m] - base[pivot]) / lin[pivot];
        bool ok = !(m == 1 && phi_m == 0);  // reparametrization must be regular
        int bad_component = pivot;
        if (ok) {
            for (int l = 0; l < 3; ++l) {
                if (f[l][m] != base[l] + lin[l] * phi_m) {
                    ok = false;
                    bad_component = l;
                    break;
                }
            }
        }
        if (!ok) {
            res.order = ContactOrder::exactly(m - 1);
            res.fail_order = m;
            res.fail_component = bad_component;
            return res;
        }
        phi[m] = phi_m;
        res.phi.push_back(phi_m);
    }
    return res;
}

inline ContactOrder contact_order(const Jet& j1, const Jet& j2, int cap = 5) {
    return match_jets(j1, j2, cap).order;
}

inline ContactOrder curve_contact_order(const CubicParams& p, const CubicParams& q, int cap = 5) {
    int order = std::max(default_jet_order, cap + 2);
    return contact_order(curve_jet_at_U(p, order), curve_jet_at_U(q, order), cap);
}

inline ContactOrder dual_contact_order(const CubicParams& p, const CubicParams& q, int cap = 5) {
    int order = std::max(default_jet_order, cap + 2);
    return contact_order(dual_jet_at_omega(p, order), dual_jet_at_omega(q, order), cap);
}

// ---- classification of the family: predicted orders at U and omega ----

/// Contact order at U predicted by the classification: order >= 2 iff
/// beta = beta' or beta = 3 - beta'; >= 3 iff (beta = beta' and gamma =
/// gamma') or beta = beta' = 3/2; >= 4 iff beta = beta' = 3/2 and gamma =
/// gamma'; >= 5 only for identical curves.
inline ContactOrder predicted_contact_order(const CubicParams& p, const CubicParams& q) {
    if (p == q) return ContactOrder::bound(5);
    const Rational three_half(3, 2);
    bool same_beta = p.beta == q.beta;
    bool mirrored = p.beta == 3 - q.beta;
    bool same_gamma = p.gamma == q.gamma;
    if (same_beta && p.beta == three_half && same_gamma) return ContactOrder::exactly(4);
    if ((same_beta && same_gamma) || (same_beta && p.beta == three_half))
        return ContactOrder::exactly(3);
    if (same_beta || mirrored) return ContactOrder::exactly(2);
    return ContactOrder::exactly(1);
}

/// Dual contact order at omega predicted by the classification: order >= 2
/// iff beta = beta'; >= 3 iff (beta = beta' and gamma = gamma') or beta =
/// beta' = 5/2; >= 4 iff beta = beta' = 7/3 and gamma = gamma'.
inline ContactOrder predicted_dual_contact_order(const CubicParams& p, const CubicParams& q) {
    if (p == q) return ContactOrder::bound(5);
    const Rational five_half(5, 2), seven_third(7, 3);
    bool same_beta = p.beta == q.beta;
    bool same_gamma = p.gamma == q.gamma;
    if (same_beta && p.beta == seven_third && same_gamma) return ContactOrder::exactly(4);
    if ((same_beta && same_gamma) || (same_beta && p.beta == five_half))
        return ContactOrder::exactly(3);
    if (same_beta) return ContactOrder::exactly(2);
    return ContactOrder::exactly(1);
}

// ---- plane conics: branches and intersection multiplicity ----

/// Affine branch of a conic through p, smooth there: coordinates
/// (x(t), y(t)) of the branch in the shifted chart, with x or y equal to t.
struct ConicBranch {
    int chart;               // dehomogenizing index (last nonzero coordinate of p)
    std::array<int, 2> axes; // the two affine coordinate indices
    Series x, y;
};

namespace detail {

/// Quadratic in the shifted affine coordinates (xi, eta) around p:
/// coefficients q[i][j] of xi^i eta^j, i + j <= 2.
struct ShiftedQuadratic {
    std::array<std::array<Rational, 3>, 3> q{};
};

inline ShiftedQuadratic shift_conic(const Conic& c, int chart, const Rational& pa,
                                    const Rational& pb) {
    std::array<int, 2> axes{};
    int k = 0;
    for (int i = 0; i < 3; ++i)
        if (i != chart) axes[static_cast<std::size_t>(k++)] = i;
    // x[i] as linear polynomials in (xi, eta)
    struct Lin { Rational c0, cx, cy; };
    std::array<Lin, 3> x;
    for (int i = 0; i < 3; ++i) {
        if (i == chart) x[static_cast<std::size_t>(i)] = {1, 0, 0};
        else if (i == axes[0]) x[static_cast<std::size_t>(i)] = {pa, 1, 0};
        else x[static_cast<std::size_t>(i)] = {pb, 0, 1};
    }
    ShiftedQuadratic out;
    auto add_product = [&](int i, int j, const Rational& w) {
        if (w == 0) return;
        const Lin &u = x[static_cast<std::size_t>(i)], &v = x[static_cast<std::size_t>(j)];
        const std::array<std::array<Rational, 3>, 3> grid_u{
            std::array<Rational, 3>{u.c0, u.cy, 0}, std::array<Rational, 3>{u.cx, 0, 0},
            std::array<Rational, 3>{0, 0, 0}};
        const std::array<std::array<Rational, 3>, 3> grid_v{
            std::array<Rational, 3>{v.c0, v.cy, 0}, std::array<Rational, 3>{v.cx, 0, 0},
            std::array<Rational, 3>{0, 0, 0}};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int d = 0; d < 2; ++d)
                    for (int e = 0; e < 2; ++e)
                        out.q[static_cast<std::size_t>(a + d)][static_cast<std::size_t>(b + e)] +=
                            w * grid_u[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                            grid_v[static_cast<std::size_t>(d)][static_cast<std::size_t>(e)];
    };
    add_product(0, 0, c[0]);
    add_product(1, 1, c[1]);
    add_product(2, 2, c[2]);
    add_product(0, 1, c[3]);
    add_product(0, 2, c[4]);
    add_product(1, 2, c[5]);
    return out;
}

inline Series eval_shifted(const ShiftedQuadratic& f, const Series& xi, const Series& eta) {
    int order = xi.order();
    Series out(order);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            const Rational& w = f.q[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (w == 0) continue;
            Series term(order);
            term[0] = 1;
            for (int k = 0; k < a; ++k) term = term * xi;
            for (int k = 0; k < b; ++k) term = term * eta;
            out = out + w * term;
        }
    return out;
}

}  // namespace detail

/// Branch of the conic q through p (smooth there), solved as a graph over the
/// affine coordinate whose partial derivative does not vanish at p.
inline ConicBranch conic_branch(const Conic& c, const PlanarPoint& p, int order) {
    detail::require(conic_eval(c, p) == 0, errc::invalid_basepoint,
                    "basepoint does not lie on the conic");
    int chart = -1;
    for (int i = 2; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) { chart = i; break; }
    std::array<int, 2> axes{};
    int k = 0;
    for (int i = 0; i < 3; ++i)
        if (i != chart) axes[static_cast<std::size_t>(k++)] = i;
    Rational pa = p[static_cast<std::size_t>(axes[0])] / p[static_cast<std::size_t>(chart)];
    Rational pb = p[static_cast<std::size_t>(axes[1])] / p[static_cast<std::size_t>(chart)];
    auto f = detail::shift_conic(c, chart, pa, pb);
    const Rational &qa = f.q[1][0], &qb = f.q[0][1];
    detail::require(qa != 0 || qb != 0, errc::invalid_basepoint,
                    "conic is singular at the basepoint");
    Series t(order);
    t[1] = 1;
    if (qb != 0) {
        // eta = -(qa xi + q20 xi^2 + q11 xi eta + q02 eta^2) / qb, xi = t
        Series eta(order);
        for (int it = 0; it <= order; ++it) {
            Series rhs(order);
            rhs[1] = qa;
            if (order >= 2) rhs[2] = f.q[2][0];
            rhs = rhs + f.q[1][1] * (t * eta) + f.q[0][2] * (eta * eta);
            eta = (Rational(-1) / qb) * rhs;
        }
        return ConicBranch{chart, axes, t, eta};
    }
    Series xi(order);
    for (int it = 0; it <= order; ++it) {
        Series rhs(order);
        if (order >= 2) rhs[2] = f.q[0][2];
        rhs = rhs + f.q[1][1] * (xi * t) + f.q[2][0] * (xi * xi);
        xi = (Rational(-1) / qa) * rhs;
    }
    return ConicBranch{chart, axes, xi, t};
}

/// Intersection multiplicity of two distinct conics at a common smooth point:
/// the branch of the first is substituted into the second; the result is the
/// order of vanishing. Bounded by 4 for conics without a common component.
inline int planar_intersection_multiplicity(const Conic& c1, const Conic& c2,
                                            const PlanarPoint& p) {
    detail::require(conic_eval(c1, p) == 0 && conic_eval(c2, p) == 0, errc::invalid_basepoint,
                    "basepoint must lie on both conics");
    detail::require(!proj_eq(c1, c2), errc::identical_curve,
                    "intersection multiplicity of identical conics is undefined");
    const int order = 9;  // > 2 * deg(c1) * deg(c2), enough to expose a common component
    ConicBranch branch = conic_branch(c1, p, order);
    int chart = branch.chart;
    Rational pa = p[static_cast<std::size_t>(branch.axes[0])] / p[static_cast<std::size_t>(chart)];
    Rational pb = p[static_cast<std::size_t>(branch.axes[1])] / p[static_cast<std::size_t>(chart)];
    auto f2 = detail::shift_conic(c2, chart, pa, pb);
    Series r = detail::eval_shifted(f2, branch.x, branch.y);
    for (int m = 0; m <= order; ++m)
        if (r[m] != 0) return m;
    throw error(errc::identical_curve, "conics share a component through the basepoint");
}

}  // namespace cayley
