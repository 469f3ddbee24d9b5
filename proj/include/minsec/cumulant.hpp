#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minsec/minuscule.hpp"
#include "minsec/polynomial.hpp"
#include "minsec/sampling.hpp"

namespace minsec {

// The affine chart of a minuscule family carries three coordinate systems:
// the chart coordinates x read off the weight basis, and the two triangular
// changes y and z below. Degree-one coordinates coincide in all three.
class Chart {
public:
    explicit Chart(const MinusculeFamily& fam) : fam_(fam) {
        for (const WeightIndex& w : minsec::weights(fam))
            if (weight_degree(fam, w) >= 1) weights_.push_back(w);
    }

    const MinusculeFamily& family() const { return fam_; }
    const std::vector<WeightIndex>& coordinate_weights() const { return weights_; }

    Variable var(VarKind kind, const WeightIndex& w) const {
        std::vector<int> idx;
        int d = weight_degree(fam_, w);
        if (fam_.kind() == FamilyKind::TypeA) {
            idx = {0, d};
            for (int r : bits_of(w.rows)) idx.push_back(r);
            for (int c : bits_of(w.cols)) idx.push_back(c);
        } else {
            idx = {1, d};
            for (int s : bits_of(w.rows)) idx.push_back(s);
        }
        return Variable(kind, idx.begin(), idx.end());
    }

    SparsePolynomial var_poly(VarKind kind, const WeightIndex& w) const {
        return SparsePolynomial::variable(var(kind, w));
    }

    // The weight of one degree-one root.
    WeightIndex root_weight(const Root& r) const {
        if (fam_.kind() == FamilyKind::TypeA) return {1u << (r.first - 1), 1u << (r.second - 1)};
        return {(1u << (r.first - 1)) | (1u << (r.second - 1)), 0};
    }

    // Nilpotent element whose entries are the degree-one chart coordinates.
    NilpotentElement coordinate_nilpotent(VarKind kind) const {
        std::map<Root, SparsePolynomial> entries;
        for (const Root& r : all_roots(fam_)) entries[r] = var_poly(kind, root_weight(r));
        return NilpotentElement(fam_, entries);
    }

private:
    MinusculeFamily fam_;
    std::vector<WeightIndex> weights_;
};

using CoordinateMap = std::map<WeightIndex, SparsePolynomial>;

namespace detail {

inline std::vector<std::vector<int>> compositions(int total, int min_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = min_part; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p);
            cur.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

}  // namespace detail

// First change of coordinates: for every weight of degree above one,
//   y_w = sum over ordered splittings w = g1 + g2 of
//         (-1)^deg(g2) m(g1, g2) x_{g1} det_{g2}(degree-one coordinates),
// with x of the zero weight read as 1. The map is unitriangular: x_w itself
// appears with coefficient 1 and every other term involves strictly lower
// degrees.
inline CoordinateMap x_to_y(const Chart& chart) {
    const MinusculeFamily& fam = chart.family();
    NilpotentElement coords = chart.coordinate_nilpotent(VarKind::ChartX);
    CoordinateMap out;
    for (const WeightIndex& w : chart.coordinate_weights()) {
        int d = weight_degree(fam, w);
        if (d == 1) {
            out[w] = chart.var_poly(VarKind::ChartX, w);
            continue;
        }
        SparsePolynomial y;
        for (int d2 = 0; d2 <= d; ++d2) {
            minsec::detail::for_each_ordered_decomposition(
                fam, w, {d - d2, d2}, [&](const std::vector<WeightIndex>& parts) {
                    Rational m = compat_m(fam, parts);
                    SparsePolynomial x1 = weight_degree(fam, parts[0]) == 0
                                              ? SparsePolynomial::constant(1)
                                              : chart.var_poly(VarKind::ChartX, parts[0]);
                    SparsePolynomial det2 = gen_det(fam, parts[1], coords);
                    SparsePolynomial term = SparsePolynomial::constant(m) * x1 * det2;
                    y += d2 % 2 == 0 ? term : -term;
                });
        }
        out[w] = y;
    }
    return out;
}

// Second change: for degree above one,
//   z_w = sum over ordered decompositions into parts of degree >= 2 of
//         (-1)^(number of parts) / multinomial * m(parts) * prod y_parts.
// The diagonal coefficient is -1 in every degree >= 2 (the one-part
// decomposition), +1 in degree one where z = y.
inline CoordinateMap y_to_z(const Chart& chart) {
    const MinusculeFamily& fam = chart.family();
    CoordinateMap out;
    for (const WeightIndex& w : chart.coordinate_weights()) {
        int d = weight_degree(fam, w);
        if (d == 1) {
            out[w] = chart.var_poly(VarKind::ChartY, w);
            continue;
        }
        SparsePolynomial z;
        for (const auto& degrees : detail::compositions(d, 2)) {
            Rational scale = make_rational(degrees.size() % 2 == 0 ? 1 : -1, 1) / Rational(multinomial(degrees));
            minsec::detail::for_each_ordered_decomposition(
                fam, w, degrees, [&](const std::vector<WeightIndex>& parts) {
                    SparsePolynomial prod = SparsePolynomial::constant(scale * compat_m(fam, parts));
                    for (const WeightIndex& p : parts) prod *= chart.var_poly(VarKind::ChartY, p);
                    z += prod;
                });
        }
        out[w] = z;
    }
    return out;
}

// Inverts a degree-filtered triangular coordinate change by back
// substitution. `fwd` expresses the new coordinate of each weight in the old
// variables; the result expresses the old coordinate in the new variables.
inline CoordinateMap invert_triangular(const Chart& chart, const CoordinateMap& fwd, VarKind old_kind,
                                       VarKind new_kind) {
    const MinusculeFamily& fam = chart.family();
    std::vector<WeightIndex> order = chart.coordinate_weights();  // already degree-ascending
    CoordinateMap inv;
    std::map<Variable, SparsePolynomial> bindings;  // old variable -> expression in new
    for (const WeightIndex& w : order) {
        const SparsePolynomial& f = fwd.at(w);
        Variable self = chart.var(old_kind, w);
        Rational diag = f.coefficient_of({{self, 1}});
        if (diag == 0) throw std::invalid_argument("invert_triangular: vanishing diagonal coefficient");
        SparsePolynomial rest = f - diag * SparsePolynomial::variable(self);
        int d = weight_degree(fam, w);
        for (const Variable& v : rest.variables()) {
            if (v.kind() != old_kind) throw std::invalid_argument("invert_triangular: foreign variable");
            if (v.index(1) >= d) throw std::invalid_argument("invert_triangular: input not triangular");
        }
        SparsePolynomial expr =
            (chart.var_poly(new_kind, w) - rest.substitute(bindings)) * (Rational(1) / diag);
        inv[w] = expr;
        bindings[self] = expr;
    }
    return inv;
}

// P_k(t) = (-t)^k (1-t) + t (1-t)^k, the line-parameter polynomial of the
// secant parametrization in the second coordinate system.
inline SparsePolynomial p_poly(int k) {
    if (k < 1) throw std::invalid_argument("p_poly: k must be positive");
    SparsePolynomial t = SparsePolynomial::variable(var_t());
    SparsePolynomial one_minus = Rational(1) - t;
    return (-t).pow(k) * one_minus + t * one_minus.pow(k);
}

// P_k(t) prod (a_i - b_i) equals the signed subset expansion mixing the two
// endpoint products with the interpolated factors.
inline bool verify_comput_identity(int k) {
    if (k < 1) throw std::invalid_argument("verify_comput_identity: k must be positive");
    SparsePolynomial t = SparsePolynomial::variable(var_t());
    auto a = [](int i) { return SparsePolynomial::variable(Variable(VarKind::NilA, {i})); };
    auto b = [](int i) { return SparsePolynomial::variable(Variable(VarKind::NilB, {i})); };

    SparsePolynomial lhs = p_poly(k);
    for (int i = 1; i <= k; ++i) lhs *= a(i) - b(i);

    SparsePolynomial rhs;
    for (std::uint32_t subset = 0; subset < (1u << k); ++subset) {
        SparsePolynomial prod_a = SparsePolynomial::constant(1), prod_b = prod_a;
        SparsePolynomial rest = SparsePolynomial::constant(1);
        int size = 0;
        for (int i = 1; i <= k; ++i) {
            if (subset & (1u << (i - 1))) {
                prod_a *= a(i);
                prod_b *= b(i);
                ++size;
            } else {
                rest *= t * a(i) + (Rational(1) - t) * b(i);
            }
        }
        SparsePolynomial term = (t * prod_a + (Rational(1) - t) * prod_b) * rest;
        rhs += (k - size) % 2 == 0 ? term : -term;
    }
    return lhs == rhs;
}

// The resolved overall sign of the secant parametrization in the third
// coordinate system, pinned by the degree-two base case z = -y.
inline constexpr int kSecantZSign = -1;

// Sum over ordered compositions with parts >= 2 of (-1)^(parts) prod P_di(t);
// equals kSecantZSign * t(1-t)(1-2t)^(d-2). Parts of size one drop out since
// P_1 = 0, so restricting to parts >= 2 loses nothing.
inline bool verify_composition_sum(int d) {
    if (d < 2) throw std::invalid_argument("verify_composition_sum: d must be at least 2");
    SparsePolynomial sum;
    for (const auto& comp : detail::compositions(d, 2)) {
        SparsePolynomial prod = SparsePolynomial::constant(comp.size() % 2 == 0 ? 1 : -1);
        for (int p : comp) prod *= p_poly(p);
        sum += prod;
    }
    SparsePolynomial t = SparsePolynomial::variable(var_t());
    SparsePolynomial rhs = SparsePolynomial::constant(kSecantZSign) * t * (Rational(1) - t) *
                           (Rational(1) - Rational(2) * t).pow(d - 2);
    return sum == rhs;
}

// The secant parametrization in all three coordinate systems, symbolically in
// the line parameter t and two generic nilpotent arguments.
struct SecantForms {
    CoordinateMap x, y, z;
};

inline SecantForms secant_in_coords(const Chart& chart) {
    const MinusculeFamily& fam = chart.family();
    NilpotentElement a(fam, VarKind::NilA), b(fam, VarKind::NilB);
    SparsePolynomial t = SparsePolynomial::variable(var_t());

    SecantForms forms;
    for (const WeightIndex& w : chart.coordinate_weights())
        forms.x[w] = t * gen_det(fam, w, a) + (Rational(1) - t) * gen_det(fam, w, b);

    std::map<Variable, SparsePolynomial> x_bind;
    for (const auto& [w, p] : forms.x) x_bind[chart.var(VarKind::ChartX, w)] = p;
    for (const auto& [w, p] : x_to_y(chart)) forms.y[w] = p.substitute(x_bind);

    std::map<Variable, SparsePolynomial> y_bind;
    for (const auto& [w, p] : forms.y) y_bind[chart.var(VarKind::ChartY, w)] = p;
    for (const auto& [w, p] : y_to_z(chart)) forms.z[w] = p.substitute(y_bind);
    return forms;
}

// Exact identities satisfied by the parametrization: in the second system
// y_w = P_d(t) det_w(A - B), and in the third
// z_w = kSecantZSign * t(1-t)(1-2t)^(d-2) det_w(A - B), both for d >= 2.
inline bool verify_seciny(const Chart& chart, const SecantForms& forms) {
    const MinusculeFamily& fam = chart.family();
    NilpotentElement a(fam, VarKind::NilA), b(fam, VarKind::NilB);
    NilpotentElement diff = a - b;
    for (const WeightIndex& w : chart.coordinate_weights()) {
        int d = weight_degree(fam, w);
        SparsePolynomial expected = d == 1 ? forms.x.at(w) : p_poly(d) * gen_det(fam, w, diff);
        if (!(forms.y.at(w) == expected)) return false;
    }
    return true;
}

inline bool verify_secinz(const Chart& chart, const SecantForms& forms) {
    const MinusculeFamily& fam = chart.family();
    NilpotentElement a(fam, VarKind::NilA), b(fam, VarKind::NilB);
    NilpotentElement diff = a - b;
    SparsePolynomial t = SparsePolynomial::variable(var_t());
    for (const WeightIndex& w : chart.coordinate_weights()) {
        int d = weight_degree(fam, w);
        SparsePolynomial expected =
            d == 1 ? forms.x.at(w)
                   : SparsePolynomial::constant(kSecantZSign) * t * (Rational(1) - t) *
                         (Rational(1) - Rational(2) * t).pow(d - 2) * gen_det(fam, w, diff);
        if (!(forms.z.at(w) == expected)) return false;
    }
    return true;
}

// Tangential parametrization in the third coordinate system: degree-one
// coordinates free, and for d >= 2 the coordinate is 2^(d-2) det_w(n), the
// limit of secant lines through nearby orbit points. The scaling constant
// is 1/4 after the reparametrization n -> 2n.
inline CoordinateMap tangent_in_z(const Chart& chart) {
    const MinusculeFamily& fam = chart.family();
    NilpotentElement n(fam, VarKind::NilN);
    CoordinateMap out;
    for (const WeightIndex& w : chart.coordinate_weights()) {
        int d = weight_degree(fam, w);
        if (d == 1) continue;  // free coordinates
        out[w] = SparsePolynomial::constant(pow_rational(Rational(2), d - 2)) * gen_det(fam, w, n);
    }
    return out;
}

// Pulls one quadratic relation of the small Grassmannian back through the
// coordinate change on the chart of G(2, n) at {1, 2} and compares with the
// six-index sub-Pfaffian of the skew matrix of chart coordinates. `four` is a
// sorted choice of four ambient indices above 2. Returns +1 or -1 for the
// matching sign, 0 on failure.
inline int pfaffian_pluecker_check(int n, const std::vector<int>& four) {
    MinusculeFamily fam = MinusculeFamily::type_a(2, n);
    Chart chart(fam);
    if (four.size() != 4) throw std::invalid_argument("pfaffian_pluecker_check: need four indices");
    for (int i : four)
        if (i <= 2 || i > n) throw std::invalid_argument("pfaffian_pluecker_check: indices must lie in 3..n");

    CoordinateMap y = x_to_y(chart);
    auto pair_weight = [&](int i, int j) {  // ambient indices above 2
        WeightIndex w{};
        w.rows = 0b11;
        w.cols = (1u << (i - 3)) | (1u << (j - 3));
        return w;
    };
    auto q = [&](int i, int j) { return y.at(pair_weight(i, j)); };
    SparsePolynomial pullback = q(four[0], four[1]) * q(four[2], four[3]) -
                                q(four[0], four[2]) * q(four[1], four[3]) +
                                q(four[0], four[3]) * q(four[1], four[2]);

    // Skew matrix of dehomogenized ambient coordinates on {1, 2} + four:
    // entry (1,2) is 1 and the rest are chart coordinates up to basis sign.
    auto deg1_weight = [&](int r, int c) {
        WeightIndex w{};
        w.rows = 1u << (r - 1);
        w.cols = 1u << (c - 3);
        return w;
    };
    std::function<SparsePolynomial(int, int)> entry = [&](int i, int j) -> SparsePolynomial {
        if (i > j) return -entry(j, i);
        if (i == 1 && j == 2) return SparsePolynomial::constant(1);
        WeightIndex w = i <= 2 ? deg1_weight(3 - i, j) : pair_weight(i, j);
        return SparsePolynomial::constant(basis_sign(fam, w)) * chart.var_poly(VarKind::ChartX, w);
    };
    std::vector<int> indices = {1, 2, four[0], four[1], four[2], four[3]};
    SparsePolynomial pf = detail::sub_pfaffian(entry, indices);
    if (pullback == pf) return 1;
    if (pullback == -pf) return -1;
    return 0;
}

// Sample-based check of the local product description of the secant: the
// degree-two coordinates of the third system land on the cone over the small
// Grassmannian (all quadratic relations vanish), degenerate samples land on
// the vertex, and for d_max = 3 the top coordinate dies at t = 1/2.
struct MainTheoremReport {
    int samples = 0;
    int quadric_count = 0;
    bool quadrics_ok = true;
    bool vertex_ok = true;
    bool endpoint_ok = true;
    bool half_ok = true;

    bool pass() const { return quadrics_ok && vertex_ok && endpoint_ok && half_ok; }
};

inline MainTheoremReport verify_main_theorem(const MinusculeFamily& fam, int samples, std::uint64_t seed) {
    if (fam.kind() != FamilyKind::TypeA || (fam.k() != 2 && !(fam.k() == 3 && fam.n() == 6)))
        throw std::invalid_argument("verify_main_theorem: supported families are A:2,n and A:3,6");
    Chart chart(fam);
    CoordinateMap xy = x_to_y(chart), yz = y_to_z(chart);
    NilpotentElement a(fam, VarKind::NilA), b(fam, VarKind::NilB);
    std::map<WeightIndex, SparsePolynomial> det_a, det_b;
    for (const WeightIndex& w : chart.coordinate_weights()) {
        det_a[w] = gen_det(fam, w, a);
        det_b[w] = gen_det(fam, w, b);
    }

    SampleRng rng(seed);
    MainTheoremReport report;
    report.samples = samples;

    auto z_values = [&](const Rational& t, const std::map<Variable, Rational>& entries)
        -> std::map<WeightIndex, Rational> {
        std::map<Variable, Rational> x_point, y_point;
        for (const WeightIndex& w : chart.coordinate_weights())
            x_point[chart.var(VarKind::ChartX, w)] =
                t * det_a.at(w).eval(entries) + (Rational(1) - t) * det_b.at(w).eval(entries);
        for (const auto& [w, p] : xy) y_point[chart.var(VarKind::ChartY, w)] = p.eval(x_point);
        std::map<WeightIndex, Rational> z;
        for (const auto& [w, p] : yz) z[w] = p.eval(y_point);
        return z;
    };

    auto random_entries = [&](bool equal_pair) {
        std::map<Variable, Rational> entries;
        for (const Root& r : all_roots(fam)) {
            Rational va = rng.next_rational();
            entries[Variable(VarKind::NilA, {r.first, r.second})] = va;
            entries[Variable(VarKind::NilB, {r.first, r.second})] = equal_pair ? va : rng.next_rational();
        }
        return entries;
    };

    // Quadratic relations among the degree-two coordinates: for k = 2 these
    // are the three-term relations of G(2, n-2); for k = 3 the small variety
    // has no quadratic relations and the list is empty.
    std::vector<std::array<WeightIndex, 6>> quadrics;
    if (fam.k() == 2) {
        int m = fam.n() - 2;
        auto pw = [&](int c1, int c2) {
            WeightIndex w{};
            w.rows = 0b11;
            w.cols = (1u << (c1 - 1)) | (1u << (c2 - 1));
            return w;
        };
        for (int a1 = 1; a1 <= m; ++a1)
            for (int a2 = a1 + 1; a2 <= m; ++a2)
                for (int a3 = a2 + 1; a3 <= m; ++a3)
                    for (int a4 = a3 + 1; a4 <= m; ++a4)
                        quadrics.push_back({pw(a1, a2), pw(a3, a4), pw(a1, a3), pw(a2, a4), pw(a1, a4), pw(a2, a3)});
    }
    report.quadric_count = static_cast<int>(quadrics.size());

    auto check_quadrics = [&](const std::map<WeightIndex, Rational>& z) {
        for (const auto& qd : quadrics) {
            Rational v = z.at(qd[0]) * z.at(qd[1]) - z.at(qd[2]) * z.at(qd[3]) + z.at(qd[4]) * z.at(qd[5]);
            if (v != 0) return false;
        }
        return true;
    };

    for (int s = 0; s < samples; ++s) {
        Rational t;
        do {
            t = rng.next_rational();
        } while (t == 0 || t == 1 || t == make_rational(1, 2));
        auto z = z_values(t, random_entries(false));
        if (!check_quadrics(z)) report.quadrics_ok = false;

        // Vertex: both nilpotent arguments equal kills every degree >= 2
        // coordinate; so do the endpoint parameters.
        auto zv = z_values(t, random_entries(true));
        for (const auto& [w, v] : zv)
            if (weight_degree(fam, w) >= 2 && v != 0) report.vertex_ok = false;
        for (Rational te : {Rational(0), Rational(1)}) {
            auto ze = z_values(te, random_entries(false));
            for (const auto& [w, v] : ze)
                if (weight_degree(fam, w) >= 2 && v != 0) report.endpoint_ok = false;
        }
        if (fam.d_max() >= 3) {
            auto zh = z_values(make_rational(1, 2), random_entries(false));
            for (const auto& [w, v] : zh)
                if (weight_degree(fam, w) >= 3 && v != 0) report.half_ok = false;
        }
    }
    return report;
}

// Verifies tangent_in_z against the secant-line limit: substitute the second
// endpoint a + eps*n, set t = 1/eps and let eps go to zero. With t^j eps^i
// contributing eps^(i-j), the limit exists iff every negative power cancels,
// and the surviving power-zero part must equal the claimed parametrization.
inline bool verify_tangent_limit(const Chart& chart) {
    const MinusculeFamily& fam = chart.family();
    NilpotentElement a(fam, VarKind::NilA), n(fam, VarKind::NilN);
    SparsePolynomial eps = SparsePolynomial::variable(var_eps());
    std::map<Root, SparsePolynomial> moved;
    for (const Root& r : all_roots(fam)) moved[r] = a.entry(r.first, r.second) + eps * n.entry(r.first, r.second);
    NilpotentElement b(fam, moved);

    SparsePolynomial t = SparsePolynomial::variable(var_t());
    CoordinateMap x_line;
    for (const WeightIndex& w : chart.coordinate_weights())
        x_line[w] = t * gen_det(fam, w, a) + (Rational(1) - t) * gen_det(fam, w, b);
    std::map<Variable, SparsePolynomial> x_bind;
    for (const auto& [w, p] : x_line) x_bind[chart.var(VarKind::ChartX, w)] = p;
    CoordinateMap y_line;
    for (const auto& [w, p] : x_to_y(chart)) y_line[w] = p.substitute(x_bind);
    std::map<Variable, SparsePolynomial> y_bind;
    for (const auto& [w, p] : y_line) y_bind[chart.var(VarKind::ChartY, w)] = p;

    CoordinateMap claimed = tangent_in_z(chart);
    for (const auto& [w, zp] : y_to_z(chart)) {
        int d = weight_degree(fam, w);
        if (d < 2) continue;
        SparsePolynomial z_line = zp.substitute(y_bind);
        // Bucket the terms of z_line(t -> 1/eps) by their eps power.
        std::map<int, SparsePolynomial> buckets;
        for (const auto& [m, c] : z_line.terms()) {
            int tpow = 0, epow = 0;
            Monomial rest;
            for (const auto& [v, e] : m) {
                if (v == var_t())
                    tpow = e;
                else if (v == var_eps())
                    epow = e;
                else
                    rest.emplace_back(v, e);
            }
            buckets[epow - tpow] += SparsePolynomial::term(c, rest);
        }
        for (const auto& [p, poly] : buckets) {
            if (p < 0 && !poly.is_zero()) return false;  // pole: no limit
        }
        SparsePolynomial limit = buckets.count(0) ? buckets[0] : SparsePolynomial();
        if (!(limit == claimed.at(w))) return false;
    }
    return true;
}

}  // namespace minsec
