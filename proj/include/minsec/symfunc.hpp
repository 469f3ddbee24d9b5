#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minsec/partition.hpp"
#include "minsec/polynomial.hpp"

namespace minsec {

enum class InnerFunctor { Sym, Wedge };

// A symmetric polynomial in x_1..x_d. Symmetry is a promise of the
// constructing operation, checkable via is_symmetric().
struct SymmetricExpression {
    SparsePolynomial poly;
    int nvars = 0;
};

inline bool is_symmetric(const SymmetricExpression& f) {
    for (int i = 1; i < f.nvars; ++i) {
        std::map<Variable, SparsePolynomial> swap_i;
        swap_i[sym_x(i)] = SparsePolynomial::variable(sym_x(i + 1));
        swap_i[sym_x(i + 1)] = SparsePolynomial::variable(sym_x(i));
        if (!(f.poly.substitute(swap_i) == f.poly)) return false;
    }
    return true;
}

// Complete homogeneous symmetric polynomial of degree k in x_1^a .. x_d^a.
inline SymmetricExpression h_power(int k, int a, int d) {
    if (k < 0 || a < 1 || d < 1) throw std::invalid_argument("h_power: bad arguments");
    SparsePolynomial p;
    std::vector<int> exps(static_cast<std::size_t>(d), 0);
    auto rec = [&](auto&& self, int var, int rest) -> void {
        if (var == d) {
            if (rest != 0) return;
            Monomial m;
            for (int i = 0; i < d; ++i)
                if (exps[static_cast<std::size_t>(i)] > 0)
                    m.emplace_back(sym_x(i + 1), a * exps[static_cast<std::size_t>(i)]);
            p += SparsePolynomial::term(Rational(1), m);
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            exps[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, rest - e);
        }
        exps[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, k);
    return {p, d};
}

// Elementary symmetric polynomial of degree k in x_1^a .. x_d^a.
inline SymmetricExpression e_power(int k, int a, int d) {
    if (k < 0 || a < 1 || d < 1) throw std::invalid_argument("e_power: bad arguments");
    SparsePolynomial p;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int next, int rest) -> void {
        if (rest == 0) {
            Monomial m;
            for (int i : pick) m.emplace_back(sym_x(i), a);
            p += SparsePolynomial::term(Rational(1), m);
            return;
        }
        for (int i = next; i <= d - rest + 1; ++i) {
            pick.push_back(i);
            self(self, i + 1, rest - 1);
            pick.pop_back();
        }
    };
    if (k <= d) rec(rec, 1, k);
    return {p, d};
}

namespace detail {

// Packed representation of polynomials in x_1..x_d with bounded exponents:
// the whole exponent vector lives in one machine word, so term products are
// key additions and accumulation hashes integers. Used for the large
// character products, where ordered maps with vector keys dominate the cost.
struct PackedPoly {
    int d = 0;
    int bits = 0;
    std::vector<std::pair<std::uint64_t, Rational>> terms;  // unordered

    static bool fits(int d, int max_total_degree) {
        int bits = 1;
        while ((1 << bits) <= max_total_degree) ++bits;
        return d * bits <= 60;
    }

    static PackedPoly pack(const SparsePolynomial& p, int d, int max_total_degree) {
        PackedPoly out;
        out.d = d;
        out.bits = 1;
        while ((1 << out.bits) <= max_total_degree) ++out.bits;
        out.terms.reserve(p.term_count());
        for (const auto& [m, c] : p.terms()) {
            std::uint64_t key = 0;
            for (const auto& [var, e] : m)
                key |= static_cast<std::uint64_t>(e) << (out.bits * (var.index(0) - 1));
            out.terms.emplace_back(key, c);
        }
        return out;
    }

    SparsePolynomial unpack() const {
        std::uint64_t mask = (std::uint64_t(1) << bits) - 1;
        std::vector<std::pair<Monomial, Rational>> rows;
        rows.reserve(terms.size());
        for (const auto& [key, c] : terms) {
            Monomial m;
            for (int i = 1; i <= d; ++i) {
                int e = static_cast<int>((key >> (bits * (i - 1))) & mask);
                if (e > 0) m.emplace_back(sym_x(i), e);
            }
            rows.emplace_back(std::move(m), c);
        }
        return SparsePolynomial::from_terms(std::move(rows));
    }
};

inline PackedPoly packed_mul(const PackedPoly& a, const PackedPoly& b) {
    PackedPoly out;
    out.d = a.d;
    out.bits = a.bits;
    std::unordered_map<std::uint64_t, Rational> acc;
    acc.reserve(std::min<std::size_t>(a.terms.size() * b.terms.size(), std::size_t(1) << 22));
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            Rational prod = ca * cb;
            auto [it, inserted] = acc.try_emplace(ka + kb, std::move(prod));
            if (!inserted) it->second += prod;
        }
    out.terms.reserve(acc.size());
    for (auto& [key, c] : acc)
        if (c != 0) out.terms.emplace_back(key, std::move(c));
    return out;
}

// Product of the h/e factors for one conjugacy class, in packed form when the
// packing fits.
inline std::optional<PackedPoly> packed_psi(const Partition& alpha, int k, int d, InnerFunctor inner) {
    int total = k * alpha.weight();
    if (!PackedPoly::fits(d, total)) return std::nullopt;
    std::optional<PackedPoly> cur;
    for (int part : alpha.parts()) {
        SymmetricExpression f = inner == InnerFunctor::Sym ? h_power(k, part, d) : e_power(k, part, d);
        PackedPoly packed = PackedPoly::pack(f.poly, d, total);
        cur = cur ? packed_mul(*cur, packed) : std::move(packed);
    }
    if (!cur) cur = PackedPoly::pack(SparsePolynomial::constant(1), d, total);
    return cur;
}

}  // namespace detail

// Product over the parts of alpha of h_k (or e_k) at power-substituted
// variables.
inline SymmetricExpression psi_alpha(const Partition& alpha, int k, int d,
                                     InnerFunctor inner = InnerFunctor::Sym) {
    alpha.require(Convention::Rows, "psi_alpha");
    if (auto packed = detail::packed_psi(alpha, k, d, inner)) return {packed->unpack(), d};
    SparsePolynomial p = SparsePolynomial::constant(1);
    for (int part : alpha.parts()) {
        SymmetricExpression f = inner == InnerFunctor::Sym ? h_power(k, part, d) : e_power(k, part, d);
        p *= f.poly;
    }
    return {p, d};
}

namespace detail {

// Character tables of the symmetric groups S_1..S_4, keyed by
// (irreducible label, conjugacy class), both as partitions in a fixed order.
// This covers outer functors of weight up to 4.
struct SnCharacters {
    std::vector<std::vector<int>> classes;   // class labels
    std::vector<long long> class_sizes;
    std::map<std::vector<int>, std::vector<long long>> rows;  // irrep -> values per class
};

inline const SnCharacters& sn_characters(int n) {
    static const std::map<int, SnCharacters> tables = [] {
        std::map<int, SnCharacters> t;
        t[1] = {{{1}}, {1}, {{{1}, {1}}}};
        t[2] = {{{1, 1}, {2}}, {1, 1}, {{{2}, {1, 1}}, {{1, 1}, {1, -1}}}};
        t[3] = {{{1, 1, 1}, {2, 1}, {3}},
                {1, 3, 2},
                {{{3}, {1, 1, 1}}, {{2, 1}, {2, 0, -1}}, {{1, 1, 1}, {1, -1, 1}}}};
        t[4] = {{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}},
                {1, 6, 3, 8, 6},
                {{{4}, {1, 1, 1, 1, 1}},
                 {{3, 1}, {3, 1, -1, 0, -1}},
                 {{2, 2}, {2, 0, 2, -1, 0}},
                 {{2, 1, 1}, {3, -1, -1, 0, 1}},
                 {{1, 1, 1, 1}, {1, -1, 1, 1, -1}}}};
        return t;
    }();
    auto it = tables.find(n);
    if (it == tables.end())
        throw std::invalid_argument("plethysm outer degree " + std::to_string(n) + " unsupported (max 4)");
    return it->second;
}

}  // namespace detail

// Character polynomial of S^mu(S^k C^d) or S^mu(W^k C^d) (wedge), as the
// signed class-weighted sum of psi_alpha over conjugacy classes of S_n.
inline SymmetricExpression plethysm_character(const Partition& mu, int k, InnerFunctor inner, int d) {
    mu.require(Convention::Rows, "plethysm_character");
    int n = mu.weight();
    if (n < 1) throw std::invalid_argument("plethysm_character: outer functor must have positive weight");
    const auto& tab = detail::sn_characters(n);
    auto row = tab.rows.find(mu.parts());
    if (row == tab.rows.end()) throw std::invalid_argument("plethysm_character: unknown outer diagram");
    Integer nfact = factorial(n);
    auto class_coeff = [&](std::size_t c) {
        return make_rational(Integer(tab.class_sizes[c]) * Integer(row->second[c]), nfact);
    };
    if (detail::PackedPoly::fits(d, n * k)) {
        std::unordered_map<std::uint64_t, Rational> acc;
        detail::PackedPoly sum;
        sum.d = d;
        for (std::size_t c = 0; c < tab.classes.size(); ++c) {
            Rational coeff = class_coeff(c);
            if (coeff == 0) continue;
            auto psi = detail::packed_psi(Partition::rows(tab.classes[c]), k, d, inner);
            sum.bits = psi->bits;
            for (auto& [key, v] : psi->terms) {
                Rational scaled = coeff * v;
                auto [it, inserted] = acc.try_emplace(key, std::move(scaled));
                if (!inserted) it->second += scaled;
            }
        }
        sum.terms.reserve(acc.size());
        for (auto& [key, v] : acc)
            if (v != 0) sum.terms.emplace_back(key, std::move(v));
        return {sum.unpack(), d};
    }
    SparsePolynomial p;
    for (std::size_t c = 0; c < tab.classes.size(); ++c) {
        Rational coeff = class_coeff(c);
        if (coeff == 0) continue;
        p += coeff * psi_alpha(Partition::rows(tab.classes[c]), k, d, inner).poly;
    }
    return {p, d};
}

namespace detail {

// Terms of a polynomial in x_1..x_r as dense exponent rows, sorted
// lexicographically for prefix narrowing.
struct DenseTerms {
    int r;
    std::vector<std::vector<int>> exps;
    std::vector<Rational> coeffs;

    DenseTerms(const SparsePolynomial& f, int r_) : r(r_) {
        std::vector<std::pair<std::vector<int>, Rational>> rows;
        rows.reserve(f.terms().size());
        for (const auto& [m, c] : f.terms()) {
            std::vector<int> e(static_cast<std::size_t>(r), 0);
            for (const auto& [v, k] : m) {
                if (v.kind() != VarKind::SymX || v.index(0) < 1 || v.index(0) > r)
                    throw std::invalid_argument("expected a polynomial in x_1..x_r");
                e[static_cast<std::size_t>(v.index(0) - 1)] = k;
            }
            rows.emplace_back(std::move(e), c);
        }
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [e, c] : rows) {
            exps.push_back(std::move(e));
            coeffs.push_back(c);
        }
    }
};

// Coefficient of the staircase-shifted monomial x^(lam + delta) in
// f * prod_{i<j}(x_i - x_j), evaluated as the signed permutation sum
// sum_tau sgn(tau) [x^e(tau)] f with e_i = lam_i - i + tau(i), pruned along
// the sorted term list instead of expanding the product.
inline Rational staircase_coefficient(const DenseTerms& terms, const Partition& lam) {
    const int r = terms.r;
    Rational total(0);
    std::vector<bool> used(static_cast<std::size_t>(r) + 1, false);
    auto rec = [&](auto&& self, int i, std::size_t lo, std::size_t hi, int inversions) -> void {
        if (i == r) {
            if (lo < hi) total += (inversions % 2 == 0 ? terms.coeffs[lo] : -terms.coeffs[lo]);
            return;
        }
        for (int j = 1; j <= r; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            int e = lam.part(i + 1) - (i + 1) + j;
            if (e < 0) continue;
            // Narrow to terms whose i-th exponent equals e.
            std::size_t nlo = lo, nhi = hi;
            {
                std::size_t a = lo, b = hi;
                while (a < b) {
                    std::size_t mid = (a + b) / 2;
                    if (terms.exps[mid][static_cast<std::size_t>(i)] < e) a = mid + 1; else b = mid;
                }
                nlo = a;
                a = nlo, b = hi;
                while (a < b) {
                    std::size_t mid = (a + b) / 2;
                    if (terms.exps[mid][static_cast<std::size_t>(i)] <= e) a = mid + 1; else b = mid;
                }
                nhi = a;
            }
            if (nlo == nhi) continue;
            int inv = 0;
            for (int j2 = j + 1; j2 <= r; ++j2)
                if (used[static_cast<std::size_t>(j2)]) ++inv;
            used[static_cast<std::size_t>(j)] = true;
            self(self, i + 1, nlo, nhi, inversions + inv);
            used[static_cast<std::size_t>(j)] = false;
        }
    };
    rec(rec, 0, 0, terms.exps.size(), 0);
    return total;
}

}  // namespace detail

// Schur expansion by alternant extraction: multiply by the Vandermonde
// product in exactly max_rows variables and read staircase coefficients.
// Beyond four variables the product is never expanded; its coefficients are
// taken term by term through the permutation sum.
inline IsotypicTable schur_expand(const SymmetricExpression& f, int max_rows,
                                  std::string ambient = "") {
    if (f.nvars < max_rows)
        throw std::invalid_argument("schur_expand: need at least max_rows variables");
    if (!f.poly.is_homogeneous()) throw std::invalid_argument("schur_expand: input not homogeneous");
    const int r = max_rows;

    SparsePolynomial g = f.poly;
    if (f.nvars > r) {
        std::map<Variable, SparsePolynomial> kill;
        for (int i = r + 1; i <= f.nvars; ++i) kill[sym_x(i)] = SparsePolynomial();
        g = g.substitute(kill);
    }
    IsotypicTable table(Convention::Rows, std::move(ambient));
    if (g.is_zero()) return table;
    int deg = g.total_degree();

    auto record = [&](const Partition& lam, const Rational& c) {
        if (c == 0) return;
        Integer num = numerator(c), den = denominator(c);
        if (den != 1) throw std::logic_error("schur_expand: non-integral multiplicity");
        table.add(lam, num.convert_to<long long>());
    };

    if (r <= 4) {
        SparsePolynomial alternant = SparsePolynomial::constant(1);
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j)
                alternant *= SparsePolynomial::variable(sym_x(i)) - SparsePolynomial::variable(sym_x(j));
        g *= alternant;
        for (auto& parts : partitions_of(deg, r)) {
            Partition lam = Partition::rows(parts);
            Monomial m;
            for (int i = 1; i <= r; ++i) {
                int e = lam.part(i) + r - i;
                if (e > 0) m.emplace_back(sym_x(i), e);
            }
            record(lam, g.coefficient_of(m));
        }
    } else {
        detail::DenseTerms terms(g, r);
        for (auto& parts : partitions_of(deg, r)) {
            Partition lam = Partition::rows(parts);
            record(lam, detail::staircase_coefficient(terms, lam));
        }
    }
    return table;
}

// Transpose-duality on decomposition tables: for even inner degree the
// diagrams are transposed in place; for odd inner degree the table describes
// the conjugate outer functor, again with transposed diagrams.
inline IsotypicTable apply_duality(const IsotypicTable& table, int k_parity) {
    IsotypicTable out(table.convention(), table.ambient());
    for (const auto& [p, m] : table.entries()) out.add(p.transpose(), m);
    if (k_parity % 2 != 0 && !out.ambient().empty()) out.set_ambient(out.ambient() + " (conjugate outer functor)");
    return out;
}

// Multiplicity of one target diagram lam inside S^mu(S^k) or S^mu(/\^k),
// computed on whichever side of transpose duality needs fewer variables.
inline long long plethysm_multiplicity(const Partition& lam, const Partition& mu, int k,
                                       InnerFunctor inner) {
    lam.require(Convention::Rows, "plethysm_multiplicity");
    mu.require(Convention::Rows, "plethysm_multiplicity");
    if (lam.weight() != k * mu.weight()) return 0;
    if (k == 0) return lam.empty() ? 1 : 0;

    Partition target = lam;
    Partition outer = mu;
    InnerFunctor side = inner;
    // Dual route: S^mu(S^k) ~ S^{mu or mu'}(/\^k) with transposed diagrams,
    // the outer functor conjugated when k is odd.
    int direct_vars = lam.length();
    int dual_vars = lam.part(1);
    if (dual_vars < direct_vars) {
        target = lam.transpose();
        side = inner == InnerFunctor::Sym ? InnerFunctor::Wedge : InnerFunctor::Sym;
        if (k % 2 != 0) outer = mu.transpose();
    }
    int d = std::max(1, target.length());
    SymmetricExpression ch = plethysm_character(outer, k, side, d);
    if (ch.poly.is_zero()) return 0;

    detail::DenseTerms terms(ch.poly, d);
    Rational c = detail::staircase_coefficient(terms, target);
    Integer num = numerator(c), den = denominator(c);
    if (den != 1) throw std::logic_error("plethysm_multiplicity: non-integral coefficient");
    return num.convert_to<long long>();
}

}  // namespace minsec
