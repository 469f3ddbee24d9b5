#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minsec/polynomial.hpp"

namespace minsec {

// The two computable families of minuscule-cominuscule data: type A with the
// chart of a Grassmannian of k-planes in n-space (generic k x (n-k) matrices,
// generalized determinants = minors), and type D with the chart of a spinor
// variety (generic skew n x n matrices, generalized determinants =
// sub-Pfaffians). The two exceptional families exist as tags only.
enum class FamilyKind { TypeA, TypeD, TypeE6, TypeE7 };

class MinusculeFamily {
public:
    static MinusculeFamily type_a(int k, int n) {
        if (k < 1 || k > n - k)
            throw std::invalid_argument("type A family requires 1 <= k <= n-k");
        return MinusculeFamily(FamilyKind::TypeA, k, n);
    }
    static MinusculeFamily type_d(int n) {
        if (n < 3) throw std::invalid_argument("type D family requires n >= 3");
        return MinusculeFamily(FamilyKind::TypeD, 0, n);
    }
    static MinusculeFamily type_e6() { throw std::invalid_argument("unsupported family: E6"); }
    static MinusculeFamily type_e7() { throw std::invalid_argument("unsupported family: E7"); }

    FamilyKind kind() const { return kind_; }
    int k() const { return k_; }
    int n() const { return n_; }

    int d_max() const { return kind_ == FamilyKind::TypeA ? k_ : n_ / 2; }

    std::string to_string() const {
        if (kind_ == FamilyKind::TypeA)
            return "A:" + std::to_string(k_) + "," + std::to_string(n_);
        return "D:" + std::to_string(n_);
    }

    friend bool operator==(const MinusculeFamily&, const MinusculeFamily&) = default;

private:
    MinusculeFamily(FamilyKind kind, int k, int n) : kind_(kind), k_(k), n_(n) {}
    FamilyKind kind_;
    int k_, n_;
};

// Index of a weight relative to the highest one. Type A: equal-size subsets
// (rows, cols) of {1..k} x {1..n-k}; type D: an even-cardinality subset of
// {1..n}, stored in `rows`. Bits are 0-based internally.
struct WeightIndex {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;

    friend auto operator<=>(const WeightIndex&, const WeightIndex&) = default;
};

inline int weight_degree(const MinusculeFamily& fam, const WeightIndex& w) {
    if (fam.kind() == FamilyKind::TypeA) return std::popcount(w.rows);
    return std::popcount(w.rows) / 2;
}

inline std::vector<int> bits_of(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i + 1);
    return out;
}

inline std::string weight_name(const MinusculeFamily& fam, const WeightIndex& w) {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s;
    };
    if (fam.kind() == FamilyKind::TypeA) return "(" + join(bits_of(w.rows)) + "|" + join(bits_of(w.cols)) + ")";
    return "{" + join(bits_of(w.rows)) + "}";
}

// Complete weight enumeration, ascending by degree then index masks.
// Includes the degree-0 highest weight.
inline std::vector<WeightIndex> weights(const MinusculeFamily& fam) {
    std::vector<WeightIndex> out;
    if (fam.kind() == FamilyKind::TypeA) {
        int k = fam.k(), m = fam.n() - fam.k();
        for (std::uint32_t r = 0; r < (1u << k); ++r)
            for (std::uint32_t c = 0; c < (1u << m); ++c)
                if (std::popcount(r) == std::popcount(c)) out.push_back({r, c});
    } else {
        int n = fam.n();
        for (std::uint32_t s = 0; s < (1u << n); ++s)
            if (std::popcount(s) % 2 == 0) out.push_back({s, 0});
    }
    std::sort(out.begin(), out.end(), [&](const WeightIndex& a, const WeightIndex& b) {
        int da = weight_degree(fam, a), db = weight_degree(fam, b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

// A degree-one root: type A entry position (row, col), type D pair i < j.
using Root = std::pair<int, int>;

inline std::vector<Root> all_roots(const MinusculeFamily& fam) {
    std::vector<Root> out;
    if (fam.kind() == FamilyKind::TypeA) {
        for (int i = 1; i <= fam.k(); ++i)
            for (int j = 1; j <= fam.n() - fam.k(); ++j) out.emplace_back(i, j);
    } else {
        for (int i = 1; i <= fam.n(); ++i)
            for (int j = i + 1; j <= fam.n(); ++j) out.emplace_back(i, j);
    }
    return out;
}

// The fixed decomposition of a weight into degree-one roots: sorted row
// indices paired with sorted column indices positionally (type A), sorted
// elements paired consecutively (type D). The reversed flag switches to a
// second deterministic choice, which the identity checks also run under.
inline std::vector<Root> canonical_roots(const MinusculeFamily& fam, const WeightIndex& w,
                                         bool reversed = false) {
    std::vector<Root> out;
    if (fam.kind() == FamilyKind::TypeA) {
        std::vector<int> r = bits_of(w.rows), c = bits_of(w.cols);
        if (r.size() != c.size()) throw std::invalid_argument("invalid type A weight index");
        if (reversed) std::reverse(c.begin(), c.end());
        for (std::size_t i = 0; i < r.size(); ++i) out.emplace_back(r[i], c[i]);
    } else {
        std::vector<int> s = bits_of(w.rows);
        if (s.size() % 2 != 0) throw std::invalid_argument("invalid type D weight index");
        if (!reversed) {
            for (std::size_t i = 0; i + 1 < s.size(); i += 2) out.emplace_back(s[i], s[i + 1]);
        } else {
            std::size_t m = s.size();
            for (std::size_t i = 0; i < m / 2; ++i) {
                int a = s[i], b = s[m - 1 - i];
                out.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
    }
    return out;
}

struct AppliedRoots {
    int sign = 1;          // relative to the ascending basis vector of the union
    WeightIndex weight{};  // union weight index
};

// Applies a product of commuting root vectors to the highest weight vector in
// the concrete model (slot replacement on a wedge word in type A, exterior
// multiplication in type D) and records the resulting basis vector with its
// sign. Returns nullopt when the product annihilates.
inline std::optional<AppliedRoots> apply_roots(const MinusculeFamily& fam,
                                               const std::vector<Root>& roots) {
    std::vector<int> word;
    WeightIndex w{};
    if (fam.kind() == FamilyKind::TypeA) {
        int k = fam.k();
        word.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) word[static_cast<std::size_t>(i)] = i + 1;
        for (const auto& [i, j] : roots) {
            if (w.rows & (1u << (i - 1))) return std::nullopt;  // slot already replaced
            if (w.cols & (1u << (j - 1))) return std::nullopt;  // repeated basis vector
            w.rows |= 1u << (i - 1);
            w.cols |= 1u << (j - 1);
            word[static_cast<std::size_t>(i - 1)] = k + j;
        }
    } else {
        for (const auto& [i, j] : roots) {
            if ((w.rows & (1u << (i - 1))) || (w.rows & (1u << (j - 1)))) return std::nullopt;
            w.rows |= 1u << (i - 1);
            w.rows |= 1u << (j - 1);
            word.push_back(i);
            word.push_back(j);
        }
    }
    int inv = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++inv;
    return AppliedRoots{inv % 2 == 0 ? 1 : -1, w};
}

inline WeightIndex weight_union(const MinusculeFamily& fam, const WeightIndex& a, const WeightIndex& b) {
    if (fam.kind() == FamilyKind::TypeA) {
        if ((a.rows & b.rows) || (a.cols & b.cols))
            throw std::invalid_argument("incompatible weights: index collision");
        return {a.rows | b.rows, a.cols | b.cols};
    }
    if (a.rows & b.rows) throw std::invalid_argument("incompatible weights: index collision");
    return {a.rows | b.rows, 0};
}

// Compatibility constant m(w_1,...,w_l): the scalar relating the product of
// the parts' canonical monomials to the canonical monomial of the union.
// In both implemented families it is always +1 or -1.
inline Rational compat_m(const MinusculeFamily& fam, const std::vector<WeightIndex>& parts,
                         bool reversed = false) {
    std::vector<Root> concat;
    WeightIndex u{};
    for (const WeightIndex& p : parts) {
        if (weight_degree(fam, p) == 0) continue;
        u = weight_union(fam, u, p);
        auto roots = canonical_roots(fam, p, reversed);
        concat.insert(concat.end(), roots.begin(), roots.end());
    }
    if (concat.empty()) return Rational(1);
    auto product = apply_roots(fam, concat);
    if (!product) throw std::invalid_argument("incompatible weights: product vanishes");
    auto canonical = apply_roots(fam, canonical_roots(fam, u, reversed));
    return Rational(product->sign * canonical->sign);
}

// A generic element of the abelian nilpotent part: a k x (n-k) matrix of
// polynomial entries in type A, a skew-symmetric n x n matrix in type D
// (upper triangle stored, diagonal zero).
class NilpotentElement {
public:
    NilpotentElement(const MinusculeFamily& fam, VarKind side) : fam_(fam) {
        if (side != VarKind::NilA && side != VarKind::NilB && side != VarKind::NilN)
            throw std::invalid_argument("nilpotent element: side must be a Nil* variable kind");
        for (const Root& r : all_roots(fam)) entries_[r] = SparsePolynomial::variable(Variable(side, {r.first, r.second}));
    }

    NilpotentElement(const MinusculeFamily& fam, const std::map<Root, SparsePolynomial>& entries)
        : fam_(fam), entries_(entries) {
        for (const Root& r : all_roots(fam))
            if (!entries_.count(r)) entries_[r] = SparsePolynomial();
    }

    static NilpotentElement from_rationals(const MinusculeFamily& fam, const std::map<Root, Rational>& vals) {
        std::map<Root, SparsePolynomial> entries;
        for (const auto& [r, v] : vals) entries[r] = SparsePolynomial::constant(v);
        return NilpotentElement(fam, entries);
    }

    const MinusculeFamily& family() const { return fam_; }

    // Entry at a root position; for type D also resolves (i, j) with i > j
    // through skew-symmetry.
    SparsePolynomial entry(int i, int j) const {
        if (fam_.kind() == FamilyKind::TypeD) {
            if (i == j) return SparsePolynomial();
            if (i > j) return -entry(j, i);
        }
        auto it = entries_.find({i, j});
        if (it == entries_.end()) throw std::invalid_argument("nilpotent entry out of range");
        return it->second;
    }

    NilpotentElement operator+(const NilpotentElement& o) const { return combine(o, 1); }
    NilpotentElement operator-(const NilpotentElement& o) const { return combine(o, -1); }

    NilpotentElement scaled(const SparsePolynomial& s) const {
        std::map<Root, SparsePolynomial> entries;
        for (const auto& [r, p] : entries_) entries[r] = s * p;
        return NilpotentElement(fam_, entries);
    }

private:
    NilpotentElement combine(const NilpotentElement& o, int sign) const {
        if (!(fam_ == o.fam_)) throw std::invalid_argument("nilpotent elements from different families");
        std::map<Root, SparsePolynomial> entries;
        for (const auto& [r, p] : entries_) entries[r] = sign > 0 ? p + o.entries_.at(r) : p - o.entries_.at(r);
        return NilpotentElement(fam_, entries);
    }

    MinusculeFamily fam_;
    std::map<Root, SparsePolynomial> entries_;
};

namespace detail {

template <typename EntryFn>
SparsePolynomial minor_det(EntryFn&& entry, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.empty()) return SparsePolynomial::constant(1);
    SparsePolynomial det;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t t = 0; t < cols.size(); ++t) {
        std::vector<int> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != t) sub_cols.push_back(cols[j]);
        SparsePolynomial cofactor = minor_det(entry, sub_rows, sub_cols);
        SparsePolynomial term = entry(rows[0], cols[t]) * cofactor;
        det += t % 2 == 0 ? term : -term;
    }
    return det;
}

// Pfaffian by expansion along the first index; on {i, j} it returns the
// (i, j) entry, so Pf of [[0, 1], [-1, 0]] is +1.
template <typename EntryFn>
SparsePolynomial sub_pfaffian(EntryFn&& entry, const std::vector<int>& set) {
    if (set.empty()) return SparsePolynomial::constant(1);
    if (set.size() % 2 != 0) throw std::invalid_argument("sub-Pfaffian needs an even index set");
    SparsePolynomial pf;
    for (std::size_t t = 1; t < set.size(); ++t) {
        std::vector<int> rest;
        for (std::size_t j = 1; j < set.size(); ++j)
            if (j != t) rest.push_back(set[j]);
        SparsePolynomial term = entry(set[0], set[t]) * sub_pfaffian(entry, rest);
        pf += t % 2 == 1 ? term : -term;
    }
    return pf;
}

}  // namespace detail

// Generalized determinant of a weight: the minor on (rows, cols) in type A,
// the sub-Pfaffian on the index set in type D. Degree 0 gives 1, degree 1 a
// single entry.
inline SparsePolynomial gen_det(const MinusculeFamily& fam, const WeightIndex& w,
                                const NilpotentElement& nil) {
    auto entry = [&nil](int i, int j) { return nil.entry(i, j); };
    if (fam.kind() == FamilyKind::TypeA) return detail::minor_det(entry, bits_of(w.rows), bits_of(w.cols));
    return detail::sub_pfaffian(entry, bits_of(w.rows));
}

// The same polynomial assembled from first principles: the sum over unordered
// decompositions of the weight into degree-one roots of the compatibility
// constant times the product of entries.
inline SparsePolynomial decomposition_det(const MinusculeFamily& fam, const WeightIndex& w,
                                          const NilpotentElement& nil) {
    SparsePolynomial out;
    auto add_decomposition = [&](const std::vector<Root>& roots) {
        std::vector<WeightIndex> singletons;
        for (const auto& [i, j] : roots) {
            if (fam.kind() == FamilyKind::TypeA)
                singletons.push_back({1u << (i - 1), 1u << (j - 1)});
            else
                singletons.push_back({(1u << (i - 1)) | (1u << (j - 1)), 0});
        }
        SparsePolynomial prod = SparsePolynomial::constant(compat_m(fam, singletons));
        for (const auto& [i, j] : roots) prod *= nil.entry(i, j);
        out += prod;
    };
    if (fam.kind() == FamilyKind::TypeA) {
        std::vector<int> rows = bits_of(w.rows), cols = bits_of(w.cols);
        std::sort(cols.begin(), cols.end());
        do {
            std::vector<Root> roots;
            for (std::size_t i = 0; i < rows.size(); ++i) roots.emplace_back(rows[i], cols[i]);
            add_decomposition(roots);
        } while (std::next_permutation(cols.begin(), cols.end()));
    } else {
        std::vector<int> set = bits_of(w.rows);
        std::vector<Root> roots;
        auto rec = [&](auto&& self, std::vector<int> rest) -> void {
            if (rest.empty()) {
                add_decomposition(roots);
                return;
            }
            int first = rest[0];
            for (std::size_t t = 1; t < rest.size(); ++t) {
                std::vector<int> next;
                for (std::size_t j = 1; j < rest.size(); ++j)
                    if (j != t) next.push_back(rest[j]);
                roots.emplace_back(first, rest[t]);
                self(self, std::move(next));
                roots.pop_back();
            }
        };
        rec(rec, set);
    }
    return out;
}

// Expansion of exp(sum_b X_b * entry_b) applied to the highest weight vector,
// as a map from weight to the coefficient on the ascending basis vector.
// Since the root vectors square to zero this is a plain subset sum; used as
// an independent oracle against gen_det.
inline std::map<WeightIndex, SparsePolynomial> exp_orbit_oracle(const MinusculeFamily& fam,
                                                                const NilpotentElement& nil) {
    std::map<WeightIndex, SparsePolynomial> out;
    std::vector<Root> roots = all_roots(fam);
    std::vector<Root> chosen;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == roots.size()) {
            auto applied = apply_roots(fam, chosen);
            if (!applied) return;
            SparsePolynomial prod = SparsePolynomial::constant(applied->sign);
            for (const auto& [i, j] : chosen) prod *= nil.entry(i, j);
            out[applied->weight] += prod;
            return;
        }
        self(self, idx + 1);
        chosen.push_back(roots[idx]);
        if (apply_roots(fam, chosen)) self(self, idx + 1);  // prune annihilated branches
        chosen.pop_back();
    };
    rec(rec, 0);
    return out;
}

// Sign relating the chart coordinate of a weight to the corresponding
// coordinate on the ambient wedge (type A) or spinor (type D) basis.
inline int basis_sign(const MinusculeFamily& fam, const WeightIndex& w, bool reversed = false) {
    auto applied = apply_roots(fam, canonical_roots(fam, w, reversed));
    if (!applied) throw std::logic_error("canonical decomposition annihilates");
    return applied->sign;
}

// Generalized determinant normalized with respect to the requested
// decomposition choice. Switching the choice rescales the weight vector, so
// the determinant picks up the sign between the two normalizations.
inline SparsePolynomial gen_det_in_choice(const MinusculeFamily& fam, const WeightIndex& w,
                                          const NilpotentElement& nil, bool reversed) {
    SparsePolynomial det = gen_det(fam, w, nil);
    if (!reversed || weight_degree(fam, w) == 0) return det;
    int ratio = basis_sign(fam, w) * basis_sign(fam, w, true);
    return ratio == 1 ? det : -det;
}

// For type A: the ambient subset indexing the basis vector of a weight,
// i.e. ({1..k} minus rows) union (k + cols).
inline std::vector<int> ambient_subset(const MinusculeFamily& fam, const WeightIndex& w) {
    if (fam.kind() != FamilyKind::TypeA) throw std::invalid_argument("ambient_subset: type A only");
    std::vector<int> s;
    for (int i = 1; i <= fam.k(); ++i)
        if (!(w.rows & (1u << (i - 1)))) s.push_back(i);
    for (int c : bits_of(w.cols)) s.push_back(fam.k() + c);
    std::sort(s.begin(), s.end());
    return s;
}

namespace detail {

// Ordered tuples (w_1,...,w_l) of disjoint sub-weights with prescribed
// degrees partitioning w.
inline void for_each_ordered_decomposition(const MinusculeFamily& fam, const WeightIndex& w,
                                           const std::vector<int>& degrees,
                                           const std::function<void(const std::vector<WeightIndex>&)>& fn) {
    std::vector<WeightIndex> parts(degrees.size());
    auto rec = [&](auto&& self, std::size_t slot, WeightIndex rest) -> void {
        if (slot == degrees.size()) {
            bool empty = fam.kind() == FamilyKind::TypeA ? (rest.rows == 0 && rest.cols == 0) : rest.rows == 0;
            if (empty) fn(parts);
            return;
        }
        int d = degrees[slot];
        if (fam.kind() == FamilyKind::TypeA) {
            for (std::uint32_t r = rest.rows;; r = (r - 1) & rest.rows) {
                if (std::popcount(r) == d) {
                    for (std::uint32_t c = rest.cols;; c = (c - 1) & rest.cols) {
                        if (std::popcount(c) == d) {
                            parts[slot] = {r, c};
                            self(self, slot + 1, WeightIndex{rest.rows & ~r, rest.cols & ~c});
                        }
                        if (c == 0) break;
                    }
                }
                if (r == 0) break;
            }
        } else {
            for (std::uint32_t s = rest.rows;; s = (s - 1) & rest.rows) {
                if (std::popcount(s) == 2 * d) {
                    parts[slot] = {s, 0};
                    self(self, slot + 1, WeightIndex{rest.rows & ~s, 0});
                }
                if (s == 0) break;
            }
        }
    };
    rec(rec, 0, w);
}

}  // namespace detail

// det_w(A + B) as a sum over ordered two-part decompositions of products of
// generalized determinants weighted by compatibility constants.
inline bool verify_detsum(const MinusculeFamily& fam, const WeightIndex& w, bool reversed = false) {
    NilpotentElement a(fam, VarKind::NilA), b(fam, VarKind::NilB);
    SparsePolynomial lhs = gen_det_in_choice(fam, w, a + b, reversed);
    SparsePolynomial rhs;
    int d = weight_degree(fam, w);
    for (int d1 = 0; d1 <= d; ++d1) {
        detail::for_each_ordered_decomposition(fam, w, {d1, d - d1}, [&](const std::vector<WeightIndex>& parts) {
            Rational m = compat_m(fam, parts, reversed);
            rhs += SparsePolynomial::constant(m) * gen_det_in_choice(fam, parts[0], a, reversed) *
                   gen_det_in_choice(fam, parts[1], b, reversed);
        });
    }
    return lhs == rhs;
}

// Multinomial times det_w as the degree-prescribed ordered decomposition sum.
inline bool verify_laplace(const MinusculeFamily& fam, const WeightIndex& w,
                           const std::vector<int>& parts, bool reversed = false) {
    int d = weight_degree(fam, w);
    int total = 0;
    for (int p : parts) {
        if (p <= 0) throw std::invalid_argument("verify_laplace: parts must be positive");
        total += p;
    }
    if (total != d) throw std::invalid_argument("verify_laplace: parts must sum to the weight degree");
    NilpotentElement a(fam, VarKind::NilA);
    SparsePolynomial lhs =
        SparsePolynomial::constant(Rational(multinomial(parts))) * gen_det_in_choice(fam, w, a, reversed);
    SparsePolynomial rhs;
    detail::for_each_ordered_decomposition(fam, w, parts, [&](const std::vector<WeightIndex>& tuple) {
        SparsePolynomial prod = SparsePolynomial::constant(compat_m(fam, tuple, reversed));
        for (const WeightIndex& g : tuple) prod *= gen_det_in_choice(fam, g, a, reversed);
        rhs += prod;
    });
    return lhs == rhs;
}

// Chart coordinates of the orbit parametrization: every generalized
// determinant of positive degree, as a polynomial in the entries.
inline std::map<WeightIndex, SparsePolynomial> orbit_param(const MinusculeFamily& fam,
                                                           const NilpotentElement& nil) {
    std::map<WeightIndex, SparsePolynomial> out;
    for (const WeightIndex& w : weights(fam))
        if (weight_degree(fam, w) >= 1) out[w] = gen_det(fam, w, nil);
    return out;
}

}  // namespace minsec
