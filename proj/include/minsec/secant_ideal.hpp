#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minsec/littlewood_richardson.hpp"
#include "minsec/matrix.hpp"
#include "minsec/partition.hpp"
#include "minsec/plethysm_closed.hpp"
#include "minsec/polynomial.hpp"
#include "minsec/sampling.hpp"
#include "minsec/symfunc.hpp"

namespace minsec {

// ---------------------------------------------------------------------------
// Coordinates on a wedge power and simple vectors
// ---------------------------------------------------------------------------

inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = next; i <= n - (k - static_cast<int>(cur.size())) + 1; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

inline Variable plucker_var(const std::vector<int>& subset) {
    return Variable(VarKind::Plucker, subset.begin(), subset.end());
}

// Sorts wedge indices, tracking the permutation sign; nullopt on repeats.
inline std::optional<std::pair<std::vector<int>, int>> canonical_wedge(std::vector<int> idx) {
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return std::nullopt;
            if (idx[i] > idx[j]) {
                std::swap(idx[i], idx[j]);
                sign = -sign;
            }
        }
    return std::make_pair(std::move(idx), sign);
}

// A point of the cone over the Grassmannian: a spanning matrix together with
// its Pluecker coordinate vector (all maximal minors).
struct SimpleVector {
    int k, n;
    std::vector<std::vector<Rational>> spanning;  // k rows of length n
    std::vector<Rational> plucker;                // indexed like k_subsets(n, k)
};

namespace detail {

inline Rational dense_minor(const std::vector<std::vector<Rational>>& m, const std::vector<int>& cols) {
    std::size_t k = cols.size();
    if (k == 0) return Rational(1);
    if (k == 1) return m[0][static_cast<std::size_t>(cols[0] - 1)];
    Rational det(0);
    std::vector<std::vector<Rational>> rest(m.begin() + 1, m.end());
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<int> sub;
        for (std::size_t j = 0; j < k; ++j)
            if (j != t) sub.push_back(cols[j]);
        Rational c = m[0][static_cast<std::size_t>(cols[t] - 1)] * dense_minor(rest, sub);
        det += t % 2 == 0 ? c : -c;
    }
    return det;
}

}  // namespace detail

inline SimpleVector make_simple_vector(const std::vector<std::vector<Rational>>& spanning, int n) {
    SimpleVector q;
    q.k = static_cast<int>(spanning.size());
    q.n = n;
    q.spanning = spanning;
    for (const auto& s : k_subsets(n, q.k)) q.plucker.push_back(detail::dense_minor(spanning, s));
    return q;
}

inline SimpleVector random_simple_vector(SampleRng& rng, int k, int n) {
    for (;;) {
        std::vector<std::vector<Rational>> m(static_cast<std::size_t>(k),
                                             std::vector<Rational>(static_cast<std::size_t>(n)));
        for (auto& row : m)
            for (auto& e : row) e = Rational(rng.next_int(-9, 9));
        SimpleVector q = make_simple_vector(m, n);
        for (const Rational& c : q.plucker)
            if (c != 0) return q;
    }
}

// A random point a_1 Q_1 + ... + a_s Q_s on the secant cone, as its vector of
// Pluecker coordinates.
inline std::vector<Rational> random_secant_point(SampleRng& rng, int k, int n, int s) {
    std::size_t len = k_subsets(n, k).size();
    std::vector<Rational> point(len, Rational(0));
    for (int i = 0; i < s; ++i) {
        Rational a = Rational(rng.next_nonzero_int(-9, 9));
        SimpleVector q = random_simple_vector(rng, k, n);
        for (std::size_t j = 0; j < len; ++j) point[j] += a * q.plucker[j];
    }
    return point;
}

// ---------------------------------------------------------------------------
// Polarization
// ---------------------------------------------------------------------------

// Symmetric multilinear form attached to a homogeneous polynomial: the
// coefficient of l_1...l_d in P(l_1 v_1 + ... + l_d v_d), divided by d!.
class Polarization {
public:
    explicit Polarization(SparsePolynomial p) : poly_(std::move(p)) {
        if (!poly_.is_homogeneous() || poly_.is_zero())
            throw std::invalid_argument("polarize: need a nonzero homogeneous polynomial");
        degree_ = poly_.total_degree();
        if (degree_ < 1) throw std::invalid_argument("polarize: need positive degree");
    }

    int degree() const { return degree_; }

    SparsePolynomial applied(const std::vector<std::map<Variable, SparsePolynomial>>& args) const {
        if (static_cast<int>(args.size()) != degree_)
            throw std::invalid_argument("polarization: wrong number of arguments");
        std::map<Variable, SparsePolynomial> bind;
        for (const Variable& v : poly_.variables()) {
            SparsePolynomial sum;
            for (int s = 0; s < degree_; ++s) {
                auto it = args[static_cast<std::size_t>(s)].find(v);
                if (it != args[static_cast<std::size_t>(s)].end())
                    sum += SparsePolynomial::variable(lambda_slot(s + 1)) * it->second;
            }
            bind[v] = sum;
        }
        SparsePolynomial expanded = poly_.substitute(bind);
        Monomial all_slots;
        for (int s = 1; s <= degree_; ++s) all_slots.emplace_back(lambda_slot(s), 1);
        return expanded.coefficient_of_partial(all_slots) * (Rational(1) / Rational(factorial(degree_)));
    }

    Rational operator()(const std::vector<std::map<Variable, Rational>>& points) const {
        std::vector<std::map<Variable, SparsePolynomial>> args;
        for (const auto& p : points) {
            std::map<Variable, SparsePolynomial> arg;
            for (const auto& [v, c] : p) arg[v] = SparsePolynomial::constant(c);
            args.push_back(std::move(arg));
        }
        SparsePolynomial value = applied(args);
        return value.constant_value();
    }

private:
    SparsePolynomial poly_;
    int degree_;
};

inline Polarization polarize(const SparsePolynomial& p) { return Polarization(p); }

// ---------------------------------------------------------------------------
// Degree-d ideal of a secant variety by evaluation kernels
// ---------------------------------------------------------------------------

// The degree-d part of the vanishing ideal of the (s-1)-st secant of the
// Grassmannian cone, computed as the kernel of evaluation at random points of
// the secant cone. The cone is stable under the diagonal torus, so the ideal
// splits over monomial contents and each content block is a small exact
// kernel; ranks are grown until they stabilize over two sample batches plus a
// confirmation batch.
class SecantIdeal {
public:
    SecantIdeal(int k, int n, int s, int d, std::uint64_t seed = 0)
        : k_(k), n_(n), s_(s), d_(d), rng_(seed), subsets_(k_subsets(n, k)) {
        if (k < 1 || n < k || s < 1 || d < 1) throw std::invalid_argument("SecantIdeal: bad parameters");
        // Bucket degree-d monomials (multisets of subsets) by content.
        std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
        auto rec = [&](auto&& self, int slot, std::size_t from) -> void {
            if (slot == d) {
                std::vector<int> content(static_cast<std::size_t>(n), 0);
                for (std::size_t idx : pick)
                    for (int e : subsets_[idx]) ++content[static_cast<std::size_t>(e - 1)];
                blocks_[content].monomials.push_back(pick);
                return;
            }
            for (std::size_t i = from; i < subsets_.size(); ++i) {
                pick[static_cast<std::size_t>(slot)] = i;
                self(self, slot + 1, i);
            }
        };
        rec(rec, 0, 0);
    }

    int k() const { return k_; }
    int n() const { return n_; }
    int s() const { return s_; }
    int d() const { return d_; }

    Integer space_dimension() const {
        Integer total = 0;
        for (const auto& [c, b] : blocks_) total += Integer(b.monomials.size());
        return total;
    }

    // Kernel dimension at one exact content (0 when no monomials carry it).
    long long weight_dimension(const std::vector<int>& content) {
        std::vector<int> sorted = content;
        std::sort(sorted.rbegin(), sorted.rend());
        auto memo = dim_memo_.find(sorted);
        if (memo != dim_memo_.end()) return memo->second;
        // Any representative with this sorted content has the same dimension;
        // prefer the sorted vector itself if it indexes a block.
        long long dim = 0;
        auto it = blocks_.find(sorted);
        if (it == blocks_.end()) it = blocks_.find(content);
        if (it != blocks_.end()) dim = static_cast<long long>(block_kernel(it->first).size());
        dim_memo_[sorted] = dim;
        return dim;
    }

    // Total ideal dimension: weight dimensions summed over content orbits.
    Integer dimension() {
        Integer total = 0;
        std::map<std::vector<int>, Integer> orbit_sizes;
        for (const auto& [content, b] : blocks_) {
            std::vector<int> sorted = content;
            std::sort(sorted.rbegin(), sorted.rend());
            orbit_sizes[sorted] += 1;
        }
        for (const auto& [sorted, orbit] : orbit_sizes) total += orbit * Integer(weight_dimension(sorted));
        return total;
    }

    // Multiplicity of one irreducible in the ideal, by the alternating sum of
    // weight-space dimensions over the Weyl group.
    long long multiplicity(const Partition& lam) {
        lam.require(Convention::Rows, "SecantIdeal::multiplicity");
        if (lam.weight() != d_ * k_ || lam.length() > n_) return 0;
        std::vector<int> delta(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) delta[static_cast<std::size_t>(i)] = n_ - 1 - i;
        std::vector<int> perm = delta;
        std::sort(perm.begin(), perm.end());
        // perm runs over arrangements of the descending staircase delta; the
        // permutation sign is relative to delta itself, hence the offset.
        const int base_inversions = n_ * (n_ - 1) / 2;
        long long mult = 0;
        do {
            int inv = base_inversions;
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[i] > perm[j]) ++inv;
            std::vector<int> content(static_cast<std::size_t>(n_));
            bool valid = true;
            int total = 0;
            for (int i = 0; i < n_ && valid; ++i) {
                int v = lam.part(i + 1) + delta[static_cast<std::size_t>(i)] - perm[static_cast<std::size_t>(i)];
                if (v < 0) valid = false;
                content[static_cast<std::size_t>(i)] = v;
                total += v;
            }
            if (!valid || total != d_ * k_) continue;
            long long dim = weight_dimension(content);
            mult += inv % 2 == 0 ? dim : -dim;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return mult;
    }

    // Full isotypic decomposition; contents have entries at most d, so the
    // candidate diagrams are partitions of dk with parts at most d.
    IsotypicTable isotypic_table() {
        IsotypicTable table(Convention::Rows,
                            "I_" + std::to_string(d_) + "(secant_" + std::to_string(s_ - 1) + "(G(" +
                                std::to_string(k_) + "," + std::to_string(n_) + ")))");
        for (auto& parts : partitions_of(d_ * k_, n_, d_)) {
            Partition lam = Partition::rows(parts);
            table.add(lam, multiplicity(lam));
        }
        return table;
    }

    // Basis of the ideal as polynomials, echelon-normalized inside every
    // content block; blocks in content order.
    std::vector<SparsePolynomial> basis() {
        std::vector<SparsePolynomial> out;
        for (const auto& [content, b] : blocks_) {
            const auto& kernel = block_kernel(content);
            for (const auto& vec : kernel) {
                SparsePolynomial p;
                for (std::size_t j = 0; j < vec.size(); ++j) {
                    if (vec[j] == 0) continue;
                    Monomial m;
                    for (std::size_t slot : b.monomials[j]) m = monomial_mul(m, {{plucker_var(subsets_[slot]), 1}});
                    p += SparsePolynomial::term(vec[j], m);
                }
                out.push_back(std::move(p));
            }
        }
        return out;
    }

    // Fresh held-out secant samples for validating basis elements.
    std::map<Variable, Rational> fresh_sample_point(SampleRng& rng) const {
        std::vector<Rational> pt = random_secant_point(rng, k_, n_, s_);
        std::map<Variable, Rational> point;
        for (std::size_t i = 0; i < subsets_.size(); ++i) point[plucker_var(subsets_[i])] = pt[i];
        return point;
    }

private:
    struct Block {
        std::vector<std::vector<std::size_t>> monomials;  // multisets of subset indices
        std::optional<std::vector<std::vector<Rational>>> kernel;
    };

    void ensure_samples(std::size_t count) {
        while (samples_.size() < count) samples_.push_back(random_secant_point(rng_, k_, n_, s_));
    }

    const std::vector<std::vector<Rational>>& block_kernel(const std::vector<int>& content) {
        Block& b = blocks_.at(content);
        if (b.kernel) return *b.kernel;
        const std::size_t cols = b.monomials.size();
        RowReducer red(cols);
        const std::size_t batch = 4;
        std::size_t used = 0;
        int stable = 0;
        bool confirming = false;
        for (;;) {
            ensure_samples(used + batch);
            std::size_t before = red.rank();
            for (std::size_t t = 0; t < batch; ++t) {
                const auto& sample = samples_[used++];
                std::vector<Rational> row(cols);
                for (std::size_t j = 0; j < cols; ++j) {
                    Rational v(1);
                    for (std::size_t slot : b.monomials[j]) v *= sample[slot];
                    row[j] = v;
                }
                red.add_row(std::move(row));
            }
            if (red.rank() == cols) break;  // kernel empty, nothing to stabilize
            if (red.rank() == before) {
                if (confirming) break;
                if (++stable >= 2) confirming = true;
            } else {
                stable = 0;
                confirming = false;
            }
        }
        b.kernel = red.kernel_basis();
        return *b.kernel;
    }

    int k_, n_, s_, d_;
    SampleRng rng_;
    std::vector<std::vector<int>> subsets_;
    std::map<std::vector<int>, Block> blocks_;
    std::vector<std::vector<Rational>> samples_;
    std::map<std::vector<int>, long long> dim_memo_;
};

// Convenience wrapper matching the batch interface: dimension of the degree-d
// ideal piece.
inline Integer ideal_degree_d_dimension(int k, int n, int s, int d, std::uint64_t seed = 0) {
    return SecantIdeal(k, n, s, d, seed).dimension();
}

// No polynomials of degree at most s vanish on the (s-1)-st secant.
inline bool no_low_degree(int k, int n, int s, int d, std::uint64_t seed = 0) {
    if (d > s) throw std::invalid_argument("no_low_degree: requires d <= s");
    return ideal_degree_d_dimension(k, n, s, d, seed) == 0;
}

// ---------------------------------------------------------------------------
// Representation-theoretic bounds and closed forms
// ---------------------------------------------------------------------------

// Components killed by every evaluation map: more than k*s rows, or the
// ceil(d/s)-th column shorter than k.
inline bool longarein_predicate(const Partition& mu, int k, int s, int d) {
    mu.require(Convention::Rows, "longarein_predicate");
    if (mu.weight() != d * k) throw std::invalid_argument("longarein_predicate: weight must be d*k");
    if (mu.length() > k * s) return true;
    int col = (d + s - 1) / s;
    int col_len = 0;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) >= col) ++col_len;
    return col_len < k;
}

// Diagram surgery for the secant reduction: a diagram with full first row of
// length d descends to the smaller Grassmannian.
struct SecantReduction {
    Partition lam;
    int k, n;
};

inline SecantReduction reduce_secant(const Partition& lam, int d, int k, int n) {
    lam.require(Convention::Rows, "reduce_secant");
    if (k < 2) throw std::invalid_argument("reduce_secant: k must stay at least 1 after reduction");
    if (lam.part(1) != d)
        throw std::invalid_argument("reduce_secant: first row must have length d");
    std::vector<int> rest(lam.parts().begin() + 1, lam.parts().end());
    return {Partition::rows(std::move(rest)), k - 1, n - 1};
}

// Multiplicity of the (a,b,c)-column component in the cubics of the secant
// ideal: reduce by the third column, read the closed plethysm form, and
// subtract one in the doubled case a-c = 2(b-c) where the distinguished
// highest weight vector survives on the secant. The subtraction can
// undershoot zero when the component is absent; the result is clamped and
// flagged.
struct CubicMultiplicity {
    long long value = 0;
    bool clamped = false;
};

inline CubicMultiplicity cubic_multiplicity(const ColumnTriple& t, int k, int n) {
    if (t.a + t.b + t.c != 3 * k)
        throw std::invalid_argument("cubic_multiplicity: column lengths must sum to 3k");
    if (n < t.a) return {0, false};
    int kk = k - t.c;
    long long base = s3_wedge_multiplicity(ColumnTriple(t.a - t.c, t.b - t.c, 0), kk);
    if (t.a - t.c != 2 * (t.b - t.c)) return {base, false};
    long long v = base - 1;
    if (v < 0) return {0, true};
    return {v, false};
}

inline IsotypicTable cubic_ideal_table(int k, int n) {
    IsotypicTable table(Convention::Columns,
                        "I_3(secant(G(" + std::to_string(k) + "," + std::to_string(n) + ")))");
    for (int a = k; a <= 3 * k; ++a)
        for (int b = 0; b <= a; ++b) {
            int c = 3 * k - a - b;
            if (c < 0 || c > b) continue;
            table.add(Partition::columns({a, b, c}), cubic_multiplicity(ColumnTriple(a, b, c), k, n).value);
        }
    return table;
}

// Degree-three part of the coordinate ring of the secant: one copy of each
// three-column component with column lengths (2k-c, k, c), clamped to its
// multiplicity in the ambient cubics (absent components contribute nothing).
inline IsotypicTable quotient_degree3(int k, int n, bool clamped = true) {
    IsotypicTable table(Convention::Columns,
                        "C[secant(G(" + std::to_string(k) + "," + std::to_string(n) + "))]_3");
    for (int c = 0; c <= k; ++c) {
        int a = 2 * k - c;
        if (a > n) continue;
        long long mult = 1;
        if (clamped) {
            long long ambient = s3_wedge_multiplicity(ColumnTriple(a, k, c), k);
            mult = std::min(mult, ambient);
        }
        table.add(Partition::columns({a, k, c}), mult);
    }
    return table;
}

// Lower bound for the multiplicity of mu in the degree-d ideal: its
// multiplicity in the ambient plethysm minus the total multiplicity in the
// tensor products attached to the decompositions of d into at most s parts.
inline long long crucial_bound(const Partition& mu, int k, int s, int d) {
    mu.require(Convention::Rows, "crucial_bound");
    if (mu.weight() != d * k) throw std::invalid_argument("crucial_bound: weight must be d*k");
    long long ambient = plethysm_multiplicity(mu, Partition::rows({d}), k, InnerFunctor::Wedge);
    long long m = 0;
    for (auto& alpha : partitions_of(d, s)) {
        std::vector<Partition> factors;
        for (int part : alpha) {
            std::vector<int> rect(static_cast<std::size_t>(k), part);
            factors.push_back(Partition::rows(rect));
        }
        m += tensor_multiplicity(mu, factors);
    }
    return ambient - m;
}

// ---------------------------------------------------------------------------
// Open orbit of the middle secant
// ---------------------------------------------------------------------------

// Multiplicity of the weight alpha (a nonincreasing integer sequence of
// length 2k, possibly negative) in the coordinate ring of the open orbit:
// zero unless alpha_i + alpha_{2k+1-i} is constant, else the rounded-up half
// of the middle gap.
inline long long orbit_ring_multiplicity(const std::vector<int>& alpha, int k) {
    if (static_cast<int>(alpha.size()) != 2 * k)
        throw std::invalid_argument("orbit_ring_multiplicity: alpha must have length 2k");
    for (std::size_t i = 1; i < alpha.size(); ++i)
        if (alpha[i] > alpha[i - 1]) throw std::invalid_argument("orbit_ring_multiplicity: alpha must be nonincreasing");
    int c = alpha.front() + alpha.back();
    for (int i = 0; i < k; ++i)
        if (alpha[static_cast<std::size_t>(i)] + alpha[static_cast<std::size_t>(2 * k - 1 - i)] != c) return 0;
    int gap = alpha[static_cast<std::size_t>(k - 1)] - alpha[static_cast<std::size_t>(k)];
    return (gap + 2) / 2;  // ceil((gap + 1) / 2)
}

// Invariant-counting oracle for the same multiplicity: unordered pairs (m, n)
// of rectangle heights admissible by the Littlewood-Richardson rule.
inline long long orbit_ring_lr_count(const std::vector<int>& alpha, int k) {
    if (static_cast<int>(alpha.size()) != 2 * k)
        throw std::invalid_argument("orbit_ring_lr_count: alpha must have length 2k");
    int shift = alpha.back();
    std::vector<int> lam_parts;
    for (int a : alpha) lam_parts.push_back(a - shift);
    Partition lam = Partition::rows(lam_parts);
    if (lam.weight() % k != 0) return 0;
    int total = lam.weight() / k;
    long long count = 0;
    for (int m = (total + 1) / 2; m <= total; ++m) {
        int nn = total - m;
        if (nn < 0) continue;
        std::vector<int> rm(static_cast<std::size_t>(k), m), rn(static_cast<std::size_t>(k), nn);
        if (lr_coefficient(lam, Partition::rows(rm), Partition::rows(rn)) > 0) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Explicit highest weight vectors for the two-column component
// ---------------------------------------------------------------------------

inline SparsePolynomial hwv_even(int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("hwv_even: k must be even and at least 2");
    std::vector<int> perm(static_cast<std::size_t>(2 * k));
    for (int i = 0; i < 2 * k; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> base(perm.begin(), perm.begin() + k);
    SparsePolynomial p;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        auto first = canonical_wedge(std::vector<int>(perm.begin(), perm.begin() + k));
        auto second = canonical_wedge(std::vector<int>(perm.begin() + k, perm.end()));
        int coeff = (inv % 2 == 0 ? 1 : -1) * first->second * second->second;
        Monomial m = monomial_mul({{plucker_var(first->first), 1}}, {{plucker_var(second->first), 1}});
        m = monomial_mul(m, {{plucker_var(base), 1}});
        p += SparsePolynomial::term(Rational(coeff), m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return p;
}

inline SparsePolynomial hwv_odd(int k) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("hwv_odd: k must be odd and at least 3");
    std::vector<int> sigma(static_cast<std::size_t>(2 * k));
    for (int i = 0; i < 2 * k; ++i) sigma[static_cast<std::size_t>(i)] = i + 1;
    SparsePolynomial p;
    do {
        int inv_s = 0;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            for (std::size_t j = i + 1; j < sigma.size(); ++j)
                if (sigma[i] > sigma[j]) ++inv_s;
        std::vector<int> delta(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) delta[static_cast<std::size_t>(i)] = i + 1;
        do {
            int inv_d = 0;
            for (std::size_t i = 0; i < delta.size(); ++i)
                for (std::size_t j = i + 1; j < delta.size(); ++j)
                    if (delta[i] > delta[j]) ++inv_d;
            std::vector<int> v1(sigma.begin(), sigma.begin() + k);
            std::vector<int> v2(sigma.begin() + k, sigma.begin() + 2 * k - 1);
            v2.push_back(delta[0]);
            std::vector<int> v3{sigma[static_cast<std::size_t>(2 * k - 1)]};
            v3.insert(v3.end(), delta.begin() + 1, delta.end());
            auto c1 = canonical_wedge(v1), c2 = canonical_wedge(v2), c3 = canonical_wedge(v3);
            if (!c1 || !c2 || !c3) continue;
            int coeff = ((inv_s + inv_d) % 2 == 0 ? 1 : -1) * c1->second * c2->second * c3->second;
            Monomial m = monomial_mul({{plucker_var(c1->first), 1}}, {{plucker_var(c2->first), 1}});
            m = monomial_mul(m, {{plucker_var(c3->first), 1}});
            p += SparsePolynomial::term(Rational(coeff), m);
        } while (std::next_permutation(delta.begin(), delta.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return p;
}

// Raising operator on polynomials in Pluecker coordinates: acts as a
// derivation, sending index i+1 to i inside each wedge subscript. Keeping
// subscripts sorted needs no sign since i and i+1 are adjacent.
inline SparsePolynomial raising_operator(int i, const SparsePolynomial& p) {
    SparsePolynomial out;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t pos = 0; pos < m.size(); ++pos) {
            const auto& [v, e] = m[pos];
            if (v.kind() != VarKind::Plucker) throw std::invalid_argument("raising_operator: expected Pluecker variables");
            bool has_next = false, has_i = false;
            std::vector<int> idx;
            for (int t = 0; t < v.size(); ++t) {
                idx.push_back(v.index(t));
                if (v.index(t) == i + 1) has_next = true;
                if (v.index(t) == i) has_i = true;
            }
            if (!has_next || has_i) continue;
            for (int& x : idx)
                if (x == i + 1) x = i;
            std::sort(idx.begin(), idx.end());
            Monomial nm;
            for (std::size_t q = 0; q < m.size(); ++q) {
                if (q == pos) {
                    if (e > 1) nm = monomial_mul(nm, {{v, e - 1}});
                } else {
                    nm = monomial_mul(nm, {{m[q].first, m[q].second}});
                }
            }
            nm = monomial_mul(nm, {{plucker_var(idx), 1}});
            out += SparsePolynomial::term(c * Rational(e), nm);
        }
    }
    return out;
}

// Content of a weight-homogeneous Pluecker polynomial: how often each ambient
// index occurs in every monomial.
inline std::vector<int> plucker_weight(const SparsePolynomial& p, int n) {
    std::vector<int> weight;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        for (const auto& [v, e] : m)
            for (int t = 0; t < v.size(); ++t) w[static_cast<std::size_t>(v.index(t) - 1)] += e;
        if (weight.empty())
            weight = w;
        else if (weight != w)
            throw std::invalid_argument("plucker_weight: polynomial is not weight-homogeneous");
    }
    return weight;
}

// Value at the rank-two point e_1^...^e_k + e_(k+1)^...^e_(2k).
inline Rational eval_at_two_blocks(const SparsePolynomial& p, int k, int n) {
    std::map<Variable, Rational> point;
    for (const auto& s : k_subsets(n, k)) point[plucker_var(s)] = 0;
    std::vector<int> first(static_cast<std::size_t>(k)), second(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        first[static_cast<std::size_t>(i)] = i + 1;
        second[static_cast<std::size_t>(i)] = k + i + 1;
    }
    point[plucker_var(first)] = 1;
    point[plucker_var(second)] = 1;
    return p.eval(point);
}

}  // namespace minsec
