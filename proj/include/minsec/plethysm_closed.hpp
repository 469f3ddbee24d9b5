#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "minsec/partition.hpp"
#include "minsec/symfunc.hpp"

namespace minsec {

// Column lengths (a, b, c) of a three-column diagram of weight 3k.
struct ColumnTriple {
    int a, b, c;

    ColumnTriple(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
        if (a < b || b < c || c < 0) throw std::invalid_argument("column triple must satisfy a >= b >= c >= 0");
    }

    Partition as_partition() const { return Partition::columns({a, b, c}); }
    std::string to_string() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    }
};

// Closed form for the multiplicity of the (a,b,c)-column component in the
// third symmetric power of a k-th wedge power: a six-way case split on the
// parities and residues of b-c and a-b.
inline long long s3_wedge_multiplicity(const ColumnTriple& t, int k) {
    if (t.a + t.b + t.c != 3 * k)
        throw std::invalid_argument("s3_wedge_multiplicity: column lengths must sum to 3k");
    int u = t.b - t.c, v = t.a - t.b;
    int mn = std::min(u, v), mx = std::max(u, v);
    int q = mn + 1;
    auto ceil6 = [](int x) { return (x + 5) / 6; };
    auto floor6 = [](int x) { return x / 6; };
    if (mn % 2 == 0) {
        return mx % 2 == 0 ? ceil6(q) : floor6(q);
    }
    switch (mn % 3) {
        case 0: return ceil6(q);
        case 1: return floor6(q);
        default:
            if (q % 6 != 0) throw std::logic_error("s3_wedge_multiplicity: expected exact division");
            return q / 6;
    }
}

// Full closed-form table of S^3(/\^k) over column triples.
inline IsotypicTable s3_wedge_table(int k) {
    IsotypicTable table(Convention::Columns, "S^3(wedge^" + std::to_string(k) + ")");
    for (int a = k; a <= 3 * k; ++a)
        for (int b = 0; b <= a; ++b) {
            int c = 3 * k - a - b;
            if (c < 0 || c > b) continue;
            table.add(Partition::columns({a, b, c}), s3_wedge_multiplicity(ColumnTriple(a, b, c), k));
        }
    return table;
}

// Independent route to the same table through the symmetric-function engine:
// expand the dual plethysm in three variables and transpose the diagrams.
inline IsotypicTable s3_wedge_table_oracle(int k) {
    Partition outer = k % 2 == 0 ? Partition::rows({3}) : Partition::rows({1, 1, 1});
    SymmetricExpression ch = plethysm_character(outer, k, InnerFunctor::Sym, 3);
    IsotypicTable rows_table = schur_expand(ch, 3);
    IsotypicTable table(Convention::Columns, "S^3(wedge^" + std::to_string(k) + ") via characters");
    for (const auto& [p, m] : rows_table.entries()) {
        std::vector<int> abc = p.parts();
        table.add(Partition::columns(abc), m);
    }
    return table;
}

// Two-row decompositions of the second symmetric and exterior powers of S^n:
// row lengths of equal parity for the symmetric square, opposite for the
// wedge -- i.e. both rows even resp. both odd as lengths.
inline IsotypicTable sym2_table(int n) {
    if (n < 1) throw std::invalid_argument("sym2_table: n must be positive");
    IsotypicTable t(Convention::Rows, "S^2(S^" + std::to_string(n) + ")");
    for (int second = 0; second <= n; second += 2) t.add(Partition::rows({2 * n - second, second}), 1);
    return t;
}

inline IsotypicTable wedge2_table(int n) {
    if (n < 1) throw std::invalid_argument("wedge2_table: n must be positive");
    IsotypicTable t(Convention::Rows, "wedge^2(S^" + std::to_string(n) + ")");
    for (int second = 1; second <= n; second += 2) t.add(Partition::rows({2 * n - second, second}), 1);
    return t;
}

// Reduction step for wedge plethysms: a diagram with a full first row of
// length |mu| drops that row while the inner degree decreases by one,
// preserving the multiplicity in S^mu(/\^k).
inline std::pair<Partition, int> reduce_column(const Partition& lam, int mu_weight, int k) {
    lam.require(Convention::Rows, "reduce_column");
    if (k < 1) throw std::invalid_argument("reduce_column: inner degree already zero");
    if (lam.part(1) != mu_weight)
        throw std::invalid_argument("reduce_column: first row must have length equal to the outer weight");
    std::vector<int> rest(lam.parts().begin() + 1, lam.parts().end());
    return {Partition::rows(std::move(rest)), k - 1};
}

// Symmetric-power counterpart: a diagram with exactly |mu| rows drops its
// first column, the outer functor conjugates, the inner degree decreases.
struct RowReduction {
    Partition lam;
    Partition outer;
    int k;
};

inline RowReduction reduce_row(const Partition& lam, const Partition& mu, int k) {
    lam.require(Convention::Rows, "reduce_row");
    mu.require(Convention::Rows, "reduce_row");
    if (k < 1) throw std::invalid_argument("reduce_row: inner degree already zero");
    if (lam.length() != mu.weight())
        throw std::invalid_argument("reduce_row: diagram must have exactly as many rows as the outer weight");
    std::vector<int> rest = lam.parts();
    for (int& p : rest) --p;
    return {Partition::rows(std::move(rest)), mu.transpose(), k - 1};
}

}  // namespace minsec
