#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "minsec/partition.hpp"

namespace minsec {

// Littlewood-Richardson coefficient c^lam_{mu,nu}: the number of skew
// semistandard tableaux of shape lam/mu and content nu whose reverse reading
// word is a lattice word. Weights here stay small, so direct backtracking
// enumeration is both fast and easy to audit.
inline long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    lam.require(Convention::Rows, "lr_coefficient");
    mu.require(Convention::Rows, "lr_coefficient");
    nu.require(Convention::Rows, "lr_coefficient");
    if (lam.weight() != mu.weight() + nu.weight())
        throw std::invalid_argument("lr_coefficient: weight mismatch |lam| != |mu|+|nu|");
    if (mu.length() > lam.length()) return 0;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > lam.part(i)) return 0;
    if (nu.empty()) return 1;  // lam == mu forced by the weight check

    const int rows = lam.length();
    const int colors = nu.length();
    // Cells of the skew shape in reverse reading word order: top row to
    // bottom, right to left within a row.
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;
    for (int r = 1; r <= rows; ++r)
        for (int c = lam.part(r); c > mu.part(r); --c) cells.push_back({r, c});

    std::vector<std::vector<int>> entry(static_cast<std::size_t>(rows) + 1);
    for (int r = 0; r <= rows; ++r)
        entry[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lam.part(1)) + 1, 0);
    std::vector<int> count(static_cast<std::size_t>(colors) + 1, 0);

    long long total = 0;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[pos];
        int lo = 1, hi = colors;
        // Weakly increasing along rows: bounded above by the right neighbour.
        if (c < lam.part(r) && entry[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)] != 0)
            hi = std::min(hi, entry[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]);
        // Strictly increasing down columns.
        if (r > 1 && c > mu.part(r - 1)) lo = std::max(lo, entry[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int e = lo; e <= hi; ++e) {
            if (count[static_cast<std::size_t>(e)] >= nu.part(e)) continue;
            // Lattice word: in every prefix, #e never exceeds #(e-1).
            if (e > 1 && count[static_cast<std::size_t>(e)] + 1 > count[static_cast<std::size_t>(e - 1)]) continue;
            entry[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = e;
            ++count[static_cast<std::size_t>(e)];
            self(self, pos + 1);
            --count[static_cast<std::size_t>(e)];
            entry[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        }
    };
    rec(rec, 0);
    return total;
}

// Expansion of S_mu (x) S_nu into irreducibles.
inline std::map<Partition, long long> lr_expand_pair(const Partition& mu, const Partition& nu) {
    mu.require(Convention::Rows, "lr_expand_pair");
    nu.require(Convention::Rows, "lr_expand_pair");
    std::map<Partition, long long> out;
    int w = mu.weight() + nu.weight();
    int max_parts = mu.length() + nu.length();
    int max_part = mu.part(1) + nu.part(1);
    for (auto& parts : partitions_of(w, max_parts, max_part)) {
        Partition lam = Partition::rows(parts);
        long long c = lr_coefficient(lam, mu, nu);
        if (c > 0) out[lam] = c;
    }
    return out;
}

// Multiplicity of mu inside the tensor product of the given factors,
// by iterated Littlewood-Richardson expansion.
inline long long tensor_multiplicity(const Partition& mu, const std::vector<Partition>& factors) {
    mu.require(Convention::Rows, "tensor_multiplicity");
    std::map<Partition, long long> table;
    table[Partition::rows({})] = 1;
    for (const Partition& f : factors) {
        f.require(Convention::Rows, "tensor_multiplicity");
        std::map<Partition, long long> next;
        for (const auto& [p, m] : table) {
            for (const auto& [q, c] : lr_expand_pair(p, f)) {
                // Prune shapes that no longer fit inside mu.
                bool inside = true;
                for (int i = 1; i <= q.length(); ++i)
                    if (q.part(i) > mu.part(i)) {
                        inside = false;
                        break;
                    }
                if (inside) next[q] += m * c;
            }
        }
        table = std::move(next);
    }
    auto it = table.find(mu);
    return it == table.end() ? 0 : it->second;
}

}  // namespace minsec
