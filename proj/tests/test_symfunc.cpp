#include <catch2/catch_amalgamated.hpp>

#include "minsec/plethysm_closed.hpp"
#include "minsec/sampling.hpp"
#include "minsec/symfunc.hpp"

using namespace minsec;

namespace {

SparsePolynomial X(int i) { return SparsePolynomial::variable(sym_x(i)); }

Integer inner_space_dim(InnerFunctor inner, int k, int d) {
    return inner == InnerFunctor::Sym ? binomial(d + k - 1, k) : binomial(d, k);
}

// Dimension identity for a decomposition of S^mu applied to an inner space.
void check_dimension_identity(const IsotypicTable& table, const Partition& mu, InnerFunctor inner,
                              int k, int d) {
    int n = static_cast<int>(inner_space_dim(inner, k, d).convert_to<long long>());
    Integer expected = n == 0 ? Integer(mu.weight() == 0 ? 1 : 0) : gl_dimension(mu, n);
    CHECK(table.total_dimension(d) == expected);
}

}  // namespace

TEST_CASE("h_power examples") {
    CHECK(h_power(0, 3, 2).poly == SparsePolynomial::constant(1));
    CHECK(h_power(1, 2, 2).poly == X(1).pow(2) + X(2).pow(2));
    CHECK(h_power(2, 1, 2).poly == X(1).pow(2) + X(1) * X(2) + X(2).pow(2));
}

TEST_CASE("e_power examples") {
    CHECK(e_power(2, 1, 3).poly == X(1) * X(2) + X(1) * X(3) + X(2) * X(3));
    CHECK(e_power(4, 1, 3).poly.is_zero());
    CHECK(e_power(0, 1, 3).poly == SparsePolynomial::constant(1));
}

TEST_CASE("psi_alpha examples") {
    CHECK(psi_alpha(Partition::rows({1}), 3, 2).poly == h_power(3, 1, 2).poly);
    CHECK(psi_alpha(Partition::rows({1, 1}), 1, 2).poly == (X(1) + X(2)).pow(2));
    SparsePolynomial expected = h_power(2, 2, 2).poly * h_power(2, 1, 2).poly;
    CHECK(psi_alpha(Partition::rows({2, 1}), 2, 2).poly == expected);
}

TEST_CASE("symmetry of generated expressions") {
    CHECK(is_symmetric(h_power(3, 2, 3)));
    CHECK(is_symmetric(psi_alpha(Partition::rows({2, 1}), 2, 3)));
    CHECK(is_symmetric(plethysm_character(Partition::rows({2, 1}), 2, InnerFunctor::Sym, 3)));
    SymmetricExpression bad{X(1), 2};
    CHECK(!is_symmetric(bad));
}

TEST_CASE("plethysm characters in degree one") {
    CHECK(plethysm_character(Partition::rows({2}), 1, InnerFunctor::Sym, 2).poly == h_power(2, 1, 2).poly);
    SparsePolynomial e2 = X(1) * X(2);
    CHECK(plethysm_character(Partition::rows({1, 1}), 1, InnerFunctor::Sym, 2).poly == e2);
    CHECK_THROWS_AS(plethysm_character(Partition::rows({3, 2}), 1, InnerFunctor::Sym, 2),
                    std::invalid_argument);
}

TEST_CASE("schur expansion basics") {
    CHECK(schur_expand(h_power(2, 1, 2), 2).multiplicity(Partition::rows({2})) == 1);
    CHECK(schur_expand(h_power(2, 1, 2), 2).size() == 1);

    SymmetricExpression sq{(X(1) + X(2)).pow(2), 2};
    IsotypicTable t = schur_expand(sq, 2);
    CHECK(t.multiplicity(Partition::rows({2})) == 1);
    CHECK(t.multiplicity(Partition::rows({1, 1})) == 1);
    CHECK(t.size() == 2);

    SymmetricExpression nonhomog{X(1) + SparsePolynomial::constant(1), 2};
    CHECK_THROWS_AS(schur_expand(nonhomog, 2), std::invalid_argument);
    CHECK_THROWS_AS(schur_expand(sq, 3), std::invalid_argument);
}

TEST_CASE("cubic plethysm of the symmetric square") {
    IsotypicTable t = schur_expand(plethysm_character(Partition::rows({3}), 2, InnerFunctor::Sym, 3), 3);
    CHECK(t.multiplicity(Partition::rows({6})) == 1);
    CHECK(t.multiplicity(Partition::rows({4, 2})) == 1);
    CHECK(t.multiplicity(Partition::rows({2, 2, 2})) == 1);
    CHECK(t.size() == 3);
    CHECK(t.total_dimension(3) == 56);  // dim S^3(S^2 C^3) = C(8,3)
}

TEST_CASE("cubic plethysm of the wedge square via column triples") {
    IsotypicTable t = s3_wedge_table_oracle(2);
    CHECK(t.multiplicity(Partition::columns({6, 0, 0})) == 1);
    CHECK(t.multiplicity(Partition::columns({4, 2, 0})) == 1);
    CHECK(t.multiplicity(Partition::columns({2, 2, 2})) == 1);
    CHECK(t.size() == 3);
    // Rank-4 dimensions: 0 + 6 + 50 = C(8,3).
    CHECK(t.total_dimension(4) == 56);
}

TEST_CASE("schur expansion is stable in the variable count") {
    for (int k = 1; k <= 3; ++k) {
        IsotypicTable a = schur_expand(plethysm_character(Partition::rows({3}), k, InnerFunctor::Sym, 3), 3);
        IsotypicTable b = schur_expand(plethysm_character(Partition::rows({3}), k, InnerFunctor::Sym, 4), 3);
        CHECK(a == b);
    }
}

TEST_CASE("characters satisfy the dimension identity") {
    std::vector<Partition> mus = {Partition::rows({2}), Partition::rows({1, 1}), Partition::rows({3}),
                                  Partition::rows({2, 1}), Partition::rows({1, 1, 1})};
    for (const Partition& mu : mus)
        for (int k = 1; k <= 3; ++k)
            for (int d = 2; d <= 4; ++d)
                for (InnerFunctor inner : {InnerFunctor::Sym, InnerFunctor::Wedge}) {
                    IsotypicTable t = schur_expand(plethysm_character(mu, k, inner, d), d);
                    check_dimension_identity(t, mu, inner, k, d);
                }
}

TEST_CASE("lazy staircase extraction agrees with the expanded product") {
    // The permutation-sum route must reproduce the small-variable product
    // route on the same character.
    for (int k = 1; k <= 3; ++k) {
        SymmetricExpression f = plethysm_character(Partition::rows({2, 1}), k, InnerFunctor::Sym, 3);
        IsotypicTable via_product = schur_expand(f, 3);
        detail::DenseTerms terms(f.poly, 3);
        for (auto& parts : partitions_of(3 * k, 3)) {
            Partition lam = Partition::rows(parts);
            CHECK(detail::staircase_coefficient(terms, lam) == via_product.multiplicity(lam));
        }
    }
}

TEST_CASE("apply_duality") {
    IsotypicTable self(Convention::Rows);
    self.add(Partition::rows({2, 2}), 1);
    CHECK(apply_duality(self, 0) == self);

    IsotypicTable sym2(Convention::Rows);
    sym2.add(Partition::rows({4}), 1);
    sym2.add(Partition::rows({2, 2}), 1);
    IsotypicTable wedge2 = apply_duality(sym2, 0);
    CHECK(wedge2.multiplicity(Partition::rows({1, 1, 1, 1})) == 1);
    CHECK(wedge2.multiplicity(Partition::rows({2, 2})) == 1);
    CHECK(wedge2.size() == 2);
    // Independent route: the wedge character expanded directly.
    IsotypicTable direct = schur_expand(plethysm_character(Partition::rows({2}), 2, InnerFunctor::Wedge, 4), 4);
    CHECK(direct == wedge2);

    IsotypicTable empty(Convention::Rows);
    CHECK(apply_duality(empty, 1).empty());
}

TEST_CASE("transpose duality holds for both routes") {
    // Even inner degree: diagrams transpose. Odd: outer functor conjugates too.
    for (int k = 2; k <= 4; ++k) {
        for (const Partition& mu : {Partition::rows({2}), Partition::rows({1, 1})}) {
            int d = 2 * k;
            Partition outer = k % 2 == 0 ? mu : mu.transpose();
            IsotypicTable sym_side = schur_expand(plethysm_character(outer, k, InnerFunctor::Sym, 2), 2);
            IsotypicTable expected(Convention::Rows);
            for (const auto& [p, m] : sym_side.entries()) expected.add(p.transpose(), m);
            IsotypicTable wedge_side = schur_expand(plethysm_character(mu, k, InnerFunctor::Wedge, d), d);
            CHECK(wedge_side == expected);
        }
    }
}

TEST_CASE("plethysm_multiplicity matches full expansions") {
    for (int k = 1; k <= 3; ++k)
        for (const Partition& mu : {Partition::rows({3}), Partition::rows({2, 1}), Partition::rows({1, 1, 1})}) {
            Partition outer = k % 2 == 0 ? mu : mu.transpose();
            IsotypicTable full =
                apply_duality(schur_expand(plethysm_character(outer, k, InnerFunctor::Sym, 3), 3), k);
            for (auto& parts : partitions_of(3 * k, 3 * k)) {
                Partition lam = Partition::rows(parts);
                CHECK(plethysm_multiplicity(lam, mu, k, InnerFunctor::Wedge) == full.multiplicity(lam));
            }
        }
}

TEST_CASE("closed form for the cubic wedge plethysm") {
    CHECK(s3_wedge_multiplicity(ColumnTriple(1, 1, 1), 1) == 1);
    CHECK(s3_wedge_multiplicity(ColumnTriple(3, 0, 0), 1) == 0);

    IsotypicTable k2 = s3_wedge_table(2);
    CHECK(k2.multiplicity(Partition::columns({6, 0, 0})) == 1);
    CHECK(k2.multiplicity(Partition::columns({4, 2, 0})) == 1);
    CHECK(k2.multiplicity(Partition::columns({2, 2, 2})) == 1);
    CHECK(k2.size() == 3);

    CHECK_THROWS_AS(s3_wedge_multiplicity(ColumnTriple(2, 2, 1), 2), std::invalid_argument);
    CHECK_THROWS_AS(ColumnTriple(1, 2, 0), std::invalid_argument);
}

TEST_CASE("closed form agrees with the character oracle") {
    for (int k = 1; k <= 4; ++k) CHECK(s3_wedge_table(k) == s3_wedge_table_oracle(k));
}

TEST_CASE("two-row tables for square plethysms") {
    IsotypicTable s1 = sym2_table(1);
    CHECK(s1.multiplicity(Partition::rows({2})) == 1);
    CHECK(s1.size() == 1);
    IsotypicTable w1 = wedge2_table(1);
    CHECK(w1.multiplicity(Partition::rows({1, 1})) == 1);
    CHECK(w1.size() == 1);

    IsotypicTable s2 = sym2_table(2);
    CHECK(s2.multiplicity(Partition::rows({4})) == 1);
    CHECK(s2.multiplicity(Partition::rows({2, 2})) == 1);
    CHECK(s2.size() == 2);

    IsotypicTable w3 = wedge2_table(3);
    CHECK(w3.multiplicity(Partition::rows({5, 1})) == 1);
    CHECK(w3.multiplicity(Partition::rows({3, 3})) == 1);
    CHECK(w3.size() == 2);

    // Oracle comparison through the character engine.
    for (int n = 1; n <= 6; ++n) {
        CHECK(sym2_table(n) == schur_expand(plethysm_character(Partition::rows({2}), n, InnerFunctor::Sym, 2), 2));
        CHECK(wedge2_table(n) ==
              schur_expand(plethysm_character(Partition::rows({1, 1}), n, InnerFunctor::Sym, 2), 2));
    }
}

TEST_CASE("first-row reduction for wedge plethysms") {
    auto [lam1, k1] = reduce_column(Partition::rows({3, 1, 1, 1}), 3, 2);
    CHECK(lam1 == Partition::rows({1, 1, 1}));
    CHECK(k1 == 1);
    auto [lam2, k2] = reduce_column(Partition::rows({4}), 4, 1);
    CHECK(lam2 == Partition::rows({}));
    CHECK(k2 == 0);
    CHECK_THROWS_AS(reduce_column(Partition::rows({2, 1}), 3, 2), std::invalid_argument);

    // Multiplicity invariance against the character oracle.
    SampleRng rng(31);
    std::vector<Partition> mus = {Partition::rows({2}), Partition::rows({1, 1}), Partition::rows({3}),
                                  Partition::rows({2, 1}), Partition::rows({1, 1, 1})};
    int done = 0;
    while (done < 20) {
        const Partition& mu = mus[static_cast<std::size_t>(rng.next_int(0, static_cast<long long>(mus.size()) - 1))];
        int k = static_cast<int>(rng.next_int(2, 4));
        int n = mu.weight();
        auto rest_choices = partitions_of(n * (k - 1), 3 * k, n);
        if (rest_choices.empty()) continue;
        auto& rest = rest_choices[static_cast<std::size_t>(rng.next_int(0, static_cast<long long>(rest_choices.size()) - 1))];
        std::vector<int> parts{n};
        parts.insert(parts.end(), rest.begin(), rest.end());
        Partition lam = Partition::rows(parts);
        auto [reduced, k_red] = reduce_column(lam, n, k);
        CHECK(plethysm_multiplicity(lam, mu, k, InnerFunctor::Wedge) ==
              plethysm_multiplicity(reduced, mu, k_red, InnerFunctor::Wedge));
        ++done;
    }
}

TEST_CASE("first-column reduction for symmetric plethysms") {
    RowReduction r1 = reduce_row(Partition::rows({2, 1, 1}), Partition::rows({3}), 2);
    CHECK(r1.lam == Partition::rows({1}));
    CHECK(r1.outer == Partition::rows({1, 1, 1}));
    CHECK(r1.k == 1);
    RowReduction r2 = reduce_row(Partition::rows({1, 1}), Partition::rows({2}), 1);
    CHECK(r2.lam == Partition::rows({}));
    CHECK(r2.outer == Partition::rows({1, 1}));
    CHECK(r2.k == 0);
    CHECK_THROWS_AS(reduce_row(Partition::rows({2, 1}), Partition::rows({3}), 2), std::invalid_argument);

    SampleRng rng(37);
    std::vector<Partition> mus = {Partition::rows({2}), Partition::rows({1, 1}), Partition::rows({3}),
                                  Partition::rows({2, 1}), Partition::rows({1, 1, 1})};
    int done = 0;
    while (done < 20) {
        const Partition& mu = mus[static_cast<std::size_t>(rng.next_int(0, static_cast<long long>(mus.size()) - 1))];
        int k = static_cast<int>(rng.next_int(2, 4));
        int n = mu.weight();
        auto inner_choices = partitions_of(n * (k - 1), n);
        if (inner_choices.empty()) continue;
        auto& inner = inner_choices[static_cast<std::size_t>(rng.next_int(0, static_cast<long long>(inner_choices.size()) - 1))];
        std::vector<int> parts(static_cast<std::size_t>(n), 1);
        for (std::size_t i = 0; i < inner.size(); ++i) parts[i] += inner[i];
        Partition lam = Partition::rows(parts);
        RowReduction red = reduce_row(lam, mu, k);
        CHECK(plethysm_multiplicity(lam, mu, k, InnerFunctor::Sym) ==
              plethysm_multiplicity(red.lam, red.outer, red.k, InnerFunctor::Sym));
        ++done;
    }
}
