#include "support.hpp"

using namespace nle;

namespace {

ProductSet named(const std::string& n) { return ProductSet::from_ensemble(catalog::build(n)); }

// Reducible from `side` iff some bipartition has every cross pair orthogonal on that side.
bool reducible_brute_force(const ProductSet& s, Party side) {
    const std::size_t k = s.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            for (std::size_t j = 0; j < k && ok; ++j) {
                if (((mask >> i) & 1) && !((mask >> j) & 1)) {
                    ok = std::abs(inner(s[i].part(side), s[j].part(side))) <= kTol.orthogonality;
                }
            }
        }
        if (ok) return true;
    }
    return false;
}

std::vector<Vector> random_basis(sampling::Rng& rng, std::size_t d) {
    const Matrix u = sampling::random_unitary(rng, d);
    std::vector<Vector> out;
    for (std::size_t c = 0; c < d; ++c) out.push_back(u.column(c));
    return out;
}

// A 2 x d full product basis built either A-first or B-first.
ProductSet random_fpb(sampling::Rng& rng, std::size_t d, bool a_first) {
    std::vector<ProductMember> m;
    const double p = 1.0 / static_cast<double>(2 * d);
    if (a_first) {
        const auto a = random_basis(rng, 2);
        for (std::size_t i = 0; i < 2; ++i) {
            for (const Vector& b : random_basis(rng, d)) m.push_back(ProductMember{p, a[i], b});
        }
    } else {
        for (const Vector& b : random_basis(rng, d)) {
            for (const Vector& a : random_basis(rng, 2)) m.push_back(ProductMember{p, a, b});
        }
    }
    return ProductSet(Dims{2, d}, std::move(m));
}

}  // namespace

TEST(ReducibleFrom, AgreesWithBruteForce) {
    for (const char* name : {"e1-computational", "e2-case2", "case-3x2", "nlwe-3x3", "tiles-upb", "walgate-hardy"}) {
        const ProductSet s = named(name);
        for (Party side : {Party::A, Party::B}) {
            EXPECT_EQ(reducible_from(s, side).has_value(), reducible_brute_force(s, side)) << name;
        }
    }
    sampling::Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        const ProductSet s = random_fpb(rng, 2 + t % 3, t % 2 == 0);
        for (Party side : {Party::A, Party::B}) {
            EXPECT_EQ(reducible_from(s, side).has_value(), reducible_brute_force(s, side));
        }
    }
}

TEST(ReducibleFrom, PartitionIsValid) {
    const auto p = reducible_from(named("e2-case2"), Party::A);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->size(), 2u);
    EXPECT_FALSE(reducible_from(named("e2-case2"), Party::B).has_value());
}

TEST(ReducibleFrom, TrivialSet) {
    const ProductSet one(Dims{2, 2}, {ProductMember{1.0, basis_vector(2, 0), basis_vector(2, 0)}});
    EXPECT_NLE_ERROR(reducible_from(one, Party::A), "trivial-set");
}

TEST(ProductSet, RejectsOverlapsAndEntangledMembers) {
    const Vector zero = basis_vector(2, 0);
    EXPECT_NLE_ERROR(ProductSet(Dims{2, 2}, {ProductMember{0.5, zero, zero}, ProductMember{0.5, zero, zero}}),
                     "not-orthogonal");
    EXPECT_NLE_ERROR(named("bell-pair"), "not-product-ensemble");
}

TEST(Dissect, ComputationalBasisFromEitherSide) {
    for (Party p : {Party::A, Party::B}) {
        const DissectionTree t = dissect(named("e1-computational"), p);
        EXPECT_TRUE(fully_dissected(t));
        std::size_t leaves = 0;
        for_each_leaf(t, [&](const DissectionTree&) { ++leaves; });
        EXPECT_EQ(leaves, 4u);
    }
}

TEST(Dissect, CaseThreeByTwo) {
    const ProductSet s = named("case-3x2");
    EXPECT_TRUE(fully_dissected(dissect(s, Party::B)));
    const DissectionTree a = dissect(s, Party::A);
    EXPECT_FALSE(fully_dissected(a));
    std::size_t blocked = 0;
    for_each_leaf(a, [&](const DissectionTree& l) {
        if (l.status == LeafStatus::blocked) {
            EXPECT_EQ(l.members.size(), 4u);
            ++blocked;
        }
    });
    EXPECT_EQ(blocked, 1u);
}

TEST(Dissect, UpbIsSingleIrreducibleLeaf) {
    const DissectionTree t = dissect(named("tiles-upb"));
    EXPECT_TRUE(t.is_leaf());
    EXPECT_EQ(t.status, LeafStatus::irreducible);
    EXPECT_EQ(t.members.size(), 5u);
}

TEST(Dissect, E2FromBIsBlockedAtRoot) {
    const DissectionTree t = dissect(named("e2-case2"), Party::B);
    EXPECT_TRUE(t.is_leaf());
    EXPECT_EQ(t.status, LeafStatus::blocked);
    EXPECT_NE(render(t).find("leaf: irreducible"), std::string::npos);
}

TEST(Classify, CatalogLabels) {
    EXPECT_EQ(classify(named("e1-computational")).label(), "dissectible-either-side");
    EXPECT_EQ(classify(named("e2-case2")).label(), "dissectible-one-side(A)");
    EXPECT_EQ(classify(named("case-3x2")).label(), "dissectible-one-side(B)");
    EXPECT_EQ(classify(named("nlwe-3x3")).label(), "non-dissectible");
    EXPECT_EQ(classify(named("tiles-upb")).label(), "non-dissectible");
}

// Every 2 x d full product basis can be dissected.
TEST(Classify, TwoByDFullProductBasesAreDissectible) {
    sampling::Rng rng(2024);
    for (int t = 0; t < 200; ++t) {
        const ProductSet s = random_fpb(rng, 2 + t % 4, t % 2 == 0);
        EXPECT_NE(classify(s).kind, Dissectibility::non_dissectible);
        EXPECT_TRUE(fully_dissected(dissect(s)));
    }
}

TEST(WeightedNonlocalEntropy, Examples) {
    EXPECT_NEAR(weighted_nonlocal_entropy(named("e1-computational")), 0.0, 1e-15);
    EXPECT_NEAR(weighted_nonlocal_entropy(named("nlwe-3x3")), 4.0 / 9.0, 1e-12);
    EXPECT_NEAR(weighted_nonlocal_entropy(named("case-3x2"), Party::A), 1.0 / 3.0, 1e-12);
}

TEST(Alternations, CountsPartyChanges) {
    EXPECT_EQ(alternations(dissect(named("e2-case2"), Party::A)), 1u);
    EXPECT_EQ(alternations(dissect(named("tiles-upb"))), 0u);
}
