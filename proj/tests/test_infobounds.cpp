#include <numbers>

#include "support.hpp"

using namespace nle;

TEST(Holevo, Examples) {
    EXPECT_NEAR(holevo_chi(catalog::build("bell-full")), 2.0, 1e-12);
    EXPECT_NEAR(holevo_chi(Ensemble::uniform(Dims{2, 2}, {testing_support::phi_plus()})), 0.0, 1e-12);
    const Ensemble classical =
        Ensemble::uniform(Dims{2, 2}, {PureState::basis(Dims{2, 2}, 0, 0), PureState::basis(Dims{2, 2}, 1, 1)});
    EXPECT_NEAR(holevo_chi(classical), 1.0, 1e-12);
}

TEST(LocalHolevo, Examples) {
    EXPECT_NEAR(local_holevo(catalog::build("bell-full")), 1.0, 1e-12);
    EXPECT_NEAR(local_holevo(catalog::build("nlwe-3x3")), 2.0 * std::log2(3.0), 1e-12);
    EXPECT_NEAR(local_holevo(Ensemble::uniform(Dims{2, 2}, {PureState::basis(Dims{2, 2}, 0, 1)})), 0.0, 1e-12);
}

TEST(Chsh, Examples) {
    EXPECT_NEAR(chsh_max(testing_support::phi_plus()), 2.0 * std::numbers::sqrt2, 1e-12);
    EXPECT_EQ(chsh_max(PureState::basis(Dims{2, 2}, 0, 0)), 2.0);
    EXPECT_NEAR(chsh_max(PureState(Dims{2, 2}, {0.8, 0.0, 0.0, 0.6})), 2.0 * std::sqrt(1.0 + 0.96 * 0.96), 1e-12);
    EXPECT_NLE_ERROR(chsh_max(PureState::basis(Dims{2, 3}, 0, 0)), "unsupported-dims");
}

TEST(CnotBounds, NlweProductInput) {
    const BoundsReport r = cnot_bounds(catalog::build("nlwe-3x3"), Mode{});
    EXPECT_TRUE(r.product_input);
    EXPECT_EQ(r.entangled_after, 4u);
    EXPECT_TRUE(r.lower_applies);
    EXPECT_FALSE(r.upper_applies);
}

TEST(CnotBounds, OrthPairEntangledInput) {
    catalog::Params p;
    p.values = {{"a1", 0.8}, {"a2", 0.75}};
    const BoundsReport r = cnot_bounds(catalog::build("orth-pair", p), Mode{});
    EXPECT_FALSE(r.product_input);
    EXPECT_TRUE(r.upper_applies);
    EXPECT_GT(r.entangled_after, 0u);
    EXPECT_LE(r.cnot_upper, 2.0 + 1e-12);
}

TEST(CnotBounds, InvariantEnsembleCoincides) {
    const Ensemble e =
        Ensemble::uniform(Dims{2, 2}, {PureState::basis(Dims{2, 2}, 0, 0), PureState::basis(Dims{2, 2}, 0, 1)});
    const BoundsReport r = cnot_bounds(e, Mode{});
    EXPECT_EQ(r.entangled_after, 0u);
    EXPECT_NEAR(r.cnot_lower, r.local_holevo, 1e-12);
}

TEST(CnotBounds, RejectsOtherModes) {
    Mode m;
    m.kind = ModeKind::assign;
    EXPECT_NLE_ERROR(cnot_bounds(catalog::build("bell-full"), m), "bad-mode");
}
