#include "support.hpp"

using namespace nle;
using testing_support::kInvSqrt2;
using testing_support::phi_plus;

TEST(PureState, RejectsUnnormalized) { EXPECT_NLE_ERROR(PureState(Dims{2, 2}, {1.0, 1.0, 0.0, 0.0}), "not-normalized"); }

TEST(PureState, RejectsWrongLength) { EXPECT_NLE_ERROR(PureState(Dims{2, 2}, {1.0, 0.0, 0.0}), "bad-dims"); }

TEST(VnEntropy, Examples) {
    EXPECT_NEAR(vn_entropy(Matrix::projector(basis_vector(2, 0))), 0.0, 1e-15);
    EXPECT_NEAR(vn_entropy(Matrix::identity(2) * cplx{0.5, 0.0}), 1.0, 1e-14);
    const std::vector<double> d{2.0 / 3.0, 1.0 / 3.0};
    EXPECT_NEAR(vn_entropy(Matrix::diagonal(d)), 0.918296, 1e-5);
}

TEST(VnEntropy, RejectsNegativeSpectrum) {
    const std::vector<double> d{1.5, -0.5};
    EXPECT_NLE_ERROR(vn_entropy(Matrix::diagonal(d)), "not-a-state");
}

TEST(EntanglementEntropy, Examples) {
    EXPECT_NEAR(entanglement_entropy(phi_plus()), 1.0, 1e-14);
    EXPECT_NEAR(entanglement_entropy(PureState::basis(Dims{2, 3}, 1, 2)), 0.0, 1e-15);
    Vector x(9);
    for (std::size_t k = 0; k < 3; ++k) x[4 * k] = 1.0 / std::sqrt(3.0);
    EXPECT_NEAR(entanglement_entropy(PureState(Dims{3, 3}, x)), std::log2(3.0), 1e-13);
}

TEST(Schmidt, Examples) {
    EXPECT_EQ(schmidt(PureState::basis(Dims{2, 2}, 0, 1)).coefficients.size(), 1u);
    const auto bell = schmidt(phi_plus()).coefficients;
    ASSERT_EQ(bell.size(), 2u);
    EXPECT_NEAR(bell[0], kInvSqrt2, 1e-14);
    EXPECT_NEAR(bell[1], kInvSqrt2, 1e-14);
    const auto c = schmidt(PureState(Dims{2, 2}, {0.8, 0.0, 0.0, 0.6})).coefficients;
    ASSERT_EQ(c.size(), 2u);
    EXPECT_NEAR(c[0], 0.8, 1e-14);
    EXPECT_NEAR(c[1], 0.6, 1e-14);
}

TEST(Schmidt, Reconstructs) {
    sampling::Rng rng(21);
    for (Dims d : {Dims{2, 3}, Dims{3, 2}, Dims{3, 3}}) {
        const PureState s = sampling::random_state(rng, d);
        const Schmidt sd = schmidt(s);
        Vector sum(d.total());
        for (std::size_t k = 0; k < sd.coefficients.size(); ++k) {
            const Vector t = kron(sd.left[k], sd.right[k]);
            for (std::size_t i = 0; i < t.size(); ++i) sum[i] += sd.coefficients[k] * t[i];
        }
        for (std::size_t i = 0; i < sum.size(); ++i) EXPECT_LT(std::abs(sum[i] - s.vector()[i]), 1e-10);
    }
}

TEST(AverageState, BellPairCrossTermsCancel) {
    const Matrix rho = average_state(catalog::build("bell-pair"));
    Matrix want(4, 4);
    want(0, 0) = 0.5;
    want(3, 3) = 0.5;
    EXPECT_LT((rho - want).max_abs(), 1e-15);
}

TEST(AverageState, SingleMemberAndBellBasis) {
    const Ensemble one = Ensemble::uniform(Dims{2, 2}, {phi_plus()});
    EXPECT_LT((average_state(one) - phi_plus().projector()).max_abs(), 1e-15);
    EXPECT_LT((average_state(catalog::build("bell-full")) - Matrix::identity(4) * cplx{0.25, 0.0}).max_abs(), 1e-15);
}

TEST(MarginalEntropies, Examples) {
    const MarginalEntropies bp = marginal_entropies(catalog::build("bell-pair"));
    EXPECT_NEAR(bp.a, 1.0, 1e-14);
    EXPECT_NEAR(bp.b, 1.0, 1e-14);
    const MarginalEntropies mixed = marginal_entropies(catalog::build("more-nl-mixed"));
    EXPECT_NEAR(mixed.a, 1.43551, 1e-4);
    EXPECT_NEAR(mixed.b, 1.43551, 1e-4);
    const MarginalEntropies zero = marginal_entropies(Ensemble::uniform(Dims{2, 2}, {PureState::basis(Dims{2, 2}, 0, 0)}));
    EXPECT_NEAR(zero.a, 0.0, 1e-15);
    EXPECT_NEAR(zero.b, 0.0, 1e-15);
}

// more-nl-mixed: the B marginal of the average state is diag(5/9, 2/9, 2/9) up to ordering.
TEST(MarginalEntropies, MixedSetSpectrum) {
    const Ensemble e = catalog::build("more-nl-mixed");
    const auto ev = eigvalsh(partial_trace(average_state(e), e.dims(), Party::B));
    EXPECT_NEAR(ev[0], 2.0 / 9.0, 1e-12);
    EXPECT_NEAR(ev[1], 2.0 / 9.0, 1e-12);
    EXPECT_NEAR(ev[2], 5.0 / 9.0, 1e-12);
}

TEST(Ensemble, Validation) {
    const PureState s = PureState::basis(Dims{2, 2}, 0, 0);
    EXPECT_NLE_ERROR(Ensemble(Dims{2, 2}, {Member{0.5, s}}), "bad-probabilities");
    EXPECT_NLE_ERROR(Ensemble(Dims{2, 3}, {Member{1.0, s}}), "bad-dims");
}

TEST(Ensemble, SubsetRenormalizes) {
    const Ensemble e = catalog::build("bell-full");
    const std::vector<std::size_t> pick{0, 2};
    const Ensemble s = e.subset(pick);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_NEAR(s[0].probability, 0.5, 1e-15);
    const std::vector<std::size_t> dup{1, 1};
    EXPECT_ANY_THROW(e.subset(dup));
}

TEST(Ensemble, OrthogonalAndProductFlags) {
    EXPECT_TRUE(catalog::build("nlwe-3x3").is_orthogonal());
    EXPECT_TRUE(catalog::build("nlwe-3x3").is_product());
    EXPECT_FALSE(catalog::build("bell-pair").is_product());
}
