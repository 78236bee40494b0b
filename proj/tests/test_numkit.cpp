#include <numbers>

#include "support.hpp"

using namespace nle;
using testing_support::kInvSqrt2;

TEST(Tensor, IdentityTimesIdentity) {
    EXPECT_EQ((tensor(Matrix::identity(2), Matrix::identity(2)) - Matrix::identity(4)).max_abs(), 0.0);
}

TEST(Tensor, BasisProjectors) {
    const Matrix m = tensor(Matrix::projector(basis_vector(2, 0)), Matrix::projector(basis_vector(2, 1)));
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(m(r, c), cplx(r == 1 && c == 1 ? 1.0 : 0.0));
    }
}

TEST(PartialTrace, BellMarginalIsMaximallyMixed) {
    const Matrix rho = testing_support::phi_plus().projector();
    for (Party keep : {Party::A, Party::B}) {
        const Matrix m = partial_trace(rho, Dims{2, 2}, keep);
        EXPECT_LT((m - Matrix::identity(2) * cplx{0.5, 0.0}).max_abs(), 1e-15);
    }
}

TEST(PartialTrace, ProductState) {
    const Matrix rho = Matrix::projector(kron(basis_vector(2, 0), basis_vector(2, 1)));
    EXPECT_LT((partial_trace(rho, Dims{2, 2}, Party::A) - Matrix::projector(basis_vector(2, 0))).max_abs(), 1e-15);
    EXPECT_LT((partial_trace(rho, Dims{2, 2}, Party::B) - Matrix::projector(basis_vector(2, 1))).max_abs(), 1e-15);
}

TEST(PartialTrace, MatchesReducedPure) {
    sampling::Rng rng(3);
    const Dims d{3, 2};
    for (int k = 0; k < 20; ++k) {
        const Vector x = sampling::random_vector(rng, d.total());
        for (Party keep : {Party::A, Party::B}) {
            EXPECT_LT((partial_trace(Matrix::projector(x), d, keep) - reduced_pure(x, d, keep)).max_abs(), 1e-14);
        }
    }
}

TEST(PartialTrace, BadDims) { EXPECT_NLE_ERROR(partial_trace(Matrix::identity(5), Dims{2, 2}, Party::A), "bad-dims"); }

TEST(Eigh, Diagonal) {
    const std::vector<double> d{2.0 / 3.0, 1.0 / 3.0};
    const auto v = eigvalsh(Matrix::diagonal(d));
    EXPECT_NEAR(v[0], 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(v[1], 2.0 / 3.0, 1e-15);
}

TEST(Eigh, RankOneAllOnes) {
    Matrix j(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) j(r, c) = 1.0 / 9.0;
    const auto v = eigvalsh(j);
    EXPECT_NEAR(v[0], 0.0, 1e-14);
    EXPECT_NEAR(v[1], 0.0, 1e-14);
    EXPECT_NEAR(v[2], 1.0 / 3.0, 1e-14);
}

// (1/3)diag(0,1,1) + J/9: the symmetric sector solves 27 l^2 - 18 l + 1 = 0,
// the antisymmetric one gives 1/3.
TEST(Eigh, QuadraticSectorOracle) {
    Matrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = 1.0 / 9.0;
    m(1, 1) += 1.0 / 3.0;
    m(2, 2) += 1.0 / 3.0;
    const double disc = std::sqrt(18.0 * 18.0 - 4.0 * 27.0);
    const auto v = eigvalsh(m);
    EXPECT_NEAR(v[0], (18.0 - disc) / 54.0, 1e-12);
    EXPECT_NEAR(v[1], 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(v[2], (18.0 + disc) / 54.0, 1e-12);
    EXPECT_NEAR(v[0], 0.061166, 1e-5);
    EXPECT_NEAR(v[2], 0.605500, 1e-5);
}

TEST(Eigh, ComplexReconstructionAndOrthonormality) {
    sampling::Rng rng(5);
    for (std::size_t n = 1; n <= 9; ++n) {
        const Matrix h = sampling::random_hermitian(rng, n);
        const Eigensystem es = eigh(h);
        EXPECT_LT((es.vectors * Matrix::diagonal(es.values) * es.vectors.adjoint() - h).max_abs(), 1e-10);
        EXPECT_LT(unitarity_defect(es.vectors), 1e-10);
        EXPECT_TRUE(std::is_sorted(es.values.begin(), es.values.end()));
    }
}

TEST(Eigh, RejectsNonHermitian) {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    EXPECT_NLE_ERROR(eigh(m), "not-hermitian");
}

TEST(Expm, ZeroIsIdentity) { EXPECT_LT((expm_skew_hermitian(Matrix(3, 3)) - Matrix::identity(3)).max_abs(), 1e-15); }

TEST(Expm, PauliYRotation) {
    Matrix sy(2, 2);
    sy(0, 1) = cplx{0.0, -1.0};
    sy(1, 0) = cplx{0.0, 1.0};
    const Matrix u = expm_skew_hermitian(sy * cplx{std::numbers::pi / 2.0, 0.0});
    EXPECT_TRUE(is_unitary(u));
    const Vector out = u * basis_vector(2, 0);
    EXPECT_NEAR(std::abs(out[1]), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(out[0]), 0.0, 1e-12);
}

TEST(Expm, AgreesWithSpectralExponential) {
    sampling::Rng rng(8);
    for (std::size_t n = 2; n <= 6; ++n) {
        const Matrix h = sampling::random_hermitian(rng, n, 3.0);
        const Eigensystem es = eigh(h);
        Matrix d(n, n);
        for (std::size_t k = 0; k < n; ++k) d(k, k) = std::polar(1.0, es.values[k]);
        EXPECT_LT((expm_skew_hermitian(h) - es.vectors * d * es.vectors.adjoint()).max_abs(), 1e-10);
    }
}

TEST(Gram, OrthonormalIsIdentity) {
    const std::vector<Vector> v{basis_vector(3, 0), basis_vector(3, 1), basis_vector(3, 2)};
    EXPECT_LT(gram_identity_defect(v), 1e-15);
}

TEST(Gram, ZeroAndPlus) {
    const std::vector<Vector> v{basis_vector(2, 0), Vector{kInvSqrt2, kInvSqrt2}};
    const Matrix g = gram(v);
    EXPECT_NEAR(g(0, 1).real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(g(1, 0).real(), kInvSqrt2, 1e-15);
}

TEST(Gram, UpbIsOrthonormal) { EXPECT_LT(gram_identity_defect(catalog::build("tiles-upb").vectors()), 1e-12); }

TEST(Gram, LengthMismatch) {
    const std::vector<Vector> v{basis_vector(2, 0), basis_vector(3, 0)};
    EXPECT_NLE_ERROR(gram(v), "bad-dims");
}

TEST(Shannon, Values) {
    const std::vector<double> p{1.0 / 3.0, 2.0 / 3.0};
    EXPECT_NEAR(shannon_bits(p), testing_support::h2(1.0 / 3.0), 1e-15);
    const std::vector<double> q{1.0};
    EXPECT_EQ(shannon_bits(q), 0.0);
}
