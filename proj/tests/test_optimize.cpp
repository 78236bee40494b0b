#include "support.hpp"

using namespace nle;

TEST(Maximize, QuadraticPeak) {
    SearchOptions opt;
    opt.restarts = 3;
    const SearchResult r = maximize(
        [](std::span<const double> x) { return -(x[0] - 0.3) * (x[0] - 0.3) - (x[1] + 1.1) * (x[1] + 1.1); }, 2, opt);
    EXPECT_NEAR(r.value, 0.0, 1e-10);
    EXPECT_NEAR(r.x[0], 0.3, 1e-5);
    EXPECT_NEAR(r.x[1], -1.1, 1e-5);
}

TEST(Maximize, DeterministicForSeed) {
    SearchOptions opt;
    opt.seed = 99;
    auto f = [](std::span<const double> x) { return std::sin(3 * x[0]) * std::cos(2 * x[1]) + 0.1 * x[2]; };
    const SearchResult a = maximize(f, 3, opt);
    const SearchResult b = maximize(f, 3, opt);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.x, b.x);
}

TEST(Maximize, StartsAreHonoured) {
    SearchOptions opt;
    opt.restarts = 1;
    opt.max_evals = 1;
    const std::vector<std::vector<double>> starts{{0.25}};
    const SearchResult r = maximize([](std::span<const double> x) { return x[0]; }, 1, opt, starts);
    EXPECT_GE(r.value, 0.25);
}

TEST(OptimizeUnitary, Constant) {
    EXPECT_EQ(optimize_unitary([](const Matrix&) { return 0.7; }, 3, 2, 0).value, 0.7);
}

TEST(OptimizeUnitary, FlipAmplitude) {
    const auto r = optimize_unitary([](const Matrix& u) { return std::norm(u(0, 1)); }, 2, 4, 1);
    EXPECT_NEAR(r.value, 1.0, 1e-6);
    EXPECT_NEAR(std::norm(param_to_unitary(r.param)(0, 1)), r.value, 1e-12);
}

// Rotating the uniform B part onto |0> before the CNOT yields a maximally entangled pair.
TEST(OptimizeUnitary, UniformProductToMaximalEntanglement) {
    const Dims d{3, 3};
    const Vector u3{1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0)};
    const Vector x = kron(u3, u3);
    const Matrix c = cnot(d, Party::A, 1);
    const auto r = optimize_unitary(
        [&](const Matrix& ub) {
            const Vector y = c * (tensor(Matrix::identity(3), ub) * x);
            return entanglement_entropy(PureState::normalize(d, y));
        },
        3, 8, 2);
    EXPECT_NEAR(r.value, std::log2(3.0), 1e-4);
}
