#include "support.hpp"

using namespace nle;

TEST(EnsembleIo, RoundTrip) {
    const Ensemble e = catalog::build("more-nl-mixed");
    const Ensemble back = parse_ensemble(ensemble_to_json(e).dump());
    ASSERT_EQ(back.size(), e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        EXPECT_NEAR(back[i].probability, e[i].probability, 1e-15);
        for (std::size_t k = 0; k < e.dims().total(); ++k) {
            EXPECT_LT(std::abs(back[i].state.vector()[k] - e[i].state.vector()[k]), 1e-15);
        }
    }
}

TEST(EnsembleIo, UniformWhenProbabilitiesAbsent) {
    const Ensemble e = parse_ensemble(R"({"dims":[2,2],"states":[
        {"amplitudes":[[1,0],[0,0],[0,0],[0,0]]},
        {"amplitudes":[[0,0],[1,0],[0,0],[0,0]]}]})");
    EXPECT_EQ(e[0].probability, 0.5);
}

TEST(EnsembleIo, Rejections) {
    EXPECT_NLE_ERROR(parse_ensemble("{not json"), "parse-error");
    EXPECT_NLE_ERROR(parse_ensemble(R"({"dims":[2,2],"states":[{"amplitudes":[[1,0],[1,0],[0,0],[0,0]]}]})"),
                     "parse-error");
    EXPECT_NLE_ERROR(parse_ensemble(R"({"dims":[2,2],"states":[{"amplitudes":[[1,0],[0,0],[0,0]]}]})"), "parse-error");
    EXPECT_NLE_ERROR(parse_ensemble(R"({"dims":[2,2],"states":[
        {"probability":0.5,"amplitudes":[[1,0],[0,0],[0,0],[0,0]]},
        {"amplitudes":[[0,0],[1,0],[0,0],[0,0]]}]})"),
                     "parse-error");
    EXPECT_NLE_ERROR(parse_ensemble(R"({"dims":[2,2],"states":[
        {"probability":0.5,"amplitudes":[[1,0],[0,0],[0,0],[0,0]]},
        {"probability":0.4,"amplitudes":[[0,0],[1,0],[0,0],[0,0]]}]})"),
                     "parse-error");
    EXPECT_NLE_ERROR(load_ensemble("/nonexistent/file.ens"), "parse-error");
}

TEST(EnsembleIo, ToleratesTinyNormError) {
    const Ensemble e = parse_ensemble(R"({"dims":[1,2],"states":[{"amplitudes":[[1.000000001,0],[0,0]]}]})");
    EXPECT_NEAR(norm2(e[0].state.vector()), 1.0, 1e-15);
}
