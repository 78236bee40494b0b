// Shared helpers for the unit tests.

#pragma once

#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "nle/nle.hpp"

// Asserts that `stmt` throws nle::Error carrying `code`.
#define EXPECT_NLE_ERROR(stmt, expected_code)                                  \
    do {                                                                       \
        try {                                                                  \
            stmt;                                                              \
            ADD_FAILURE() << "expected error " << (expected_code);             \
        } catch (const nle::Error& ex_) {                                      \
            EXPECT_EQ(ex_.code(), std::string(expected_code)) << ex_.what();   \
        }                                                                      \
    } while (0)

namespace testing_support {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline nle::Vector ket(std::initializer_list<nle::cplx> z) { return nle::Vector(z); }

inline nle::PureState phi_plus() {
    return nle::PureState(nle::Dims{2, 2}, {kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}

inline double h2(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace testing_support
