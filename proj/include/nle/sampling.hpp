// Seeded random states, unitaries and Hermitian matrices for property checks.

#pragma once

#include <cstddef>
#include <numbers>
#include <random>

#include "nle/gates.hpp"
#include "nle/numkit.hpp"
#include "nle/qstate.hpp"

namespace nle::sampling {

using Rng = std::mt19937_64;

inline Vector random_vector(Rng& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector v(n);
    for (cplx& z : v) z = {g(rng), g(rng)};
    return normalized(std::move(v));
}

inline PureState random_state(Rng& rng, Dims d) { return PureState(d, random_vector(rng, d.total())); }

inline PureState random_product(Rng& rng, Dims d) {
    return PureState::product(random_vector(rng, d.a), random_vector(rng, d.b));
}

inline Matrix random_hermitian(Rng& rng, std::size_t n, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    Matrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = g(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            h(i, j) = cplx{g(rng), g(rng)};
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

inline Matrix random_unitary(Rng& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    UnitaryParam p = UnitaryParam::zero(n);
    for (double& c : p.coeffs) c = u(rng);
    return param_to_unitary(p);
}

inline Matrix random_density(Rng& rng, std::size_t n, std::size_t rank) {
    Matrix rho(n, n);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    double total = 0.0;
    std::vector<double> w(rank);
    for (double& x : w) total += (x = u(rng));
    for (std::size_t k = 0; k < rank; ++k) rho += Matrix::projector(random_vector(rng, n)) * cplx{w[k] / total, 0.0};
    return rho;
}

}  // namespace nle::sampling
