// Derivative-free maximization on unitary-group charts.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "nle/gates.hpp"
#include "nle/numkit.hpp"

namespace nle {

struct SearchOptions {
    std::size_t restarts = 8;
    std::uint64_t seed = 0;
    std::size_t max_evals = 4000;  // per restart
    double initial_step = 0.5;
    double min_step = 1e-9;
};

struct SearchResult {
    double value = -std::numeric_limits<double>::infinity();
    std::vector<double> x;
    std::size_t evaluations = 0;
};

/// Hill climbing that alternates coordinate and random-direction probes with an
/// adaptive step. Restart r begins at starts[r] when given, else at a uniform
/// draw from [-pi, pi]^n. The best value never decreases; output depends only on
/// the arguments.
inline SearchResult maximize(const std::function<double(std::span<const double>)>& objective, std::size_t n,
                             const SearchOptions& opt, std::span<const std::vector<double>> starts = {}) {
    SearchResult best;
    const std::size_t restarts = std::max(opt.restarts, starts.size());
    for (std::size_t r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ULL + r + 1);
        std::uniform_real_distribution<double> uni(-std::numbers::pi, std::numbers::pi);
        std::normal_distribution<double> gauss(0.0, 1.0);

        std::vector<double> x(n, 0.0);
        if (r < starts.size()) {
            if (starts[r].size() != n) throw Error("bad-params", "start point has wrong dimension");
            x = starts[r];
        } else {
            for (double& v : x) v = uni(rng);
        }
        double fx = objective(x);
        std::size_t evals = 1;
        if (n > 0) {
            double step = opt.initial_step;
            std::size_t fails = 0;
            std::vector<double> dir(n);
            std::vector<double> trial(n);
            for (std::size_t t = 0; evals < opt.max_evals && step > opt.min_step; ++t) {
                if (t % 2 == 0) {
                    std::fill(dir.begin(), dir.end(), 0.0);
                    dir[(t / 2) % n] = 1.0;
                } else {
                    double nn = 0.0;
                    for (double& v : dir) {
                        v = gauss(rng);
                        nn += v * v;
                    }
                    nn = std::sqrt(nn);
                    for (double& v : dir) v /= nn;
                }
                bool improved = false;
                for (double sign : {1.0, -1.0}) {
                    for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + sign * step * dir[i];
                    const double ft = objective(trial);
                    ++evals;
                    if (ft > fx) {
                        x = trial;
                        fx = ft;
                        improved = true;
                        break;
                    }
                }
                if (improved) {
                    step *= 1.5;
                    fails = 0;
                } else if (++fails >= 2 * n) {
                    step *= 0.5;
                    fails = 0;
                }
            }
        }
        best.evaluations += evals;
        if (fx > best.value) {
            best.value = fx;
            best.x = x;
        }
    }
    return best;
}

struct UnitarySearchResult {
    double value = 0.0;
    UnitaryParam param;
};

/// Maximizes objective(U) over U(dim); restart 0 starts at the identity.
inline UnitarySearchResult optimize_unitary(const std::function<double(const Matrix&)>& objective, std::size_t dim,
                                            std::size_t restarts, std::uint64_t seed) {
    SearchOptions opt;
    opt.restarts = std::max<std::size_t>(1, restarts);
    opt.seed = seed;
    const std::vector<std::vector<double>> starts{std::vector<double>(dim * dim, 0.0)};
    const SearchResult r = maximize(
        [&](std::span<const double> x) {
            return objective(param_to_unitary(UnitaryParam{dim, std::vector<double>(x.begin(), x.end())}));
        },
        dim * dim, opt, starts);
    return {r.value, UnitaryParam{dim, r.x}};
}

}  // namespace nle
