// Named ensembles with stable identifiers.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "nle/numkit.hpp"
#include "nle/qstate.hpp"

namespace nle::catalog {

struct Params {
    std::map<std::string, double> values;
    std::vector<std::size_t> indices;  // optional member selection, 0-based

    double get(const std::string& key, double fallback) const {
        const auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
    bool has(const std::string& key) const { return values.count(key) != 0; }
};

struct EntryInfo {
    std::string name;
    std::string description;
    std::vector<std::string> parameters;  // accepted keys besides "count"
    Dims default_dims;
    std::size_t default_members = 0;
    bool product = false;
};

namespace detail {

inline Vector ket(std::initializer_list<cplx> amps) { return normalized(Vector(amps)); }
inline Vector e(std::size_t d, std::size_t k) { return basis_vector(d, k); }

inline PureState prod(const Vector& a, const Vector& b) { return PureState::product(a, b); }

inline PureState bell(int which) {
    const double h = std::numbers::sqrt2 / 2.0;
    switch (which) {
        case 0: return PureState(Dims{2, 2}, {h, 0.0, 0.0, h});    // phi+
        case 1: return PureState(Dims{2, 2}, {h, 0.0, 0.0, -h});   // phi-
        case 2: return PureState(Dims{2, 2}, {0.0, h, h, 0.0});    // psi+
        default: return PureState(Dims{2, 2}, {0.0, h, -h, 0.0});  // psi-
    }
}

// Real qubit pair (a, b) with a^2 + b^2 = 1; a missing b defaults to sqrt(1 - a^2).
inline std::pair<double, double> qubit_coeffs(const Params& p, const std::string& ka, const std::string& kb, double da,
                                              double db) {
    const double a = p.get(ka, da);
    double b = db;
    if (p.has(kb)) {
        b = p.get(kb, db);
    } else if (p.has(ka)) {
        if (a * a > 1.0 + 1e-12) throw Error("bad-params", ka + " exceeds 1 in magnitude");
        b = std::sqrt(std::max(0.0, 1.0 - a * a));
    }
    if (!std::isfinite(a) || !std::isfinite(b) || std::abs(a * a + b * b - 1.0) > 1e-9) {
        throw Error("bad-params", ka + "^2 + " + kb + "^2 must equal 1");
    }
    return {a, b};
}

inline Vector eta(double a, double b) { return Vector{a, b}; }
inline Vector eta_perp(double a, double b) { return Vector{-b, a}; }  // real coefficients: -conj(b)|0> + conj(a)|1>

inline Ensemble e1_computational(const Params&) {
    const Dims d{2, 2};
    return Ensemble::uniform(d, {PureState::basis(d, 0, 0), PureState::basis(d, 0, 1), PureState::basis(d, 1, 0),
                                 PureState::basis(d, 1, 1)});
}

inline Ensemble e2_case2(const Params&) {
    const Vector plus = ket({1.0, 1.0});
    const Vector minus = ket({1.0, -1.0});
    return Ensemble::uniform(Dims{2, 2}, {prod(e(2, 0), plus), prod(e(2, 0), minus), prod(e(2, 1), e(2, 0)),
                                          prod(e(2, 1), e(2, 1))});
}

inline Ensemble walgate_hardy(const Params& p) {
    const double h = std::numbers::sqrt2 / 2.0;
    const auto [a1, b1] = qubit_coeffs(p, "a1", "b1", h, h);
    const auto [a2, b2] = qubit_coeffs(p, "a2", "b2", 1.0, 0.0);
    return Ensemble::uniform(Dims{2, 2}, {prod(e(2, 0), eta(a1, b1)), prod(e(2, 1), eta(a2, b2)),
                                          prod(e(2, 0), eta_perp(a1, b1)), prod(e(2, 1), eta_perp(a2, b2))});
}

inline Ensemble case_3x2(const Params&) {
    const Vector p12 = ket({0.0, 1.0, 1.0});
    const Vector m12 = ket({0.0, 1.0, -1.0});
    return Ensemble::uniform(Dims{3, 2}, {prod(p12, e(2, 0)), prod(m12, e(2, 0)), prod(e(3, 1), e(2, 1)),
                                          prod(e(3, 2), e(2, 1)), prod(e(3, 0), e(2, 0)), prod(e(3, 0), e(2, 1))});
}

inline Ensemble nlwe_3x3(const Params&) {
    auto s = [](std::size_t i, std::size_t j, double sign) {
        Vector v(3, cplx{0.0, 0.0});
        v[i] = 1.0;
        v[j] = sign;
        return normalized(v);
    };
    return Ensemble::uniform(Dims{3, 3}, {
        prod(e(3, 1), e(3, 1)),
        prod(e(3, 0), s(0, 1, 1.0)),
        prod(e(3, 0), s(0, 1, -1.0)),
        prod(e(3, 2), s(1, 2, 1.0)),
        prod(e(3, 2), s(1, 2, -1.0)),
        prod(s(1, 2, 1.0), e(3, 0)),
        prod(s(1, 2, -1.0), e(3, 0)),
        prod(s(0, 1, 1.0), e(3, 2)),
        prod(s(0, 1, -1.0), e(3, 2)),
    });
}

inline Ensemble tiles_upb(const Params&) {
    const Vector m01 = ket({1.0, -1.0, 0.0});
    const Vector m12 = ket({0.0, 1.0, -1.0});
    const Vector u = ket({1.0, 1.0, 1.0});
    return Ensemble::uniform(Dims{3, 3}, {prod(e(3, 0), m01), prod(e(3, 2), m12), prod(m01, e(3, 2)),
                                          prod(m12, e(3, 0)), prod(u, u)});
}

inline Ensemble bell_pair(const Params&) { return Ensemble::uniform(Dims{2, 2}, {bell(0), bell(1)}); }
inline Ensemble bell_triple(const Params&) { return Ensemble::uniform(Dims{2, 2}, {bell(0), bell(1), bell(3)}); }
inline Ensemble bell_full(const Params&) {
    return Ensemble::uniform(Dims{2, 2}, {bell(0), bell(1), bell(2), bell(3)});
}

inline Ensemble orth_pair(const Params& p) {
    const auto [a1, b1] = qubit_coeffs(p, "a1", "b1", 0.8, 0.6);
    const auto [a2, b2] = qubit_coeffs(p, "a2", "b2", 0.75, std::sqrt(7.0) / 4.0);
    const Dims d{2, 2};
    auto entangled = [&](const Vector& x, const Vector& y) {
        Vector v = kron(e(2, 0), x);
        const Vector w = kron(e(2, 1), y);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
        return PureState::normalize(d, v);
    };
    return Ensemble::uniform(d, {entangled(eta(a1, b1), eta(a2, b2)), entangled(eta_perp(a1, b1), eta_perp(a2, b2))});
}

inline Ensemble ghosh_nonmax(const Params& p) {
    const auto [a, b] = qubit_coeffs(p, "a", "b", 0.8, 0.6);
    const Dims d{2, 2};
    return Ensemble::uniform(d, {PureState(d, {a, 0.0, 0.0, b}), PureState(d, {-b, 0.0, 0.0, a}),
                                 PureState(d, {0.0, a, b, 0.0}), PureState(d, {0.0, -b, a, 0.0})});
}

inline cplx omega3(int k) { return std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0); }

inline PureState mes_3x3(cplx c00, cplx c11, cplx c22) {
    const Dims d{3, 3};
    Vector v(9, cplx{0.0, 0.0});
    v[0] = c00;
    v[4] = c11;
    v[8] = c22;
    return PureState::normalize(d, v);
}

inline Ensemble more_nl_mes(const Params&) {
    const Dims d{3, 3};
    Vector third(9, cplx{0.0, 0.0});
    third[0 * 3 + 1] = 1.0;
    third[1 * 3 + 2] = 1.0;
    third[2 * 3 + 0] = 1.0;
    return Ensemble::uniform(d, {mes_3x3(1.0, omega3(1), omega3(2)), mes_3x3(1.0, omega3(2), omega3(1)),
                                 PureState::normalize(d, third)});
}

inline Ensemble more_nl_mixed(const Params&) {
    const Dims d{3, 3};
    return Ensemble::uniform(d, {mes_3x3(1.0, omega3(1), omega3(2)), mes_3x3(1.0, omega3(2), omega3(1)),
                                 PureState::basis(d, 0, 1)});
}

/// Member n is Psi_{l,m} with m = n / d and l = n % d:
/// (1/sqrt d) sum_k exp(2 pi i l k / d) |k>|k + m mod d>.
inline PureState canonical_mes_state(std::size_t dim, std::size_t l, std::size_t m) {
    const Dims d{dim, dim};
    Vector v(dim * dim, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < dim; ++k) {
        v[k * dim + (k + m) % dim] =
            std::polar(1.0 / std::sqrt(static_cast<double>(dim)),
                       2.0 * std::numbers::pi * static_cast<double>(l * k) / static_cast<double>(dim));
    }
    return PureState::normalize(d, v);
}

inline Ensemble canonical_mes(const Params& p) {
    const double dd = p.get("d", 3.0);
    if (!(dd >= 2.0) || dd > 8.0 || dd != std::floor(dd)) throw Error("bad-params", "d must be an integer in [2, 8]");
    const auto dim = static_cast<std::size_t>(dd);
    std::vector<PureState> states;
    for (std::size_t n = 0; n < dim * dim; ++n) states.push_back(canonical_mes_state(dim, n % dim, n / dim));
    return Ensemble::uniform(Dims{dim, dim}, std::move(states));
}

struct Entry {
    EntryInfo info;
    std::function<Ensemble(const Params&)> build;
};

inline const std::vector<Entry>& table() {
    static const std::vector<Entry> entries = {
        {{"e1-computational", "two-qubit computational basis", {}, {2, 2}, 4, true}, e1_computational},
        {{"e2-case2", "{|0+>, |0->, |10>, |11>}; only A can open a local protocol", {}, {2, 2}, 4, true}, e2_case2},
        {{"walgate-hardy", "{|0 eta1>, |1 eta2>, |0 eta1_perp>, |1 eta2_perp>} with eta_i = a_i|0> + b_i|1>",
          {"a1", "b1", "a2", "b2"}, {2, 2}, 4, true},
         walgate_hardy},
        {{"case-3x2", "3x2 product basis {(|1>+-|2>)|0>, |11>, |21>, |00>, |01>}", {}, {3, 2}, 6, true}, case_3x2},
        {{"nlwe-3x3", "nine-state 3x3 product basis that is not locally distinguishable", {}, {3, 3}, 9, true},
         nlwe_3x3},
        {{"tiles-upb", "five-state unextendible product basis on two qutrits", {}, {3, 3}, 5, true}, tiles_upb},
        {{"bell-pair", "{phi+, phi-}", {}, {2, 2}, 2, false}, bell_pair},
        {{"bell-triple", "{phi+, phi-, psi-}", {}, {2, 2}, 3, false}, bell_triple},
        {{"bell-full", "{phi+, phi-, psi+, psi-}", {}, {2, 2}, 4, false}, bell_full},
        {{"orth-pair", "two orthogonal entangled states |0 eta1> + |1 eta2>, |0 eta1_perp> + |1 eta2_perp>",
          {"a1", "b1", "a2", "b2"}, {2, 2}, 2, false},
         orth_pair},
        {{"ghosh-nonmax", "{a|00>+b|11>, -b|00>+a|11>, a|01>+b|10>, -b|01>+a|10>}", {"a", "b"}, {2, 2}, 4, false},
         ghosh_nonmax},
        {{"more-nl-mes", "three maximally entangled two-qutrit states", {}, {3, 3}, 3, false}, more_nl_mes},
        {{"more-nl-mixed", "two of the maximally entangled qutrit states plus |01>", {}, {3, 3}, 3, false},
         more_nl_mixed},
        {{"canonical-mes", "canonical maximally entangled basis Psi_{l,m}; member n has m = n / d, l = n % d",
          {"d"}, {3, 3}, 9, false},
         canonical_mes},
    };
    return entries;
}

}  // namespace detail

inline std::vector<EntryInfo> list() {
    std::vector<EntryInfo> out;
    for (const detail::Entry& e : detail::table()) out.push_back(e.info);
    return out;
}

/// Builds a named ensemble. "count" keeps the leading members; `indices` selects members.
inline Ensemble build(const std::string& name, const Params& params = {}) {
    for (const detail::Entry& entry : detail::table()) {
        if (entry.info.name != name) continue;
        std::set<std::string> allowed(entry.info.parameters.begin(), entry.info.parameters.end());
        allowed.insert("count");
        for (const auto& [key, value] : params.values) {
            if (!allowed.count(key)) throw Error("bad-params", "entry '" + name + "' has no parameter '" + key + "'");
            if (!std::isfinite(value)) throw Error("bad-params", "parameter '" + key + "' is not finite");
        }
        Ensemble e = entry.build(params);
        if (params.has("count")) {
            const double c = params.get("count", 0.0);
            if (!(c >= 1.0) || c != std::floor(c) || c > static_cast<double>(e.size())) {
                throw Error("bad-params", "count must be an integer in [1, members]");
            }
            std::vector<std::size_t> lead(static_cast<std::size_t>(c));
            for (std::size_t i = 0; i < lead.size(); ++i) lead[i] = i;
            e = e.subset(lead);
        }
        if (!params.indices.empty()) e = e.subset(params.indices);
        return e;
    }
    throw Error("no-such-entry", "unknown ensemble '" + name + "'");
}

}  // namespace nle::catalog
