// Golden-value regression: every reference number and property the library must
// reproduce, grouped into numbered criteria. Shared by the acceptance test and
// the `reproduce` CLI command.

#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "nle/catalog.hpp"
#include "nle/dissect.hpp"
#include "nle/gates.hpp"
#include "nle/infobounds.hpp"
#include "nle/numkit.hpp"
#include "nle/qstate.hpp"
#include "nle/quantify.hpp"
#include "nle/sampling.hpp"

namespace nle::reproduce {

struct Check {
    std::string label;
    std::string expected;  // human-readable target with tolerance
    double got = 0.0;
    bool pass = false;
};

struct Criterion {
    int id = 0;
    std::string title;
    std::vector<Check> checks;

    bool pass() const {
        for (const Check& c : checks) {
            if (!c.pass) return false;
        }
        return !checks.empty();
    }
};

inline std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

inline std::string sci(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.0e", x);
    return buf;
}

inline Check approx(std::string label, double got, double expected, double tol) {
    return {std::move(label), fmt(expected) + " +- " + sci(tol), got, std::abs(got - expected) <= tol};
}
inline Check at_least(std::string label, double got, double bound) {
    return {std::move(label), ">= " + fmt(bound), got, got >= bound};
}
inline Check above(std::string label, double got, double bound) {
    return {std::move(label), "> " + sci(bound), got, got > bound};
}
inline Check below(std::string label, double got, double bound) {
    return {std::move(label), "< " + fmt(bound), got, got < bound};
}
inline Check between(std::string label, double got, double lo, double hi) {
    return {std::move(label), "in (" + fmt(lo) + ", " + fmt(hi) + ")", got, got > lo && got < hi};
}
inline Check flag(std::string label, bool ok, std::string expected, double got = 0.0) {
    return {std::move(label), std::move(expected), got, ok};
}

inline Mode fixed_mode() { return Mode{}; }
inline Mode assign_mode() {
    Mode m;
    m.kind = ModeKind::assign;
    return m;
}

inline ProductSet product_set(const std::string& name, const catalog::Params& p = {}) {
    return ProductSet::from_ensemble(catalog::build(name, p));
}

// ---------------------------------------------------------------------------

inline Criterion c01() {
    const QuantifierReport r = delta_s(catalog::build("e1-computational"), fixed_mode());
    return {1, "computational basis has zero nonlocal entropy", {approx("E1 fixed delta_sym", r.symmetric, 0.0, 1e-12)}};
}

inline Criterion c02() {
    const QuantifierReport r = delta_s(catalog::build("e2-case2"), fixed_mode());
    return {2,
            "E2 nonlocal entropy is one-sided",
            {approx("E2 fixed delta_right", r.right.value, 0.0, 1e-9),
             approx("E2 fixed delta_left", r.left.value, 0.5, 1e-9),
             approx("E2 fixed delta_sym", r.symmetric, 0.25, 1e-9)}};
}

inline Criterion c03() {
    const QuantifierReport r = delta_s(catalog::build("case-3x2"), fixed_mode());
    return {3, "3x2 basis with A as control", {approx("3x2 fixed delta_right", r.right.value, 1.0 / 3.0, 1e-9)}};
}

inline Criterion c04() {
    const QuantifierReport r = delta_s(catalog::build("nlwe-3x3"), fixed_mode());
    return {4,
            "nine-state basis",
            {approx("NLWE fixed delta_right", r.right.value, 4.0 / 9.0, 1e-9),
             approx("NLWE fixed delta_left", r.left.value, 4.0 / 9.0, 1e-9)}};
}

inline Criterion c05() {
    const Ensemble upb = catalog::build("tiles-upb");
    const QuantifierReport f = delta_s(upb, fixed_mode());
    Mode ps;
    ps.kind = ModeKind::per_state_lu;
    ps.rotate = Rotation::target;
    ps.restarts = 16;
    ps.seed = 11;
    const QuantifierReport p = delta_s(upb, ps);
    const double target = (2.0 + std::log2(3.0)) / 5.0;
    return {5,
            "unextendible product basis",
            {approx("UPB fixed delta_right", f.right.value, 0.4, 1e-9),
             approx("UPB fixed delta_left", f.left.value, 0.4, 1e-9),
             approx("UPB fixed delta_sym", f.symmetric, 0.4, 1e-9),
             at_least("UPB per-state-lu delta_right", p.right.value, target - 1e-3),
             at_least("UPB per-state-lu delta_left", p.left.value, target - 1e-3)}};
}

inline Criterion c06() {
    const Ensemble e = catalog::build("bell-pair");
    return {6,
            "two Bell states",
            {approx("bell-pair fixed Delta_right", big_delta(e, fixed_mode()).right.value, 1.0, 1e-9),
             approx("bell-pair assign Delta_right", big_delta(e, assign_mode()).right.value, 1.0, 1e-9)}};
}

inline Criterion c07() {
    const double h = -(1.0 / 3.0) * std::log2(1.0 / 3.0) - (2.0 / 3.0) * std::log2(2.0 / 3.0);
    const double got = big_delta(catalog::build("bell-triple"), assign_mode()).right.value;
    return {7, "three Bell states", {approx("bell-triple assign Delta_right", got, 1.0 - h, 5e-4),
                                     approx("bell-triple assign Delta_right vs 0.0817", got, 0.0817, 5e-4)}};
}

inline Criterion c08() {
    const Ensemble e = catalog::build("bell-full");
    return {8,
            "full Bell basis",
            {approx("bell-full assign Delta_right", big_delta(e, assign_mode()).right.value, 0.0, 1e-9),
             approx("bell-full fixed Delta_right", big_delta(e, fixed_mode()).right.value, 0.0, 1e-9)}};
}

inline Criterion c09() {
    catalog::Params p;
    p.values = {{"a1", 0.8}, {"a2", 0.75}};
    const QuantifierReport r = big_delta(catalog::build("orth-pair", p), fixed_mode());
    return {9,
            "two orthogonal entangled states, a1 = 4/5, a2 = 3/4",
            {approx("orth-pair fixed Delta_right", r.right.value, 0.0007, 2e-4),
             approx("orth-pair fixed Delta_left", r.left.value, 0.0, 1e-6)}};
}

inline double nonmax_three_state_formula(double b) {
    const double b2 = b * b;
    return (2.0 - (2.0 - b2) * std::log2(2.0 - b2) - (1.0 + b2) * std::log2(1.0 + b2)) / 3.0;
}

inline Criterion c10() {
    Criterion c{10, "non-maximally entangled two-qubit basis", {}};
    for (double b : {0.1, 0.3, 0.5, 0.7}) {
        catalog::Params p;
        p.values = {{"a", std::sqrt(1.0 - b * b)}, {"b", b}, {"count", 3}};
        const Ensemble e = catalog::build("ghosh-nonmax", p);
        const double want = nonmax_three_state_formula(b);
        c.checks.push_back(approx("first three, b=" + fmt(b) + ", fixed", big_delta(e, fixed_mode()).right.value, want, 1e-9));
        c.checks.push_back(approx("first three, b=" + fmt(b) + ", assign", big_delta(e, assign_mode()).right.value, want, 1e-9));
    }
    catalog::Params p;
    p.values = {{"a", 0.8}, {"b", 0.6}};
    const Ensemble full = catalog::build("ghosh-nonmax", p);
    c.checks.push_back(approx("all four, fixed", big_delta(full, fixed_mode()).right.value, 0.0, 1e-9));
    c.checks.push_back(approx("all four, assign", big_delta(full, assign_mode()).right.value, 0.0, 1e-9));
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            const std::vector<std::size_t> pick{i, j};
            const double got = big_delta(full.subset(pick), assign_mode()).right.value;
            c.checks.push_back(approx("pair {" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}, assign", got, 1.0, 1e-9));
        }
    }
    return c;
}

inline Criterion c11() {
    const double mes = big_delta(catalog::build("more-nl-mes"), assign_mode()).right.value;
    const double mixed = big_delta(catalog::build("more-nl-mixed"), assign_mode()).right.value;
    return {11,
            "more nonlocality with less entanglement",
            {approx("more-nl-mes assign Delta_right", mes, std::log2(3.0), 1e-9),
             approx("more-nl-mixed assign Delta_right", mixed, 1.43552, 1e-4),
             below("more-nl-mixed below log2 3", mixed, std::log2(3.0))}};
}

inline Criterion c12() {
    Criterion c{12, "canonical maximally entangled blocks", {}};
    for (std::size_t d : {2u, 3u}) {
        const std::string tag = "d=" + std::to_string(d) + " ";
        catalog::Params p;
        p.values = {{"d", static_cast<double>(d)}};
        const Ensemble full = catalog::build("canonical-mes", p);
        std::vector<std::size_t> block(d);
        for (std::size_t l = 0; l < d; ++l) block[l] = l;
        std::vector<std::size_t> plus_one = block;
        plus_one.push_back(d);  // first member of the next block
        const double logd = std::log2(static_cast<double>(d));
        c.checks.push_back(approx(tag + "one block, fixed Delta_sym", big_delta(full.subset(block), fixed_mode()).symmetric, logd, 1e-9));
        c.checks.push_back(approx(tag + "all d^2, fixed Delta_sym", big_delta(full, fixed_mode()).symmetric, 0.0, 1e-9));
        c.checks.push_back(between(tag + "d+1 states, fixed Delta_sym", big_delta(full.subset(plus_one), fixed_mode()).symmetric, 0.0, logd));
    }
    return c;
}

inline Criterion c13() {
    auto label = [](const std::string& n) { return classify(product_set(n)).label(); };
    auto same = [&](const std::string& n, const std::string& want) {
        const std::string got = label(n);
        return flag(n + " -> " + got, got == want, want);
    };
    const DissectionTree from_a = dissect(product_set("case-3x2"), Party::A);
    bool blocked = false;
    for_each_leaf(from_a, [&](const DissectionTree& l) {
        blocked = blocked || (l.status == LeafStatus::blocked && l.members.size() == 4);
    });
    return {13,
            "dissection classes",
            {same("e1-computational", "dissectible-either-side"), same("e2-case2", "dissectible-one-side(A)"),
             same("case-3x2", "dissectible-one-side(B)"),
             flag("case-3x2 A-start leaves a 4-member leaf", blocked, "blocked leaf of 4"),
             same("nlwe-3x3", "non-dissectible"), same("tiles-upb", "non-dissectible")}};
}

// Real qubit state cos t|0> + sin t|1>; a third of the draws are exact basis states.
inline std::pair<double, double> draw_qubit(sampling::Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double pick = u(rng);
    if (pick < 1.0 / 6.0) return {1.0, 0.0};
    if (pick < 1.0 / 3.0) return {0.0, 1.0};
    const double t = 2.0 * std::numbers::pi * u(rng);
    return {std::cos(t), std::sin(t)};
}

inline Criterion c14() {
    sampling::Rng rng(1414);
    std::size_t agree = 0;
    std::size_t right_zero = 0;
    std::size_t reducible_count = 0;
    const std::size_t draws = 200;
    for (std::size_t k = 0; k < draws; ++k) {
        const auto [a1, b1] = draw_qubit(rng);
        const auto [a2, b2] = draw_qubit(rng);
        catalog::Params p;
        p.values = {{"a1", a1}, {"b1", b1}, {"a2", a2}, {"b2", b2}};
        const Ensemble e = catalog::build("walgate-hardy", p);
        const QuantifierReport r = delta_s(e, fixed_mode());
        const bool reducible = reducible_from(ProductSet::from_ensemble(e), Party::B).has_value();
        reducible_count += reducible ? 1 : 0;
        agree += ((r.left.value > 1e-9) == !reducible) ? 1 : 0;
        right_zero += std::abs(r.right.value) <= 1e-9 ? 1 : 0;
    }
    return {14,
            "two-qubit bases: entangling iff irreducible from the control side",
            {flag("delta_left > 1e-9 iff irreducible from B", agree == draws, "200 of 200", static_cast<double>(agree)),
             flag("delta_right = 0", right_zero == draws, "200 of 200", static_cast<double>(right_zero)),
             flag("draws include reducible bases", reducible_count > 0, "> 0", static_cast<double>(reducible_count))}};
}

inline Criterion c15() {
    Criterion c{15, "non-dissectible sets have positive nonlocal entropy", {}};
    for (const catalog::EntryInfo& info : catalog::list()) {
        if (!info.product) continue;
        const Ensemble e = catalog::build(info.name);
        const ProductSet s = ProductSet::from_ensemble(e);
        if (classify(s).kind != Dissectibility::non_dissectible) continue;
        c.checks.push_back(above(info.name + " fixed delta_sym", delta_s(e, fixed_mode()).symmetric, 1e-9));
        c.checks.push_back(above(info.name + " weighted", weighted_nonlocal_entropy(s), 1e-9));
    }
    return c;
}

inline Criterion c16() {
    Criterion c{16, "CNOT outputs of E2 violate CHSH maximally when entangled", {}};
    const Ensemble e = catalog::build("e2-case2");
    for (Party control : {Party::A, Party::B}) {
        const Matrix u = cnot(e.dims(), control, 1);
        for (std::size_t i = 0; i < e.size(); ++i) {
            const PureState out = apply(u, e[i].state);
            const double v = chsh_max(out);
            const std::string tag = std::string("control ") + party_name(control) + ", member " + std::to_string(i + 1);
            if (entanglement_entropy(out) > kTol.entangled) {
                c.checks.push_back(approx(tag + " (entangled)", v, 2.0 * std::numbers::sqrt2, 1e-9));
            } else {
                c.checks.push_back(flag(tag + " (product)", v == 2.0, "exactly 2", v));
            }
        }
    }
    return c;
}

inline Criterion c17() {
    const Ensemble bell = catalog::build("bell-full");
    return {17,
            "Holevo and local Holevo values",
            {approx("bell-full chi", holevo_chi(bell), 2.0, 1e-9),
             approx("bell-full local_holevo", local_holevo(bell), 1.0, 1e-9),
             approx("nlwe-3x3 local_holevo", local_holevo(catalog::build("nlwe-3x3")), 2.0 * std::log2(3.0), 1e-9)}};
}

inline Criterion c18(std::size_t cases = 1000) {
    sampling::Rng rng(1818);
    const std::vector<Dims> shapes{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}};
    double schmidt_dev = 0.0;
    double lu_dev = 0.0;
    double gram_dev = 0.0;
    double eig_dev = 0.0;
    bool cnot_ok = true;
    for (std::size_t k = 0; k < cases; ++k) {
        const Dims d = shapes[k % shapes.size()];
        const PureState s = sampling::random_state(rng, d);
        const Matrix rho = s.projector();
        schmidt_dev = std::max(schmidt_dev, std::abs(vn_entropy(partial_trace(rho, d, Party::A)) -
                                                     vn_entropy(partial_trace(rho, d, Party::B))));

        const Matrix local = tensor(sampling::random_unitary(rng, d.a), sampling::random_unitary(rng, d.b));
        lu_dev = std::max(lu_dev, std::abs(entanglement_entropy(s) - entanglement_entropy(apply(local, s))));

        const Matrix u = sampling::random_unitary(rng, d.total());
        const std::vector<Vector> before{s.vector(), sampling::random_vector(rng, d.total()),
                                         sampling::random_vector(rng, d.total())};
        std::vector<Vector> after;
        for (const Vector& v : before) after.push_back(u * v);
        gram_dev = std::max(gram_dev, (gram(before) - gram(after)).max_abs());

        for (Party control : {Party::A, Party::B}) {
            const std::size_t period = d.of(other(control));
            const Matrix c1 = cnot(d, control, 1);
            for (std::size_t r = 0; r < d.total(); ++r) {
                std::size_t ones = 0;
                for (std::size_t q = 0; q < d.total(); ++q) {
                    const cplx z = c1(r, q);
                    if (z == cplx{1.0, 0.0}) ++ones;
                    else if (z != cplx{0.0, 0.0}) cnot_ok = false;
                }
                if (ones != 1) cnot_ok = false;
            }
            Matrix power = Matrix::identity(d.total());
            for (std::size_t r = 0; r < period; ++r) power = c1 * power;
            if ((power - Matrix::identity(d.total())).max_abs() != 0.0) cnot_ok = false;
            if ((cnot(d, control, period) - Matrix::identity(d.total())).max_abs() != 0.0) cnot_ok = false;
        }

        const Matrix h = sampling::random_hermitian(rng, 1 + k % 9);
        const Eigensystem es = eigh(h);
        const Matrix rec = es.vectors * Matrix::diagonal(es.values) * es.vectors.adjoint();
        eig_dev = std::max(eig_dev, (rec - h).max_abs());
    }
    return {18,
            "randomized property suites (" + std::to_string(cases) + " cases each)",
            {approx("Schmidt symmetry max |S_A - S_B|", schmidt_dev, 0.0, 1e-9),
             approx("local-unitary invariance max |dE|", lu_dev, 0.0, 1e-9),
             approx("Gram preservation max dev", gram_dev, 0.0, 1e-10),
             flag("CNOT permutation and period laws", cnot_ok, "all hold"),
             approx("eigh reconstruction max dev", eig_dev, 0.0, 1e-9)}};
}

inline std::vector<std::function<Criterion()>> criteria() {
    return {c01, c02, c03, c04, c05, c06, c07, c08, c09, c10, c11, c12, c13, c14, c15, c16, c17,
            [] { return c18(); }};
}

inline std::vector<Criterion> run_all() {
    std::vector<Criterion> out;
    for (const auto& f : criteria()) out.push_back(f());
    return out;
}

}  // namespace nle::reproduce
