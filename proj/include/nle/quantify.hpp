// Nonlocal entropy of product ensembles and the average-state local-entropy gap.
//
// Both quantifiers maximize over a family of global transforms. The family is
// an explicit Mode so every reported value says which search produced it:
//
//   fixed         CNOT^r with r in 1..d_target-1
//   ensemble-lu   depth layers of (U_A (x) U_B, then CNOT^r), one parameter set shared by all members
//   per-state-lu  the same layers, parameters chosen per member (an upper-bound flavour)
//   assign        orthonormal product relabelling of an orthogonal ensemble (gap quantifier only)

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nle/gates.hpp"
#include "nle/numkit.hpp"
#include "nle/optimize.hpp"
#include "nle/qstate.hpp"

namespace nle {

enum class ModeKind { fixed, ensemble_lu, per_state_lu, assign };

/// Which local unitaries precede each CNOT in the lu modes.
enum class Rotation { both, target };

struct Mode {
    ModeKind kind = ModeKind::fixed;
    std::size_t depth = 1;
    std::size_t restarts = 8;
    std::uint64_t seed = 0;
    Rotation rotate = Rotation::both;
    std::size_t max_evals = 4000;

    void validate() const {
        if (depth < 1) throw Error("bad-mode", "depth must be at least 1");
        if (restarts < 1) throw Error("bad-mode", "restarts must be at least 1");
    }
};

inline std::string mode_name(ModeKind k) {
    switch (k) {
        case ModeKind::fixed: return "fixed";
        case ModeKind::ensemble_lu: return "ensemble-lu";
        case ModeKind::per_state_lu: return "per-state-lu";
        case ModeKind::assign: return "assign";
    }
    return "";
}

inline ModeKind parse_mode(const std::string& s) {
    if (s == "fixed") return ModeKind::fixed;
    if (s == "ensemble-lu") return ModeKind::ensemble_lu;
    if (s == "per-state-lu") return ModeKind::per_state_lu;
    if (s == "assign") return ModeKind::assign;
    throw Error("bad-mode", "unknown mode '" + s + "'");
}

struct WorkPair {
    double initial = 0.0;  // log2 d - S before the transform
    double final = 0.0;    // log2 d - S after
};

struct DirectionValue {
    Party control = Party::A;
    double value = 0.0;
    std::size_t repetitions = 0;  // 0 when the identity transform was best
    std::vector<double> params;   // lu modes: the shared chart coordinates

    // nonlocal entropy
    std::vector<double> contributions;
    std::vector<WorkPair> state_work;

    // average-state gap
    double gap_a = 0.0;
    double gap_b = 0.0;
    WorkPair work_a;
    WorkPair work_b;
    std::size_t entangled_after = 0;  // members still entangled after the transform
};

struct QuantifierReport {
    std::string quantity;  // "delta" or "big-delta"
    Mode mode;
    DirectionValue right;  // A controls
    DirectionValue left;   // B controls
    double symmetric = 0.0;

    const DirectionValue& direction(Party control) const { return control == Party::A ? right : left; }
};

/// Layered transform: depth x (local unitaries, then CNOT^r from `control`).
class LayeredTransform {
public:
    LayeredTransform(Dims dims, Party control, std::size_t repetitions, std::size_t depth, Rotation rotate)
        : dims_(dims), control_(control), reps_(repetitions), depth_(depth), rotate_(rotate),
          cnot_(cnot(dims, control, repetitions)) {}

    std::size_t params_per_layer() const {
        const std::size_t dt = dims_.of(other(control_));
        return rotate_ == Rotation::both ? dims_.a * dims_.a + dims_.b * dims_.b : dt * dt;
    }
    std::size_t param_count() const { return depth_ * params_per_layer(); }

    Matrix matrix(std::span<const double> x) const {
        if (x.size() != param_count()) throw Error("bad-params", "transform parameter count mismatch");
        Matrix t = Matrix::identity(dims_.total());
        std::size_t off = 0;
        for (std::size_t l = 0; l < depth_; ++l) {
            Matrix local = Matrix::identity(dims_.total());
            if (rotate_ == Rotation::both) {
                const Matrix ua = chart(x.subspan(off, dims_.a * dims_.a), dims_.a);
                off += dims_.a * dims_.a;
                const Matrix ub = chart(x.subspan(off, dims_.b * dims_.b), dims_.b);
                off += dims_.b * dims_.b;
                local = tensor(ua, ub);
            } else {
                const Party target = other(control_);
                const std::size_t dt = dims_.of(target);
                const Matrix u = chart(x.subspan(off, dt * dt), dt);
                off += dt * dt;
                local = target == Party::A ? tensor(u, Matrix::identity(dims_.b)) : tensor(Matrix::identity(dims_.a), u);
            }
            t = cnot_ * (local * t);
        }
        return t;
    }

private:
    static Matrix chart(std::span<const double> c, std::size_t d) {
        return param_to_unitary(UnitaryParam{d, std::vector<double>(c.begin(), c.end())});
    }

    Dims dims_;
    Party control_;
    std::size_t reps_;
    std::size_t depth_;
    Rotation rotate_;
    Matrix cnot_;
};

inline std::size_t max_repetitions(Dims dims, Party control) {
    return std::max<std::size_t>(1, dims.of(other(control)) - 1);
}

namespace detail {

inline double entropy_after(const Matrix& t, const PureState& s) {
    return entanglement_entropy(PureState::normalize(s.dims(), t * s.amplitudes()));
}

inline SearchOptions search_options(const Mode& m, std::uint64_t salt) {
    SearchOptions o;
    o.restarts = m.restarts;
    o.seed = m.seed * 1000003ULL + salt;
    o.max_evals = m.max_evals;
    return o;
}

inline void fill_state_work(DirectionValue& dv, const Ensemble& e) {
    const double logd = std::log2(static_cast<double>(e.dims().of(dv.control)));
    dv.state_work.clear();
    for (std::size_t i = 0; i < e.size(); ++i) {
        const double s_in = vn_entropy(reduced_pure(e[i].state.amplitudes(), e.dims(), dv.control));
        dv.state_work.push_back(WorkPair{logd - s_in, logd - dv.contributions[i]});
    }
}

struct SharedBest {
    double value = -1.0;
    std::size_t reps = 1;
    std::vector<double> x;
    std::vector<double> contributions;
};

inline std::vector<double> contributions_for(const Matrix& t, const Ensemble& e) {
    std::vector<double> c;
    c.reserve(e.size());
    for (const Member& m : e.members()) c.push_back(entropy_after(t, m.state));
    return c;
}

inline double weighted_sum(const Ensemble& e, std::span<const double> c) {
    double s = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) s += e[i].probability * c[i];
    return s;
}

inline SharedBest delta_fixed(const Ensemble& e, Party control) {
    SharedBest best;
    for (std::size_t r = 1; r <= max_repetitions(e.dims(), control); ++r) {
        const std::vector<double> c = contributions_for(cnot(e.dims(), control, r), e);
        const double v = weighted_sum(e, c);
        if (v > best.value) best = SharedBest{v, r, {}, c};
    }
    return best;
}

inline SharedBest delta_shared(const Ensemble& e, Party control, const Mode& mode) {
    SharedBest best;
    for (std::size_t r = 1; r <= max_repetitions(e.dims(), control); ++r) {
        const LayeredTransform tf(e.dims(), control, r, mode.depth, mode.rotate);
        const std::vector<std::vector<double>> starts{std::vector<double>(tf.param_count(), 0.0)};
        const SearchResult res = maximize(
            [&](std::span<const double> x) { return weighted_sum(e, contributions_for(tf.matrix(x), e)); },
            tf.param_count(), search_options(mode, r), starts);
        if (res.value > best.value) best = SharedBest{res.value, r, res.x, contributions_for(tf.matrix(res.x), e)};
    }
    return best;
}

}  // namespace detail

/// One direction of the nonlocal entropy; `control` is the CNOT control party.
inline DirectionValue delta_direction(const Ensemble& e, Party control, const Mode& mode) {
    mode.validate();
    if (!e.is_product()) throw Error("not-product-ensemble", "every member must have Schmidt rank 1");
    DirectionValue dv;
    dv.control = control;
    switch (mode.kind) {
        case ModeKind::fixed: {
            const detail::SharedBest b = detail::delta_fixed(e, control);
            dv.repetitions = b.reps;
            dv.contributions = b.contributions;
            break;
        }
        case ModeKind::ensemble_lu: {
            const detail::SharedBest b = detail::delta_shared(e, control, mode);
            dv.repetitions = b.reps;
            dv.params = b.x;
            dv.contributions = b.contributions;
            break;
        }
        case ModeKind::per_state_lu: {
            const detail::SharedBest shared = detail::delta_shared(e, control, mode);
            dv.repetitions = shared.reps;
            dv.params = shared.x;
            dv.contributions = shared.contributions;
            for (std::size_t i = 0; i < e.size(); ++i) {
                for (std::size_t r = 1; r <= max_repetitions(e.dims(), control); ++r) {
                    const LayeredTransform tf(e.dims(), control, r, mode.depth, mode.rotate);
                    std::vector<std::vector<double>> starts{std::vector<double>(tf.param_count(), 0.0)};
                    if (r == shared.reps) starts.push_back(shared.x);
                    const SearchResult res = maximize(
                        [&](std::span<const double> x) { return detail::entropy_after(tf.matrix(x), e[i].state); },
                        tf.param_count(), detail::search_options(mode, 1000 * (i + 1) + r), starts);
                    dv.contributions[i] = std::max(dv.contributions[i], res.value);
                }
            }
            break;
        }
        case ModeKind::assign:
            throw Error("bad-mode", "assign mode applies to the average-state gap only");
    }
    for (double& c : dv.contributions) c = std::max(c, 0.0);
    dv.value = detail::weighted_sum(e, dv.contributions);
    dv.entangled_after = static_cast<std::size_t>(
        std::count_if(dv.contributions.begin(), dv.contributions.end(), [](double c) { return c > kTol.entangled; }));
    detail::fill_state_work(dv, e);
    return dv;
}

/// Nonlocal entropy in both directions and their mean.
inline QuantifierReport delta_s(const Ensemble& e, const Mode& mode) {
    QuantifierReport rep;
    rep.quantity = "delta";
    rep.mode = mode;
    rep.right = delta_direction(e, Party::A, mode);
    rep.left = delta_direction(e, Party::B, mode);
    rep.symmetric = 0.5 * (rep.right.value + rep.left.value);
    return rep;
}

// ---------------------------------------------------------------------------
// assign mode

/// Orthonormal product relabelling that purifies (as far as possible) one side's average.
struct Assignment {
    Party reduced = Party::B;
    std::vector<std::vector<std::size_t>> groups;  // member indices sharing a basis vector on `reduced`
    std::vector<Vector> outputs;                   // per member, in input order
    double entropy = 0.0;                          // S of the reduced side's average after relabelling
};

/// Groups of at most d_other members, filled in order of decreasing probability.
/// The resulting mass vector majorizes that of any other admissible grouping, so
/// its entropy is minimal.
inline Assignment assign_outputs(const Ensemble& e, Party reduced) {
    if (!e.is_orthogonal()) throw Error("gram-not-identity", "assign mode needs mutually orthogonal members");
    const Dims d = e.dims();
    const std::size_t cap = d.of(other(reduced));
    std::vector<std::size_t> order(e.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return e[x].probability > e[y].probability; });
    Assignment out;
    out.reduced = reduced;
    out.outputs.resize(e.size());
    std::vector<double> masses;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const std::size_t g = pos / cap;
        const std::size_t slot = pos % cap;
        if (g >= d.of(reduced)) throw Error("gram-not-identity", "more orthogonal members than the space holds");
        if (slot == 0) {
            out.groups.emplace_back();
            masses.push_back(0.0);
        }
        out.groups[g].push_back(order[pos]);
        masses[g] += e[order[pos]].probability;
        const Vector a = basis_vector(d.a, reduced == Party::B ? slot : g);
        const Vector b = basis_vector(d.b, reduced == Party::B ? g : slot);
        out.outputs[order[pos]] = kron(a, b);
    }
    out.entropy = shannon_bits(masses);
    return out;
}

namespace detail {

// Gram-Schmidt completion of orthonormal `vs` to a basis of C^n.
inline std::vector<Vector> complete_basis(std::vector<Vector> vs, std::size_t n) {
    for (std::size_t k = 0; k < n && vs.size() < n; ++k) {
        Vector c = basis_vector(n, k);
        for (int pass = 0; pass < 2; ++pass) {
            for (const Vector& v : vs) {
                const cplx ov = inner(v, c);
                for (std::size_t i = 0; i < n; ++i) c[i] -= ov * v[i];
            }
        }
        if (norm2(c) > 1e-6) vs.push_back(normalized(std::move(c)));
    }
    return vs;
}

}  // namespace detail

/// A global unitary with U psi_i = outputs_i, built from completed input and output frames.
inline Matrix assignment_unitary(const Ensemble& e, const Assignment& a) {
    const std::size_t n = e.dims().total();
    const std::vector<Vector> in = detail::complete_basis(e.vectors(), n);
    const std::vector<Vector> out = detail::complete_basis(a.outputs, n);
    Matrix u(n, n);
    for (std::size_t k = 0; k < n; ++k) u += Matrix::outer(out[k], in[k]);
    return u;
}

namespace detail {

struct GapEval {
    double gap_a = 0.0;
    double gap_b = 0.0;
    MarginalEntropies after;
    double value() const { return std::max(gap_a, gap_b); }
};

inline GapEval gaps_after(const Matrix& rho, const MarginalEntropies& before, Dims d, const Matrix& t) {
    GapEval g;
    g.after = marginal_entropies(t * rho * t.adjoint(), d);
    g.gap_a = before.a - g.after.a;
    g.gap_b = before.b - g.after.b;
    return g;
}

inline void fill_gap_fields(DirectionValue& dv, const GapEval& g, const MarginalEntropies& before, Dims d) {
    const double la = std::log2(static_cast<double>(d.a));
    const double lb = std::log2(static_cast<double>(d.b));
    dv.gap_a = g.gap_a;
    dv.gap_b = g.gap_b;
    dv.work_a = WorkPair{la - before.a, la - g.after.a};
    dv.work_b = WorkPair{lb - before.b, lb - g.after.b};
    dv.value = std::max(0.0, g.value());
}

inline std::size_t count_entangled(const Ensemble& e, const Matrix& t) {
    std::size_t n = 0;
    for (const Member& m : e.members()) n += entropy_after(t, m.state) > kTol.entangled ? 1 : 0;
    return n;
}

}  // namespace detail

/// One direction of the average-state gap; `control` is the CNOT control party.
inline DirectionValue big_delta_direction(const Ensemble& e, Party control, const Mode& mode) {
    mode.validate();
    const Dims d = e.dims();
    const Matrix rho = average_state(e);
    const MarginalEntropies before = marginal_entropies(rho, d);
    DirectionValue dv;
    dv.control = control;

    if (mode.kind == ModeKind::assign) {
        const Assignment on_b = assign_outputs(e, Party::B);
        const Assignment on_a = assign_outputs(e, Party::A);
        detail::GapEval g;
        // the better side's relabelling is the reported transform
        const bool b_wins = before.b - on_b.entropy > before.a - on_a.entropy;
        const Assignment& chosen = b_wins ? on_b : on_a;
        std::vector<Member> outs;
        for (std::size_t i = 0; i < e.size(); ++i) {
            outs.push_back(Member{e[i].probability, PureState(d, chosen.outputs[i])});
        }
        g.after = marginal_entropies(Ensemble(d, std::move(outs)));
        g.gap_a = before.a - g.after.a;
        g.gap_b = before.b - g.after.b;
        detail::fill_gap_fields(dv, g, before, d);
        dv.value = std::max({0.0, before.a - on_a.entropy, before.b - on_b.entropy});
        dv.repetitions = 0;
        dv.entangled_after = 0;
        return dv;
    }
    if (mode.kind == ModeKind::per_state_lu) {
        throw Error("bad-mode", "per-state transforms do not act on the average state");
    }

    detail::GapEval best;
    best.after = before;
    Matrix best_t = Matrix::identity(d.total());
    std::size_t best_r = 0;
    double best_value = 0.0;  // identity
    for (std::size_t r = 1; r <= max_repetitions(d, control); ++r) {
        if (mode.kind == ModeKind::fixed) {
            const Matrix t = cnot(d, control, r);
            const detail::GapEval g = detail::gaps_after(rho, before, d, t);
            if (g.value() > best_value) {
                best = g;
                best_value = g.value();
                best_r = r;
                best_t = t;
            }
            continue;
        }
        const LayeredTransform tf(d, control, r, mode.depth, mode.rotate);
        const std::vector<std::vector<double>> starts{std::vector<double>(tf.param_count(), 0.0)};
        const SearchResult res = maximize(
            [&](std::span<const double> x) { return detail::gaps_after(rho, before, d, tf.matrix(x)).value(); },
            tf.param_count(), detail::search_options(mode, r), starts);
        if (res.value > best_value) {
            best_t = tf.matrix(res.x);
            best = detail::gaps_after(rho, before, d, best_t);
            best_value = res.value;
            best_r = r;
            dv.params = res.x;
        }
    }
    detail::fill_gap_fields(dv, best, before, d);
    dv.repetitions = best_r;
    dv.entangled_after = detail::count_entangled(e, best_t);
    return dv;
}

/// Average-state gap in both directions and their mean.
inline QuantifierReport big_delta(const Ensemble& e, const Mode& mode) {
    QuantifierReport rep;
    rep.quantity = "big-delta";
    rep.mode = mode;
    rep.right = big_delta_direction(e, Party::A, mode);
    rep.left = big_delta_direction(e, Party::B, mode);
    rep.symmetric = 0.5 * (rep.right.value + rep.left.value);
    return rep;
}

}  // namespace nle
