// Bipartite pure states, ensembles and their entropies.

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nle/numkit.hpp"

namespace nle {

/// Normalized pure state on C^{d_A} (x) C^{d_B}; amplitude of |i>|j> sits at i*d_B + j.
class PureState {
public:
    PureState(Dims dims, Vector amplitudes) : dims_(dims), amps_(std::move(amplitudes)) {
        if (dims_.a == 0 || dims_.b == 0 || amps_.size() != dims_.total()) {
            throw Error("bad-dims", "amplitude count does not match d_A*d_B");
        }
        require_finite(amps_, "state amplitudes");
        if (std::abs(norm2(amps_) - 1.0) > kTol.state_norm) {
            throw Error("not-normalized", "state norm deviates from 1");
        }
    }

    /// Normalizes before validating; rejects the zero vector.
    static PureState normalize(Dims dims, Vector amplitudes) {
        return PureState(dims, normalized(std::move(amplitudes)));
    }

    static PureState product(std::span<const cplx> a_part, std::span<const cplx> b_part) {
        return normalize(Dims{a_part.size(), b_part.size()}, kron(a_part, b_part));
    }

    /// |i>_A |j>_B
    static PureState basis(Dims dims, std::size_t i, std::size_t j) {
        return PureState(dims, basis_vector(dims.total(), i * dims.b + j));
    }

    Dims dims() const noexcept { return dims_; }
    std::span<const cplx> amplitudes() const noexcept { return amps_; }
    const Vector& vector() const noexcept { return amps_; }
    Matrix projector() const { return Matrix::projector(amps_); }

private:
    Dims dims_;
    Vector amps_;
};

struct Member {
    double probability = 0.0;
    PureState state;
};

/// Probability-weighted list of pure states on common dimensions.
class Ensemble {
public:
    Ensemble(Dims dims, std::vector<Member> members) : dims_(dims), members_(std::move(members)) {
        if (members_.empty()) throw Error("empty-ensemble", "an ensemble needs at least one state");
        double total = 0.0;
        for (const Member& m : members_) {
            if (!(m.state.dims() == dims_)) throw Error("bad-dims", "member dims differ from ensemble dims");
            if (!(m.probability > 0.0) || m.probability > 1.0 + kTol.probability_sum) {
                throw Error("bad-probabilities", "each probability must lie in (0, 1]");
            }
            total += m.probability;
        }
        if (std::abs(total - 1.0) > kTol.probability_sum) {
            throw Error("bad-probabilities", "probabilities do not sum to 1");
        }
    }

    /// Equal weights 1/k.
    static Ensemble uniform(Dims dims, std::vector<PureState> states) {
        std::vector<Member> members;
        const double p = 1.0 / static_cast<double>(states.size());
        for (PureState& s : states) members.push_back(Member{p, std::move(s)});
        return Ensemble(dims, std::move(members));
    }

    Dims dims() const noexcept { return dims_; }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<Member>& members() const noexcept { return members_; }
    const Member& operator[](std::size_t i) const { return members_.at(i); }

    std::vector<Vector> vectors() const {
        std::vector<Vector> out;
        out.reserve(members_.size());
        for (const Member& m : members_) out.push_back(m.state.vector());
        return out;
    }

    std::vector<double> probabilities() const {
        std::vector<double> out;
        for (const Member& m : members_) out.push_back(m.probability);
        return out;
    }

    /// Sub-ensemble of the listed members with renormalized weights.
    Ensemble subset(std::span<const std::size_t> indices) const {
        if (indices.empty()) throw Error("bad-params", "empty member selection");
        std::vector<Member> picked;
        double mass = 0.0;
        for (std::size_t i : indices) {
            if (i >= members_.size()) throw Error("bad-params", "member index out of range");
            picked.push_back(members_[i]);
            mass += members_[i].probability;
        }
        for (std::size_t a = 0; a < indices.size(); ++a) {
            for (std::size_t b = a + 1; b < indices.size(); ++b) {
                if (indices[a] == indices[b]) throw Error("bad-params", "duplicate member index");
            }
        }
        for (Member& m : picked) m.probability /= mass;
        return Ensemble(dims_, std::move(picked));
    }

    bool is_orthogonal() const { return gram_identity_defect(vectors()) <= kTol.gram; }
    bool is_product() const;

private:
    Dims dims_;
    std::vector<Member> members_;
};

/// S(rho) = -tr rho log2 rho.
inline double vn_entropy(const Matrix& rho) {
    if (!rho.square()) throw Error("not-a-state", "density matrix must be square");
    const std::vector<double> ev = eigvalsh(rho);
    double tr = 0.0;
    for (double x : ev) {
        if (x < -kTol.psd) throw Error("not-a-state", "negative eigenvalue");
        tr += x;
    }
    if (std::abs(tr - 1.0) > kTol.psd) throw Error("not-a-state", "trace differs from 1");
    return shannon_bits(ev);
}

inline double entanglement_entropy(const PureState& s) {
    const Dims d = s.dims();
    const Party keep = d.a <= d.b ? Party::A : Party::B;
    return vn_entropy(reduced_pure(s.amplitudes(), d, keep));
}

struct Schmidt {
    std::vector<double> coefficients;  // descending, nonnegative
    std::vector<Vector> left;          // on A
    std::vector<Vector> right;         // on B
};

/// Schmidt decomposition from the spectrum of rho_A; terms with vanishing weight are dropped.
inline Schmidt schmidt(const PureState& s) {
    const Dims d = s.dims();
    const Eigensystem es = eigh(reduced_pure(s.amplitudes(), d, Party::A));
    Schmidt out;
    for (std::size_t k = d.a; k-- > 0;) {
        const double w = es.values[k];
        if (w <= 1e-14) continue;
        const double sigma = std::sqrt(w);
        Vector u = es.vectors.column(k);
        // v_j = sum_i conj(u_i) psi_{ij} / sigma
        Vector v(d.b, cplx{0.0, 0.0});
        for (std::size_t i = 0; i < d.a; ++i) {
            for (std::size_t j = 0; j < d.b; ++j) v[j] += std::conj(u[i]) * s.amplitudes()[i * d.b + j];
        }
        for (cplx& z : v) z /= sigma;
        out.coefficients.push_back(sigma);
        out.left.push_back(std::move(u));
        out.right.push_back(std::move(v));
    }
    return out;
}

inline bool is_product(const PureState& s) {
    const std::vector<double> ev = eigvalsh(reduced_pure(s.amplitudes(), s.dims(), Party::A));
    return ev.back() >= 1.0 - kTol.product_threshold;
}

inline bool Ensemble::is_product() const {
    for (const Member& m : members_) {
        if (!nle::is_product(m.state)) return false;
    }
    return true;
}

/// sum_i p_i |psi_i><psi_i|
inline Matrix average_state(const Ensemble& e) {
    const std::size_t n = e.dims().total();
    Matrix rho(n, n);
    for (const Member& m : e.members()) {
        const std::span<const cplx> x = m.state.amplitudes();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) rho(i, j) += m.probability * x[i] * std::conj(x[j]);
        }
    }
    return rho;
}

struct MarginalEntropies {
    double a = 0.0;
    double b = 0.0;
    double of(Party p) const noexcept { return p == Party::A ? a : b; }
};

inline MarginalEntropies marginal_entropies(const Matrix& rho, Dims dims) {
    return {vn_entropy(partial_trace(rho, dims, Party::A)), vn_entropy(partial_trace(rho, dims, Party::B))};
}

inline MarginalEntropies marginal_entropies(const Ensemble& e) {
    return marginal_entropies(average_state(e), e.dims());
}

}  // namespace nle
