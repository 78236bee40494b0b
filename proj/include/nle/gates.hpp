// Generalized CNOT, local embeddings and a smooth chart of U(n).

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "nle/numkit.hpp"
#include "nle/qstate.hpp"

namespace nle {

/// Control A: |i,j> -> |i, (j + r i) mod d_B>.  Control B: |i,j> -> |(i + r j) mod d_A, j>.
inline Matrix cnot(Dims dims, Party control, std::size_t repetitions = 1) {
    if (repetitions == 0) throw Error("bad-params", "cnot repetitions must be positive");
    Matrix u(dims.total(), dims.total());
    for (std::size_t i = 0; i < dims.a; ++i) {
        for (std::size_t j = 0; j < dims.b; ++j) {
            std::size_t oi = i;
            std::size_t oj = j;
            if (control == Party::A) {
                oj = (j + repetitions * i) % dims.b;
            } else {
                oi = (i + repetitions * j) % dims.a;
            }
            u(oi * dims.b + oj, i * dims.b + j) = 1.0;
        }
    }
    return u;
}

/// Same permutation as cnot(), applied to a vector without building the matrix.
inline Vector apply_cnot(std::span<const cplx> x, Dims dims, Party control, std::size_t repetitions) {
    Vector y(x.size(), cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dims.a; ++i) {
        for (std::size_t j = 0; j < dims.b; ++j) {
            std::size_t oi = i;
            std::size_t oj = j;
            if (control == Party::A) {
                oj = (j + repetitions * i) % dims.b;
            } else {
                oi = (i + repetitions * j) % dims.a;
            }
            y[oi * dims.b + oj] = x[i * dims.b + j];
        }
    }
    return y;
}

/// u (x) I or I (x) u on the full space.
inline Matrix embed_local(const Matrix& u, Dims dims, Party side) {
    if (!u.square() || u.rows() != dims.of(side)) throw Error("bad-dims", "local operator size differs from the party's dimension");
    if (!is_unitary(u)) throw Error("not-unitary", "local operator is not unitary");
    return side == Party::A ? tensor(u, Matrix::identity(dims.b)) : tensor(Matrix::identity(dims.a), u);
}

/// Hermitian basis of dim x dim matrices: per row i the diagonal unit E_ii, then for
/// each j > i the pair X_ij = E_ij + E_ji and Y_ij = -i E_ij + i E_ji.
inline std::vector<Matrix> hermitian_basis(std::size_t dim) {
    std::vector<Matrix> out;
    out.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Matrix d(dim, dim);
        d(i, i) = 1.0;
        out.push_back(std::move(d));
        for (std::size_t j = i + 1; j < dim; ++j) {
            Matrix x(dim, dim);
            x(i, j) = 1.0;
            x(j, i) = 1.0;
            out.push_back(std::move(x));
            Matrix y(dim, dim);
            y(i, j) = cplx{0.0, -1.0};
            y(j, i) = cplx{0.0, 1.0};
            out.push_back(std::move(y));
        }
    }
    return out;
}

/// Coordinates of a Hermitian generator; the unitary is exp(i H).
struct UnitaryParam {
    std::size_t dim = 1;
    std::vector<double> coeffs;

    static UnitaryParam zero(std::size_t dim) { return {dim, std::vector<double>(dim * dim, 0.0)}; }
};

inline Matrix generator(const UnitaryParam& p) {
    if (p.dim == 0 || p.coeffs.size() != p.dim * p.dim) throw Error("bad-params", "expected dim^2 coefficients");
    Matrix h(p.dim, p.dim);
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.dim; ++i) {
        h(i, i) += p.coeffs[k++];
        for (std::size_t j = i + 1; j < p.dim; ++j) {
            const double x = p.coeffs[k++];
            const double y = p.coeffs[k++];
            h(i, j) += cplx{x, -y};
            h(j, i) += cplx{x, y};
        }
    }
    for (double c : p.coeffs) {
        if (!std::isfinite(c)) throw Error("non-finite", "unitary parameter");
    }
    return h;
}

inline Matrix param_to_unitary(const UnitaryParam& p) { return expm_skew_hermitian(generator(p)); }

inline PureState apply(const Matrix& u, const PureState& s) {
    if (!u.square() || u.rows() != s.dims().total()) throw Error("bad-dims", "operator size differs from state size");
    if (!is_unitary(u)) throw Error("not-unitary", "operator is not unitary");
    return PureState::normalize(s.dims(), u * s.amplitudes());
}

/// Ensemble with every member mapped by the same unitary.
inline Ensemble apply(const Matrix& u, const Ensemble& e) {
    std::vector<Member> out;
    out.reserve(e.size());
    for (const Member& m : e.members()) out.push_back(Member{m.probability, apply(u, m.state)});
    return Ensemble(e.dims(), std::move(out));
}

}  // namespace nle
