// Dense complex linear algebra for small bipartite systems.
//
// Everything here is sized for desk-scale quantum states (total dimension up
// to roughly 64): row-major storage, cyclic Jacobi for Hermitian spectra and
// scaling-and-squaring for exponentials. No external solver is involved.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nle {

using cplx = std::complex<double>;

/// Domain error carrying a short stable code such as "bad-dims".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail.empty() ? code : code + ": " + detail),
          code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Numeric thresholds shared by every module.
struct Tolerances {
    double hermitian_flag = 1e-12;   // entrywise M - M^dagger for flagged matrices
    double hermitian_input = 1e-10;  // accepted by eigh / expm / entropy
    double unitary = 1e-10;          // max-norm of U^dagger U - I
    double state_norm = 1e-10;
    double probability_sum = 1e-10;
    double psd = 1e-10;              // smallest admissible eigenvalue is -psd
    double entropy_cutoff = 1e-12;   // eigenvalues below contribute 0 log 0 = 0
    double orthogonality = 1e-9;     // |<x|y>| above this counts as overlap
    double gram = 1e-9;
    double product_threshold = 1e-10;  // rank one iff largest Schmidt^2 >= 1 - this
    double entangled = 1e-9;           // entropy above this counts as entangled
    double file_norm = 1e-8;
};

inline constexpr Tolerances kTol{};

enum class Party { A, B };

constexpr Party other(Party p) noexcept { return p == Party::A ? Party::B : Party::A; }
constexpr char party_name(Party p) noexcept { return p == Party::A ? 'A' : 'B'; }

/// Local dimensions of a bipartite system.
struct Dims {
    std::size_t a = 2;
    std::size_t b = 2;

    std::size_t total() const noexcept { return a * b; }
    std::size_t of(Party p) const noexcept { return p == Party::A ? a : b; }
    friend bool operator==(const Dims&, const Dims&) = default;
};

using Vector = std::vector<cplx>;

inline void require_finite(std::span<const cplx> v, const char* what) {
    for (const cplx& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error("non-finite", what);
        }
    }
}

inline cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
    if (x.size() != y.size()) throw Error("bad-dims", "inner product of unequal lengths");
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

inline double norm2(std::span<const cplx> x) { return std::sqrt(std::real(inner(x, x))); }

inline Vector normalized(Vector v) {
    const double n = norm2(v);
    if (n == 0.0) throw Error("zero-vector", "cannot normalize");
    for (cplx& z : v) z /= n;
    return v;
}

inline Vector basis_vector(std::size_t dim, std::size_t k) {
    if (k >= dim) throw Error("bad-dims", "basis index out of range");
    Vector v(dim, cplx{0.0, 0.0});
    v[k] = 1.0;
    return v;
}

/// Kronecker product of two vectors, first factor's index major.
inline Vector kron(std::span<const cplx> x, std::span<const cplx> y) {
    Vector out;
    out.reserve(x.size() * y.size());
    for (const cplx& u : x) {
        for (const cplx& w : y) out.push_back(u * w);
    }
    return out;
}

/// Row-major dense complex matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {
        if (rows == 0 || cols == 0) throw Error("bad-dims", "matrix with zero extent");
    }
    Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (rows == 0 || cols == 0 || data_.size() != rows * cols) {
            throw Error("bad-dims", "entry count does not match shape");
        }
        require_finite(data_, "matrix entries");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diagonal(std::span<const double> d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    /// |x><y|
    static Matrix outer(std::span<const cplx> x, std::span<const cplx> y) {
        Matrix m(x.size(), y.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * std::conj(y[j]);
        }
        return m;
    }

    static Matrix projector(std::span<const cplx> x) { return outer(x, x); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    std::span<const cplx> data() const noexcept { return data_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const {
        Vector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    Matrix adjoint() const {
        Matrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
        }
        return m;
    }

    cplx trace() const {
        cplx t{0.0, 0.0};
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(cplx s) {
        for (cplx& z : data_) z *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
    friend Matrix operator*(cplx s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("bad-dims", "matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
            }
        }
        return m;
    }

    friend Vector operator*(const Matrix& a, std::span<const cplx> x) {
        if (a.cols_ != x.size()) throw Error("bad-dims", "matrix-vector shape mismatch");
        Vector y(a.rows_, cplx{0.0, 0.0});
        for (std::size_t i = 0; i < a.rows_; ++i) {
            cplx s{0.0, 0.0};
            for (std::size_t k = 0; k < a.cols_; ++k) s += a(i, k) * x[k];
            y[i] = s;
        }
        return y;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("bad-dims", "shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Largest entrywise deviation from Hermiticity; non-square matrices report +inf.
inline double hermiticity_defect(const Matrix& m) {
    if (!m.square()) return INFINITY;
    double d = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return d;
}

inline bool is_hermitian(const Matrix& m, double tol = kTol.hermitian_flag) {
    return hermiticity_defect(m) <= tol;
}

/// max-norm of U^dagger U - I; non-square matrices report +inf.
inline double unitarity_defect(const Matrix& u) {
    if (!u.square()) return INFINITY;
    return (u.adjoint() * u - Matrix::identity(u.rows())).max_abs();
}

inline bool is_unitary(const Matrix& u, double tol = kTol.unitary) {
    return unitarity_defect(u) <= tol;
}

/// Kronecker product, a's indices major.
inline Matrix tensor(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return m;
}

/// Reduced operator on `keep` of a (d_A d_B)-square operator.
inline Matrix partial_trace(const Matrix& m, Dims dims, Party keep) {
    if (!m.square() || m.rows() != dims.total() || dims.a == 0 || dims.b == 0) {
        throw Error("bad-dims", "partial trace expects a square matrix of size d_A*d_B");
    }
    const std::size_t da = dims.a;
    const std::size_t db = dims.b;
    if (keep == Party::A) {
        Matrix r(da, da);
        for (std::size_t i = 0; i < da; ++i) {
            for (std::size_t k = 0; k < da; ++k) {
                cplx s{0.0, 0.0};
                for (std::size_t j = 0; j < db; ++j) s += m(i * db + j, k * db + j);
                r(i, k) = s;
            }
        }
        return r;
    }
    Matrix r(db, db);
    for (std::size_t j = 0; j < db; ++j) {
        for (std::size_t l = 0; l < db; ++l) {
            cplx s{0.0, 0.0};
            for (std::size_t i = 0; i < da; ++i) s += m(i * db + j, i * db + l);
            r(j, l) = s;
        }
    }
    return r;
}

/// Reduced density matrix of a pure state vector, without forming |x><x|.
inline Matrix reduced_pure(std::span<const cplx> x, Dims dims, Party keep) {
    if (x.size() != dims.total()) throw Error("bad-dims", "amplitude count does not match dims");
    const std::size_t da = dims.a;
    const std::size_t db = dims.b;
    if (keep == Party::A) {
        Matrix r(da, da);
        for (std::size_t i = 0; i < da; ++i) {
            for (std::size_t k = i; k < da; ++k) {
                cplx s{0.0, 0.0};
                for (std::size_t j = 0; j < db; ++j) s += x[i * db + j] * std::conj(x[k * db + j]);
                r(i, k) = s;
                r(k, i) = std::conj(s);
            }
        }
        return r;
    }
    Matrix r(db, db);
    for (std::size_t j = 0; j < db; ++j) {
        for (std::size_t l = j; l < db; ++l) {
            cplx s{0.0, 0.0};
            for (std::size_t i = 0; i < da; ++i) s += x[i * db + j] * std::conj(x[i * db + l]);
            r(j, l) = s;
            r(l, j) = std::conj(s);
        }
    }
    return r;
}

struct Eigensystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k pairs with values[k]
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
inline Eigensystem eigh(const Matrix& m) {
    if (!m.square()) throw Error("not-hermitian", "non-square input");
    const double scale = std::max(1.0, m.max_abs());
    if (hermiticity_defect(m) > kTol.hermitian_input * scale) {
        throw Error("not-hermitian", "input deviates from its adjoint");
    }
    const std::size_t n = m.rows();
    Matrix a = m;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    Matrix v = Matrix::identity(n);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
        }
        return std::sqrt(s);
    };

    double frob = 0.0;
    for (const cplx& z : a.data()) frob += std::norm(z);
    frob = std::sqrt(frob);
    const double stop = 1e-15 * std::max(frob, 1e-300);

    for (int sweep = 0; sweep < 100 && off_norm() > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag <= 1e-300) continue;
                const cplx phase = a(p, q) / mag;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                const cplx sp = s * std::conj(phase);  // s e^{-i phi}

                // a <- a G with G[:,p] = (c, -s e^{-i phi}), G[:,q] = (s, c e^{-i phi})
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - sp * akq;
                    a(k, q) = s * akp + c * std::conj(phase) * akq;
                }
                // a <- G^dagger a
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp - sp * vkq;
                    v(k, q) = s * vkp + c * std::conj(phase) * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    Eigensystem out{std::vector<double>(n), Matrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

/// Eigenvalues only, ascending.
inline std::vector<double> eigvalsh(const Matrix& m) { return eigh(m).values; }

/// exp(i h) for Hermitian h, by scaling and squaring a truncated Taylor series.
inline Matrix expm_skew_hermitian(const Matrix& h) {
    if (!h.square()) throw Error("not-hermitian", "non-square generator");
    const double scale = std::max(1.0, h.max_abs());
    if (hermiticity_defect(h) > kTol.hermitian_input * scale) {
        throw Error("not-hermitian", "generator deviates from its adjoint");
    }
    const std::size_t n = h.rows();
    // 1-norm bound of i h
    double norm1 = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < n; ++r) col += std::abs(h(r, c));
        norm1 = std::max(norm1, col);
    }
    int squarings = 0;
    while (norm1 / std::ldexp(1.0, squarings) > 0.25) ++squarings;
    const Matrix x = h * cplx{0.0, std::ldexp(1.0, -squarings)};

    Matrix result = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    for (int k = 1; k <= 30; ++k) {
        term = term * x;
        term *= cplx{1.0 / k, 0.0};
        result += term;
        if (term.max_abs() < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

/// G[i][j] = <v_i|v_j>.
inline Matrix gram(std::span<const Vector> vectors) {
    if (vectors.empty()) throw Error("bad-dims", "gram of an empty list");
    const std::size_t len = vectors.front().size();
    for (const Vector& v : vectors) {
        if (v.size() != len) throw Error("bad-dims", "vectors of unequal length");
    }
    const std::size_t k = vectors.size();
    Matrix g(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            g(i, j) = inner(vectors[i], vectors[j]);
            g(j, i) = std::conj(g(i, j));
        }
    }
    return g;
}

inline double gram_identity_defect(std::span<const Vector> vectors) {
    return (gram(vectors) - Matrix::identity(vectors.size())).max_abs();
}

/// Shannon entropy in bits; entries below the cutoff contribute nothing.
inline double shannon_bits(std::span<const double> p) {
    double h = 0.0;
    for (double x : p) {
        if (x > kTol.entropy_cutoff) h -= x * std::log2(x);
    }
    return h;
}

}  // namespace nle
