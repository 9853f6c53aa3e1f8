#pragma once

// Dense-unitary oracle for small qubit counts (n <= 3).
//
// This module is the ground truth that pins every sign convention in the
// tableau engine: a word lifts to the matrix product U_{w1} U_{w2} ... in the
// same left-to-right order, conjugation means U^-1 P U, and qubit 1 occupies
// the most significant position of the tensor product.  Comparisons use an
// absolute entrywise tolerance of 1e-9; all entries involved are exact
// algebraic numbers (0, +-1, +-i, 1/sqrt(2) factors), so the tolerance only
// absorbs floating-point roundoff.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffperm/pauli.hpp"
#include "cliffperm/tableau.hpp"
#include "cliffperm/word.hpp"

namespace cliffperm {

inline constexpr double kOracleTolerance = 1e-9;
inline constexpr int kMaxOracleQubits = 3;

using cplx = std::complex<double>;

// omega = exp(i pi / 4), the primitive 8th root of unity generating the
// projective phases.
inline cplx omega_power(int k) {
    static const double inv_sqrt2 = 0.7071067811865475244008443621048490;
    static const cplx table[8] = {
        {1, 0},           {inv_sqrt2, inv_sqrt2},  {0, 1},  {-inv_sqrt2, inv_sqrt2},
        {-1, 0},          {-inv_sqrt2, -inv_sqrt2}, {0, -1}, {inv_sqrt2, -inv_sqrt2},
    };
    return table[((k % 8) + 8) % 8];
}

class Matrix {
  public:
    explicit Matrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {
        if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
    }

    static Matrix identity(int dim) {
        Matrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
        return m;
    }

    int dim() const { return dim_; }
    cplx& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const cplx& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

    Matrix adjoint() const {
        Matrix out(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) out.at(c, r) = std::conj(at(r, c));
        return out;
    }

    Matrix scaled(cplx s) const {
        Matrix out = *this;
        for (auto& v : out.a_) v *= s;
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("matrix product: dimension mismatch");
        Matrix out(a.dim_);
        for (int r = 0; r < a.dim_; ++r)
            for (int k = 0; k < a.dim_; ++k) {
                const cplx v = a.at(r, k);
                if (v == cplx{}) continue;
                for (int c = 0; c < a.dim_; ++c) out.at(r, c) += v * b.at(k, c);
            }
        return out;
    }

    double max_abs_diff(const Matrix& other) const {
        if (dim_ != other.dim_) throw std::invalid_argument("matrix compare: dimension mismatch");
        double worst = 0.0;
        for (std::size_t i = 0; i < a_.size(); ++i)
            worst = std::max(worst, std::abs(a_[i] - other.a_[i]));
        return worst;
    }

    bool approx_equal(const Matrix& other, double tol = kOracleTolerance) const {
        return max_abs_diff(other) <= tol;
    }

  private:
    int dim_;
    std::vector<cplx> a_;
};

namespace detail {

inline void require_oracle_qubits(int n) {
    if (n < 1 || n > kMaxOracleQubits)
        throw std::invalid_argument("matrix oracle supports 1.." +
                                    std::to_string(kMaxOracleQubits) + " qubits");
}

// Bit of `qubit` inside a basis-state index; qubit 1 is the most significant
// tensor factor.
inline int basis_bit(int index, int qubit, int n) { return (index >> (n - qubit)) & 1; }

}  // namespace detail

// Full 2^n x 2^n matrix of a single gate letter.
inline Matrix gate_matrix(const Letter& l, int n) {
    detail::require_oracle_qubits(n);
    const int dim = 1 << n;
    Matrix m(dim);
    static const double inv_sqrt2 = 0.7071067811865475244008443621048490;
    switch (l.gate) {
        case Gate::H:
            // H = [[1,1],[1,-1]]/sqrt(2) on qubit a.
            for (int c = 0; c < dim; ++c) {
                const int flip = c ^ (1 << (n - l.a));
                m.at(c, c) += inv_sqrt2 * (detail::basis_bit(c, l.a, n) ? -1.0 : 1.0);
                m.at(flip, c) += inv_sqrt2;
            }
            break;
        case Gate::S:
            // S = diag(1, i) on qubit a.
            for (int c = 0; c < dim; ++c)
                m.at(c, c) = detail::basis_bit(c, l.a, n) ? cplx{0, 1} : cplx{1, 0};
            break;
        case Gate::CZ:
            // diag with -1 where both qubits are 1.
            for (int c = 0; c < dim; ++c) {
                bool both = detail::basis_bit(c, l.a, n) && detail::basis_bit(c, l.b, n);
                m.at(c, c) = both ? -1.0 : 1.0;
            }
            break;
    }
    return m;
}

// Product of the gate matrices in left-to-right word order, U_{w1} U_{w2} ...
inline Matrix matrix_of_word(const Word& w) {
    detail::require_oracle_qubits(w.num_qubits());
    Matrix u = Matrix::identity(1 << w.num_qubits());
    for (const auto& l : w.letters()) u = u * gate_matrix(l, w.num_qubits());
    return u;
}

inline Matrix matrix_of_pauli(const PhasedPauli& p) {
    const int n = p.num_qubits();
    detail::require_oracle_qubits(n);
    const int dim = 1 << n;
    // i^delta * prod_j X_j^{x_j} Z_j^{z_j}:  column c maps to i^delta *
    // (-1)^{|z & c|} |c ^ x>.
    Matrix m(dim);
    for (int c = 0; c < dim; ++c) {
        int sign = 0;
        int target = c;
        for (int q = 1; q <= n; ++q) {
            if (p.z(q) && detail::basis_bit(c, q, n)) sign ^= 1;
            if (p.x(q)) target ^= 1 << (n - q);
        }
        m.at(target, c) = omega_power(2 * p.delta()) * (sign ? -1.0 : 1.0);
    }
    return m;
}

// True iff A = omega^k B for some k in 0..7 (entrywise within tol).
inline bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol = kOracleTolerance) {
    for (int k = 0; k < 8; ++k)
        if (a.approx_equal(b.scaled(omega_power(k)), tol)) return true;
    return false;
}

// Cross-checks word_eval against the dense lift: for every basis Pauli P in
// {X_i, Z_i}, the tableau image of P must equal U^-1 P U entrywise (phase
// included, not just up to omega^k).
inline bool check_tableau(const Word& w, double tol = kOracleTolerance) {
    const int n = w.num_qubits();
    detail::require_oracle_qubits(n);
    const CliffordTableau t = word_eval(w);
    const Matrix u = matrix_of_word(w);
    const Matrix u_inv = u.adjoint();
    for (int q = 1; q <= n; ++q) {
        for (bool zrow : {false, true}) {
            const PhasedPauli p = zrow ? PhasedPauli::z_op(n, q) : PhasedPauli::x_op(n, q);
            const Matrix lhs = matrix_of_pauli(t.conjugate(p));
            const Matrix rhs = u_inv * matrix_of_pauli(p) * u;
            if (!lhs.approx_equal(rhs, tol)) return false;
        }
    }
    return true;
}

// Literal two-qubit gate matrices used by the identity checks.
inline Matrix cx_matrix(int control, int target, int n) {
    detail::require_oracle_qubits(n);
    const int dim = 1 << n;
    Matrix m(dim);
    for (int c = 0; c < dim; ++c) {
        int to = c;
        if (detail::basis_bit(c, control, n)) to ^= 1 << (n - target);
        m.at(to, c) = 1.0;
    }
    return m;
}

inline Matrix swap_matrix(int a, int b, int n) {
    detail::require_oracle_qubits(n);
    const int dim = 1 << n;
    Matrix m(dim);
    for (int c = 0; c < dim; ++c) {
        int to = c;
        const int ba = detail::basis_bit(c, a, n), bb = detail::basis_bit(c, b, n);
        if (ba != bb) to ^= (1 << (n - a)) | (1 << (n - b));
        m.at(to, c) = 1.0;
    }
    return m;
}

}  // namespace cliffperm
