#pragma once

// Projective Clifford group elements as conjugation tableaus.
//
// A CliffordTableau stores, for a unitary U defined up to an 8th-root-of-unity
// phase, the images U^-1 X_i U and U^-1 Z_i U for every qubit i.  These images
// determine the projective element exactly, and the right-action convention
//     conjugate(P, compose(f, t)) == conjugate(conjugate(P, f), t)
// makes word evaluation read left to right like a circuit diagram.

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffperm/pauli.hpp"

namespace cliffperm {

class CliffordTableau {
  public:
    // Identity element on n qubits.
    explicit CliffordTableau(int n) : n_(n) {
        detail::require_qubit_count(n);
        im_x_.reserve(n);
        im_z_.reserve(n);
        for (int q = 1; q <= n; ++q) {
            im_x_.push_back(PhasedPauli::x_op(n, q));
            im_z_.push_back(PhasedPauli::z_op(n, q));
        }
    }

    static CliffordTableau identity(int n) { return CliffordTableau(n); }

    // Builds a tableau from explicit rows (images of X_1..X_n then Z_1..Z_n).
    CliffordTableau(int n, std::vector<PhasedPauli> im_x, std::vector<PhasedPauli> im_z)
        : n_(n), im_x_(std::move(im_x)), im_z_(std::move(im_z)) {
        detail::require_qubit_count(n);
        if (static_cast<int>(im_x_.size()) != n || static_cast<int>(im_z_.size()) != n)
            throw std::invalid_argument("tableau needs exactly n X-rows and n Z-rows");
        for (const auto& row : im_x_)
            if (row.num_qubits() != n) throw std::invalid_argument("tableau row qubit count mismatch");
        for (const auto& row : im_z_)
            if (row.num_qubits() != n) throw std::invalid_argument("tableau row qubit count mismatch");
        if (!is_valid()) throw std::invalid_argument("rows do not define a Clifford tableau");
    }

    int num_qubits() const { return n_; }

    const PhasedPauli& image_of_x(int qubit) const {
        detail::require_qubit_index(n_, qubit);
        return im_x_[qubit - 1];
    }

    const PhasedPauli& image_of_z(int qubit) const {
        detail::require_qubit_index(n_, qubit);
        return im_z_[qubit - 1];
    }

    // U^-1 P U, accumulated row by row with exact phase tracking.
    PhasedPauli conjugate(const PhasedPauli& p) const {
        if (p.num_qubits() != n_)
            throw std::invalid_argument("conjugate: pauli qubit count mismatch");
        PhasedPauli acc = PhasedPauli(n_).with_delta_added(p.delta());
        for (int q = 1; q <= n_; ++q) {
            if (p.x(q)) acc = pauli_mul(acc, im_x_[q - 1]);
            if (p.z(q)) acc = pauli_mul(acc, im_z_[q - 1]);
        }
        return acc;
    }

    // Checks the defining constraints: every row Hermitian, paired rows
    // anticommute, all other row pairs commute.  (These force the symplectic
    // part to be invertible.)
    bool is_valid() const {
        for (int i = 0; i < n_; ++i)
            if (!im_x_[i].is_hermitian() || !im_z_[i].is_hermitian()) return false;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (!commutes(im_x_[i], im_x_[j]) || !commutes(im_z_[i], im_z_[j])) return false;
                const bool anti = (i == j);
                if (commutes(im_x_[i], im_z_[j]) == anti) return false;
            }
        }
        return true;
    }

    // True iff the element lies in the projective Pauli subgroup, i.e. the
    // symplectic part is the identity (rows may still carry +/- signs).
    bool is_pauli() const {
        for (int i = 0; i < n_; ++i) {
            const std::uint32_t e = 1u << i;
            if (im_x_[i].x_bits() != e || im_x_[i].z_bits() != 0) return false;
            if (im_z_[i].x_bits() != 0 || im_z_[i].z_bits() != e) return false;
        }
        return true;
    }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i) {
            const std::uint32_t e = 1u << i;
            if (im_x_[i] != PhasedPauli(n_, e, 0, 0)) return false;
            if (im_z_[i] != PhasedPauli(n_, 0, e, 0)) return false;
        }
        return true;
    }

    CliffordTableau inverse() const;

    // Fixed-width injective encoding: rows imX[1..n] then imZ[1..n]; each row
    // packs x bits (qubit 1 = bit 0), z bits, then delta into 2n+2 bits,
    // serialized big-endian in ceil((2n+2)/8) bytes.  Plain byte-wise
    // comparison of keys therefore orders rows by their packed value, and the
    // identity tableau takes the least key within any fixed n.
    std::string canonical_key() const {
        const int row_bytes = (2 * n_ + 2 + 7) / 8;
        std::string key;
        key.reserve(static_cast<std::size_t>(2 * n_) * row_bytes);
        auto pack = [&](const PhasedPauli& row) {
            std::uint64_t v = static_cast<std::uint64_t>(row.x_bits()) |
                              (static_cast<std::uint64_t>(row.z_bits()) << n_) |
                              (static_cast<std::uint64_t>(row.delta()) << (2 * n_));
            for (int b = row_bytes - 1; b >= 0; --b)
                key.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
        };
        for (const auto& row : im_x_) pack(row);
        for (const auto& row : im_z_) pack(row);
        return key;
    }

    static CliffordTableau from_canonical_key(const std::string& key, int n) {
        detail::require_qubit_count(n);
        const int row_bytes = (2 * n + 2 + 7) / 8;
        if (key.size() != static_cast<std::size_t>(2 * n) * row_bytes)
            throw std::invalid_argument("canonical key has wrong length for n=" + std::to_string(n));
        const std::uint32_t mask = (1u << n) - 1u;
        std::size_t pos = 0;
        auto unpack = [&]() {
            std::uint64_t v = 0;
            for (int b = 0; b < row_bytes; ++b)
                v = (v << 8) | static_cast<std::uint8_t>(key[pos++]);
            if (v >> (2 * n + 2) != 0)
                throw std::invalid_argument("canonical key has stray bits");
            return PhasedPauli(n, static_cast<std::uint32_t>(v) & mask,
                               static_cast<std::uint32_t>(v >> n) & mask,
                               static_cast<int>(v >> (2 * n)) & 3);
        };
        std::vector<PhasedPauli> xs, zs;
        for (int i = 0; i < n; ++i) xs.push_back(unpack());
        for (int i = 0; i < n; ++i) zs.push_back(unpack());
        return CliffordTableau(n, std::move(xs), std::move(zs));
    }

    // One row per line in the PhasedPauli text form, imX rows then imZ rows.
    std::string str() const {
        std::string out;
        for (const auto& row : im_x_) out += row.str() + "\n";
        for (const auto& row : im_z_) out += row.str() + "\n";
        return out;
    }

    friend bool operator==(const CliffordTableau& a, const CliffordTableau& b) {
        return a.n_ == b.n_ && a.im_x_ == b.im_x_ && a.im_z_ == b.im_z_;
    }
    friend bool operator!=(const CliffordTableau& a, const CliffordTableau& b) { return !(a == b); }

    friend CliffordTableau compose(const CliffordTableau& f, const CliffordTableau& t);

  private:
    CliffordTableau() : n_(0) {}  // used by inverse()/compose() internals

    int n_;
    std::vector<PhasedPauli> im_x_, im_z_;
};

// Product "f then t":  (U_f U_t)^-1 P (U_f U_t) = U_t^-1 (U_f^-1 P U_f) U_t,
// so every row of f is mapped through t.
inline CliffordTableau compose(const CliffordTableau& f, const CliffordTableau& t) {
    if (f.num_qubits() != t.num_qubits())
        throw std::invalid_argument("compose: qubit counts differ");
    CliffordTableau out;
    out.n_ = f.n_;
    out.im_x_.reserve(f.n_);
    out.im_z_.reserve(f.n_);
    for (int i = 0; i < f.n_; ++i) out.im_x_.push_back(t.conjugate(f.im_x_[i]));
    for (int i = 0; i < f.n_; ++i) out.im_z_.push_back(t.conjugate(f.im_z_[i]));
    assert(out.is_valid());
    return out;
}

// Inverts the symplectic part over F2, then fixes each row's phase so that
// conjugating the candidate row through *this lands exactly on X_i / Z_i.
inline CliffordTableau CliffordTableau::inverse() const {
    const int m = 2 * n_;
    // Row i of `a` holds the (x|z) bits of the image of the i-th basis label
    // (X_1..X_n, Z_1..Z_n); `b` accumulates the inverse via Gauss-Jordan.
    std::vector<std::uint64_t> a(m), b(m);
    auto row_bits = [&](const PhasedPauli& p) {
        return static_cast<std::uint64_t>(p.x_bits()) |
               (static_cast<std::uint64_t>(p.z_bits()) << n_);
    };
    for (int i = 0; i < n_; ++i) {
        a[i] = row_bits(im_x_[i]);
        a[n_ + i] = row_bits(im_z_[i]);
    }
    for (int i = 0; i < m; ++i) b[i] = std::uint64_t{1} << i;
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int r = col; r < m; ++r)
            if ((a[r] >> col) & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("tableau symplectic part is singular");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int r = 0; r < m; ++r)
            if (r != col && ((a[r] >> col) & 1)) {
                a[r] ^= a[col];
                b[r] ^= b[col];
            }
    }
    const std::uint32_t mask = (1u << n_) - 1u;
    auto solve_row = [&](int basis_index) {
        // b[basis_index] holds the preimage bits of basis label `basis_index`;
        // conjugating a Hermitian representative of those bits through *this
        // yields i^c times the basis Pauli, so subtracting c fixes the phase.
        std::uint32_t bx = static_cast<std::uint32_t>(b[basis_index]) & mask;
        std::uint32_t bz = static_cast<std::uint32_t>(b[basis_index] >> n_) & mask;
        const int delta0 = detail::parity(bx & bz);  // Hermitian representative
        PhasedPauli candidate(n_, bx, bz, delta0);
        PhasedPauli image = conjugate(candidate);
        assert(row_bits(image) == (std::uint64_t{1} << basis_index));
        return candidate.with_delta_added(-image.delta());
    };
    CliffordTableau out;
    out.n_ = n_;
    out.im_x_.reserve(n_);
    out.im_z_.reserve(n_);
    for (int i = 0; i < n_; ++i) out.im_x_.push_back(solve_row(i));
    for (int i = 0; i < n_; ++i) out.im_z_.push_back(solve_row(n_ + i));
    assert(compose(*this, out).is_identity());
    return out;
}

}  // namespace cliffperm
