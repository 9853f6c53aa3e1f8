#pragma once

// Phase-tracked n-qubit Pauli operators.
//
// A PhasedPauli stores i^delta * prod_j X_j^{x_j} Z_j^{z_j} with delta mod 4
// and one X/Z bit per qubit.  Within each qubit the X factor precedes the Z
// factor; factors on distinct qubits commute, so this fixes the operator.
// Qubit 1 lives in bit 0 of the bit vectors (lowest index = lowest bit).

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliffperm {

inline constexpr int kMaxQubits = 16;

namespace detail {

inline void require_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits)
        throw std::invalid_argument("qubit count must be in 1.." + std::to_string(kMaxQubits) +
                                    ", got " + std::to_string(n));
}

inline void require_qubit_index(int n, int qubit) {
    if (qubit < 1 || qubit > n)
        throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                    " out of range 1.." + std::to_string(n));
}

inline int parity(std::uint32_t bits) { return std::popcount(bits) & 1; }

}  // namespace detail

class PhasedPauli {
  public:
    // Identity operator on n qubits.
    explicit PhasedPauli(int n) : n_(n) { detail::require_qubit_count(n); }

    PhasedPauli(int n, std::uint32_t x, std::uint32_t z, int delta) : n_(n) {
        detail::require_qubit_count(n);
        const std::uint32_t mask = (n == 32) ? ~0u : ((1u << n) - 1u);
        if ((x & ~mask) != 0 || (z & ~mask) != 0)
            throw std::invalid_argument("pauli bits exceed qubit count");
        x_ = x;
        z_ = z;
        delta_ = static_cast<std::uint8_t>(((delta % 4) + 4) % 4);
    }

    static PhasedPauli x_op(int n, int qubit) {
        detail::require_qubit_count(n);
        detail::require_qubit_index(n, qubit);
        return PhasedPauli(n, 1u << (qubit - 1), 0u, 0);
    }

    static PhasedPauli z_op(int n, int qubit) {
        detail::require_qubit_count(n);
        detail::require_qubit_index(n, qubit);
        return PhasedPauli(n, 0u, 1u << (qubit - 1), 0);
    }

    // Y_q = i * X_q Z_q.
    static PhasedPauli y_op(int n, int qubit) {
        detail::require_qubit_count(n);
        detail::require_qubit_index(n, qubit);
        return PhasedPauli(n, 1u << (qubit - 1), 1u << (qubit - 1), 1);
    }

    int num_qubits() const { return n_; }
    std::uint32_t x_bits() const { return x_; }
    std::uint32_t z_bits() const { return z_; }
    int delta() const { return delta_; }

    bool x(int qubit) const {
        detail::require_qubit_index(n_, qubit);
        return (x_ >> (qubit - 1)) & 1u;
    }

    bool z(int qubit) const {
        detail::require_qubit_index(n_, qubit);
        return (z_ >> (qubit - 1)) & 1u;
    }

    bool is_identity() const { return x_ == 0 && z_ == 0 && delta_ == 0; }

    // Disregarding phase, is the tensor part trivial?
    bool is_scalar() const { return x_ == 0 && z_ == 0; }

    // P is Hermitian iff delta == |{j : x_j = z_j = 1}| (mod 2).
    bool is_hermitian() const { return (delta_ & 1) == detail::parity(x_ & z_); }

    PhasedPauli with_delta_added(int d) const {
        PhasedPauli p = *this;
        p.delta_ = static_cast<std::uint8_t>(((p.delta_ + d) % 4 + 4) % 4);
        return p;
    }

    // Text form "i^d · s_1 s_2 ... s_n" with letters I, X, Z, Y (qubit 1 first).
    // A qubit with both bits set prints as Y; since Y = i X Z the printed
    // exponent is delta minus the number of Y letters (mod 4).
    std::string str() const {
        int y_count = std::popcount(x_ & z_);
        int shown = ((delta_ - y_count) % 4 + 4) % 4;
        std::string out = "i^" + std::to_string(shown) + " \xc2\xb7 ";
        for (int q = 1; q <= n_; ++q) {
            bool xb = (x_ >> (q - 1)) & 1u, zb = (z_ >> (q - 1)) & 1u;
            out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
        }
        return out;
    }

    // Parses the text form produced by str(); "*" is accepted in place of the
    // middle dot and whitespace between letters is ignored.
    static PhasedPauli parse(const std::string& text) {
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        };
        skip_ws();
        if (pos + 2 > text.size() || text[pos] != 'i' || text[pos + 1] != '^')
            throw std::invalid_argument("pauli text must start with \"i^\": " + text);
        pos += 2;
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
            throw std::invalid_argument("missing phase exponent: " + text);
        int delta = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            delta = delta * 10 + (text[pos++] - '0');
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
        } else if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos]) == 0xc2 &&
                   static_cast<unsigned char>(text[pos + 1]) == 0xb7) {
            pos += 2;
        } else {
            throw std::invalid_argument("expected separator after phase: " + text);
        }
        std::uint32_t x = 0, z = 0;
        int n = 0;
        for (; pos < text.size(); ++pos) {
            char c = text[pos];
            if (c == ' ' || c == '\t') continue;
            if (n >= kMaxQubits) throw std::invalid_argument("too many pauli letters: " + text);
            switch (c) {
                case 'I': break;
                case 'X': x |= 1u << n; break;
                case 'Z': z |= 1u << n; break;
                case 'Y':
                    x |= 1u << n;
                    z |= 1u << n;
                    delta += 1;  // Y = i X Z
                    break;
                default:
                    throw std::invalid_argument(std::string("bad pauli letter '") + c + "' in: " + text);
            }
            ++n;
        }
        if (n == 0) throw std::invalid_argument("pauli text has no letters: " + text);
        return PhasedPauli(n, x, z, delta);
    }

    friend bool operator==(const PhasedPauli& a, const PhasedPauli& b) {
        return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_ && a.delta_ == b.delta_;
    }
    friend bool operator!=(const PhasedPauli& a, const PhasedPauli& b) { return !(a == b); }

  private:
    int n_;
    std::uint32_t x_ = 0;
    std::uint32_t z_ = 0;
    std::uint8_t delta_ = 0;
};

// Operator product a*b.  Moving the X factors of b left across the Z factors
// of a contributes (-1)^{|a.z & b.x|} = i^{2 |a.z & b.x|}.
inline PhasedPauli pauli_mul(const PhasedPauli& a, const PhasedPauli& b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("pauli_mul: operand qubit counts differ");
    int delta = a.delta() + b.delta() + 2 * detail::parity(a.z_bits() & b.x_bits());
    return PhasedPauli(a.num_qubits(), a.x_bits() ^ b.x_bits(), a.z_bits() ^ b.z_bits(), delta);
}

// True iff a b = b a, i.e. the symplectic form |a.x & b.z| + |a.z & b.x| is even.
inline bool commutes(const PhasedPauli& a, const PhasedPauli& b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("commutes: operand qubit counts differ");
    return (detail::parity(a.x_bits() & b.z_bits()) ^ detail::parity(a.z_bits() & b.x_bits())) == 0;
}

}  // namespace cliffperm
