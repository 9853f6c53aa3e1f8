#pragma once

// Exact order formulas, evaluated with arbitrary-precision integers.
//
//   |C_n|  = 2^(n^2+2n) * prod_{i=1..n} (2^(2i) - 1)     full group
//   |IN_n| = 2^(n^2+2n) * prod_{i=1..n-1} (2^(2i) - 1)   inertia subgroup
//   |F_n|  = |IN_n| / 2                                  phase-gate centralizer
//   |P_n|  = 4^n                                         projective Paulis
//   |V_n|  = 2 (4^n - 1)                                 class of the phase gate

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace cliffperm {

using bigint = boost::multiprecision::cpp_int;

namespace detail {
inline void require_order_arg(int n) {
    if (n < 0) throw std::invalid_argument("order formulas need n >= 0");
}
}  // namespace detail

inline bigint pow2(int e) { return bigint(1) << e; }

inline bigint order_Cn(int n) {
    detail::require_order_arg(n);
    bigint v = pow2(n * n + 2 * n);
    for (int i = 1; i <= n; ++i) v *= pow2(2 * i) - 1;
    return v;
}

inline bigint order_INn(int n) {
    detail::require_order_arg(n);
    bigint v = pow2(n * n + 2 * n);
    for (int i = 1; i <= n - 1; ++i) v *= pow2(2 * i) - 1;
    return v;
}

inline bigint order_Fn(int n) { return order_INn(n) / 2; }

inline bigint order_Pn(int n) {
    detail::require_order_arg(n);
    return pow2(2 * n);
}

inline bigint class_size_s(int n) {
    detail::require_order_arg(n);
    return 2 * (pow2(2 * n) - 1);
}

inline bigint class_size_z(int n) {
    detail::require_order_arg(n);
    return pow2(2 * n) - 1;
}

// Number of normal-form parameter tuples, prod_{k=1..n} 2(4^k-1) 4^k; equal to
// |C_n| (the counting identity behind the order formula).
inline bigint normal_form_count(int n) {
    detail::require_order_arg(n);
    bigint v = 1;
    for (int k = 1; k <= n; ++k) v *= class_size_s(k) * pow2(2 * k);
    return v;
}

}  // namespace cliffperm
