#pragma once

// Arithmetic in the prime field F_p.  p is small (2 by default, always < 2^15),
// so products fit comfortably in 64 bits and inverses go through Fermat.

#include <cstdint>
#include <stdexcept>

namespace torsmut {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline bool is_prime(u32 n) {
    if (n < 2) return false;
    for (u32 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline u32 fp_add(u32 a, u32 b, u32 p) { return (a + b) % p; }
inline u32 fp_sub(u32 a, u32 b, u32 p) { return (a + p - b % p) % p; }
inline u32 fp_neg(u32 a, u32 p) { return (p - a % p) % p; }
inline u32 fp_mul(u32 a, u32 b, u32 p) {
    return static_cast<u32>((static_cast<u64>(a) * b) % p);
}

inline u32 fp_pow(u32 a, u64 e, u32 p) {
    u64 base = a % p, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<u32>(acc);
}

inline u32 fp_inv(u32 a, u32 p) {
    a %= p;
    if (a == 0) throw std::domain_error("fp_inv: zero has no inverse");
    return fp_pow(a, p - 2, p);  // p prime
}

} // namespace torsmut
