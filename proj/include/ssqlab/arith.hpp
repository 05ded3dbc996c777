#pragma once

// Small integer helpers for group orders (trial division is plenty at this scale).

#include <cstdint>
#include <utility>
#include <vector>

namespace ssqlab {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// (prime, exponent) pairs, ascending by prime.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    std::uint64_t q = 1;
    while (n % p == 0) { n /= p; q *= p; }
    return q;
}

inline bool is_prime_power(std::uint64_t n) {
    return n > 1 && factorize(n).size() == 1;
}

} // namespace ssqlab
