#pragma once

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace anc {

using BigInt = boost::multiprecision::cpp_int;

// omega = distinct prime factors, big_omega = prime factors with multiplicity.
struct PrimeSignature {
    std::uint64_t n = 1;
    int omega = 0;
    int big_omega = 0;

    bool squarefree() const { return omega == big_omega; }
};

// Trial division; arguments in this library stay small (<= ~10^4).
inline PrimeSignature prime_signature(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("prime_signature: n must be positive");
    PrimeSignature sig;
    sig.n = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        ++sig.omega;
        while (n % p == 0) {
            n /= p;
            ++sig.big_omega;
        }
    }
    if (n > 1) {
        ++sig.omega;
        ++sig.big_omega;
    }
    return sig;
}

// Moebius function: 0 unless n is squarefree, otherwise (-1)^(number of
// prime factors).
inline int mobius(std::uint64_t n) {
    PrimeSignature sig = prime_signature(n);
    if (!sig.squarefree())
        return 0;
    return sig.omega % 2 == 0 ? 1 : -1;
}

// Z(n): the number of periodic binary words of length n.
// Z(0) = 0 and Z(n) = 2^n - sum_{d|n} mu(n/d) 2^d.
inline BigInt periodic_count(std::uint64_t n) {
    if (n == 0)
        return 0;
    BigInt sum = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        sum += mobius(n / d) * (BigInt(1) << d);
    }
    return (BigInt(1) << n) - sum;
}

// Witt's formula: the number of necklaces (rotation classes of non-periodic
// binary words) of length n, (1/n) sum_{d|n} mu(n/d) 2^d.
inline BigInt necklace_count(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("necklace_count: n must be positive");
    BigInt sum = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        sum += mobius(n / d) * (BigInt(1) << d);
    }
    if (sum % n != 0)
        throw std::logic_error("necklace_count: divisor sum not divisible by n");
    return sum / n;
}

} // namespace anc
