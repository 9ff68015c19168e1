#pragma once

#include <stdexcept>
#include <vector>

#include "anc/counting.hpp"

namespace anc {

// Skeleton of an automaton that is a chain, a single cycle, and another
// chain: head_length states before the cycle, tail_length after it. The bit
// entering the cycle and the bit closing it must differ in an optimal
// automaton; fixing them is what halves the head and tail factors in the
// limit formulas.
struct OneCycleShape {
    int head_length = 0;  // i
    int cycle_length = 1; // q - (i + l)
    int tail_length = 0;  // l
    int entry_bit = 0;    // advances the automaton into the cycle
    int closing_bit = 1;  // completes the cycle

    int states() const { return head_length + cycle_length + tail_length; }
    bool valid() const {
        return head_length >= 0 && tail_length >= 0 && cycle_length >= 1 &&
               entry_bit != closing_bit;
    }
};

// All head/tail splits of a q-state one-cycle automaton.
inline std::vector<OneCycleShape> one_cycle_shapes(int q) {
    if (q < 1)
        throw std::invalid_argument("one_cycle_shapes: q must be positive");
    std::vector<OneCycleShape> shapes;
    for (int i = 0; i < q; ++i)
        for (int l = 0; i + l < q; ++l)
            shapes.push_back({i, q - (i + l), l, 0, 1});
    return shapes;
}

// Limiting number of binary words of complexity q (both leading bits):
//   sum over i,l >= 0 with i+l < q of
//     2^((i-1)^+) * (2^(q-(i+l)) - Z(q-(i+l))) * 2^((l-1)^+)
// where i and l count the states before and after the single cycle.
inline BigInt limit_s(int q) {
    if (q < 1)
        throw std::invalid_argument("limit_s: q must be positive");
    auto pos = [](int v) { return v > 0 ? v : 0; };
    BigInt total = 0;
    for (const OneCycleShape& shape : one_cycle_shapes(q)) {
        BigInt cycle_words =
            (BigInt(1) << shape.cycle_length) - periodic_count(shape.cycle_length);
        total += (BigInt(1) << pos(shape.head_length - 1)) * cycle_words
                 << pos(shape.tail_length - 1);
    }
    return total;
}

// Readings of the head exponent in the right-inextendible limit sum; the
// stated formula leaves the symbol open, so the choice is a parameter.
// HeadLength reproduces the observed tails (r_3 -> 8, r_4 -> 28).
enum class HeadExponent { HeadLength, TailLength, HeadPlusTail };

// Limiting number of right-inextendible words of complexity q; the tail must
// be nonempty (l > 0) since a word accepted inside the cycle extends freely.
// Treat the value as provisional: the empirical census tail is the ground
// truth.
inline BigInt limit_r(int q, HeadExponent head = HeadExponent::HeadLength) {
    if (q < 1)
        throw std::invalid_argument("limit_r: q must be positive");
    auto pos = [](int v) { return v > 0 ? v : 0; };
    BigInt total = 0;
    for (const OneCycleShape& shape : one_cycle_shapes(q)) {
        if (shape.tail_length == 0)
            continue;
        int a = 0;
        switch (head) {
        case HeadExponent::HeadLength: a = shape.head_length; break;
        case HeadExponent::TailLength: a = shape.tail_length; break;
        case HeadExponent::HeadPlusTail:
            a = shape.head_length + shape.tail_length;
            break;
        }
        BigInt cycle_words =
            (BigInt(1) << shape.cycle_length) - periodic_count(shape.cycle_length);
        total += (BigInt(1) << pos(a - 1)) * cycle_words
                 << (shape.tail_length - 1);
    }
    return total;
}

// Eventual upper bound on s_q(n): 2^(q-2) * (q(q+5)/2 + 1).
inline BigInt bound_372(int q) {
    if (q < 2)
        throw std::invalid_argument("bound_372: q must be at least 2");
    BigInt inner = BigInt(q) * (q + 5) / 2 + 1;
    return (BigInt(1) << (q - 2)) * inner;
}

} // namespace anc
