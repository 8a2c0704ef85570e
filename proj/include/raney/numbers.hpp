#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace raney {

// Arbitrary-precision integer.  Every counting operation in this library
// returns an ExactNat and is exact: values routinely exceed 64 bits, and no
// floating-point or modular shortcut is taken anywhere.
using ExactNat = boost::multiprecision::cpp_int;

// Binomial coefficient C(n, k).  Returns 0 for k < 0 or k > n.
ExactNat binomial(std::uint64_t n, std::int64_t k);

// Raney number R_{p,r}(n) = r/(np+r) * C(np+r, n) for p, r >= 1.
// Computed as r * C(np+r, n) followed by an exact division by (np+r);
// a nonzero remainder is an internal arithmetic bug and throws.
// R_{p,r}(0) = 1.
ExactNat raney_closed(std::uint32_t p, std::uint32_t r, std::uint32_t n);

// Second closed form r/k * C(pk+r-1, k-1), defined for k >= 1 only.
// Agrees with raney_closed(p, r, k) everywhere it is defined.
ExactNat raney_closed_alt(std::uint32_t p, std::uint32_t r, std::uint32_t k);

// k-th p-Catalan number (1/k) * C(pk, k-1), with value 1 at k = 0.
// Counts full p-ary plane trees with k internal vertices and equals
// raney_closed(p, 1, k).
ExactNat p_catalan(std::uint32_t p, std::uint32_t k);

// Sum over all strong compositions (a_1,...,a_j) of k of
//   C(r, a_1) * C(p*a_1, a_2) * ... * C(p*a_{j-1}, a_j).
// The empty composition contributes 1 at k = 0.
ExactNat raney_composition_sum(std::uint32_t p, std::uint32_t r, std::uint32_t k);

// r-fold convolution of the p-Catalan sequence: the sum over all length-r
// weak compositions (i_1,...,i_r) of k of the products pc_{i_1}*...*pc_{i_r}.
ExactNat raney_convolution(std::uint32_t p, std::uint32_t r, std::uint32_t k);

// Ordered sequence of positive integers with a fixed sum.
struct Composition {
    std::vector<std::uint32_t> parts;

    std::uint32_t total() const;
    bool operator==(const Composition&) const = default;
};

// Ordered sequence of exactly r nonnegative integers with a fixed sum.
struct WeakComposition {
    std::vector<std::uint32_t> parts;

    std::uint32_t total() const;
    bool operator==(const WeakComposition&) const = default;
};

// All strong compositions of k, lexicographically ordered by parts.
// k = 0 yields exactly the empty composition.
std::vector<Composition> compositions(std::uint32_t k);

// All length-r weak compositions of k (r >= 1), lexicographically ordered.
std::vector<WeakComposition> weak_compositions(std::uint32_t k, std::uint32_t r);

}  // namespace raney
