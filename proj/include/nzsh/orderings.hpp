#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nzsh/group.hpp"

namespace nzsh {

struct OrderingFlags {
    bool plusminus_split = false;  // first half's negatives fill the second half
    bool adjacent_nonzero = false; // g_i + g_{i+1} != 0 cyclically
};

struct OrderedComplement {
    std::vector<Elem> sequence; // permutation of G\J
    OrderingFlags flags;        // which properties the sequence certifies
};

// Deterministic backtracking over ascending element index, first fit. An
// optional forced prefix pins the leading entries (the one-row construction
// needs g1, g2 to be a specific pair). Throws Unsatisfiable when no ordering
// with the requested flags exists.
OrderedComplement ordered_complement(const FiniteGroup& g, const Subgroup& j, OrderingFlags flags,
                                     std::span<const Elem> forced_prefix = {});

struct Omega {
    std::vector<Elem> layout;   // ordered: lambda/2 cycles, or (lambda-1)/2 cycles + half list
    int64_t lambda = 0;
    std::vector<Elem> half_set; // {g_1..g_{(v-t)/2}} when lambda is odd, else empty
};

// The element supply consumed by the tiling construction. For even lambda it
// is (G\J)^{lambda/2}; for odd lambda (G\J)^{(lambda-1)/2} plus the half set
// of a plus/minus split ordering. Asserts +-Omega = (G\J)^lambda.
// Throws OddLambdaWithInvolution when lambda is odd but G\J has involutions.
Omega omega(const FiniteGroup& g, const Subgroup& j, int64_t lambda, const OrderedComplement& ordering);

// Consecutive slices of the layout, sizes[i] cells each; every slice is
// repeat-free provided max size <= v-t. Throws SizeMismatch.
std::vector<std::vector<Elem>> slice_lists(const std::vector<Elem>& layout,
                                           const std::vector<int>& sizes);

// True iff the +- closure of the multiset equals (G\J)^lambda.
bool covers_complement(const FiniteGroup& g, const Subgroup& j, int64_t lambda,
                       const std::vector<Elem>& multiset);

} // namespace nzsh
