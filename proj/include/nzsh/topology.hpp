#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nzsh/pfarray.hpp"

namespace nzsh {

struct Orientation {
    std::vector<int8_t> rows; // +1 left-to-right, -1 right-to-left
    std::vector<int8_t> cols; // +1 top-to-bottom, -1 bottom-to-top
};

struct KnightSequence {
    std::vector<Cell> cells; // visited cells until the start repeats
    bool closed = false;
    bool covers_all = false;
};

// Alternating next-filled-in-row / next-filled-in-column walk from `start`.
// The step map is a permutation of the skeleton, so coverage is a property
// of the orientation alone.
KnightSequence knight_sequence(const PFArray& a, const Orientation& ori, Cell start);

// Exhaustive search over row/column orientations with the first row pinned
// to +1 (global reversal preserves coverage); returns the lexicographically
// first solution, nullopt if none exists. Throws SearchTooLarge when
// m + n - 1 exceeds `exhaustive_limit` bits.
std::optional<Orientation> solve_knight_serial(const PFArray& a, int exhaustive_limit = 30);

// Same contract and same answer, OpenMP-parallel over the orientation space.
std::optional<Orientation> solve_knight(const PFArray& a, int exhaustive_limit = 30);

// Seeded random orientations for arrays too large for exhaustion.
std::optional<Orientation> solve_knight_randomized(const PFArray& a, uint64_t seed, int attempts);

// Number of solving orientations with the first row pinned; full scan of the
// orientation space, serial reference and OpenMP kernel.
uint64_t count_knight_solutions_serial(const PFArray& a, int exhaustive_limit = 30);
uint64_t count_knight_solutions(const PFArray& a, int exhaustive_limit = 30);

struct CompatiblePair {
    std::vector<Cell> cells;    // index order: row-major skeleton
    std::vector<int> omega_r;   // cell index -> next cell in its row's cyclic order
    std::vector<int> omega_c;   // cell index -> next cell in its column's cyclic order
};

// True iff omega_c(omega_r(.)) is one cycle through every filled cell.
bool is_compatible(const CompatiblePair& pair);

// Derives a pair from a knight solution; when no orientation solves, falls
// back to seeded random per-line cyclic orders within `budget` attempts.
std::optional<CompatiblePair> compatible_orderings(const PFArray& a, uint64_t seed = 0, int budget = 2000);

struct Embedding {
    GroupPtr group;
    Subgroup j;
    int q = 0; // parts of the multipartite multigraph
    int t = 1;
    int64_t vertices = 0;
    int64_t edges = 0; // undirected, with multiplicity
    std::vector<std::vector<Elem>> row_faces; // closed vertex walks (wrap implicit)
    std::vector<std::vector<Elem>> col_faces;
    int64_t genus = 0;
};

// Face-traced biembedding of the lambda-fold complete multipartite multigraph
// whose parts are the cosets of J. Row faces walk forward, column faces
// traverse the reversed directed edges. Requires an abelian group and a
// verified array; throws InvariantViolation when any structural check fails.
Embedding build_biembedding(const PFArray& a, const Subgroup& j, const Params& p, const CompatiblePair& pair);

struct EmbeddingReport {
    std::map<int64_t, int64_t> row_face_lengths; // length -> count
    std::map<int64_t, int64_t> col_face_lengths;
    int64_t genus = 0;
    int q = 0;
    int t = 1;
    bool row_lengths_ok = false; // multiples of h, strictly larger
    bool col_lengths_ok = false;
};

EmbeddingReport embedding_report(const Embedding& e, const Params& p);

} // namespace nzsh
