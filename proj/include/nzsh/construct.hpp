#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nzsh/feasibility.hpp"
#include "nzsh/orderings.hpp"
#include "nzsh/tiles.hpp"

namespace nzsh {

struct BuildRequest {
    GroupPtr group;
    Subgroup j;
    Params params;
    uint64_t seed = 0;
};

struct BuildResult {
    enum class Outcome { Built, Infeasible, Open };
    Outcome outcome = Outcome::Open;
    std::string tag;    // regime tag when built, reason otherwise
    std::optional<PFArray> array;
    VerifyReport report;
    uint64_t seed = 0;
    std::optional<TilePlan> plan; // populated by the tiling path
};

// Direct constructions. Each throws RegimeViolation outside its regime and
// returns an array that verify_array accepts.
PFArray construct_z2_all_ones(const BuildRequest& req);
PFArray construct_one_row(const BuildRequest& req);
PFArray construct_v3(const BuildRequest& req);
PFArray construct_square_odd_abelian(const BuildRequest& req);
PFArray construct_h1(const BuildRequest& req);
PFArray construct_nk2(const BuildRequest& req);
PFArray assemble_by_tiling(const BuildRequest& req, TilePlan* plan_out = nullptr);

// Targets for the next tile: 0 for lines fully inside it with no prior
// content, minus the ordered outside sum for lines it completes, nothing for
// lines that stay open.
FillRequest forbidden_targets(const PFArray& partial, const CellSet& skeleton, const Tile& tile,
                              std::vector<Elem> s_list);

// Feasibility gate, regime dispatch, bounded global search fallback.
// Deterministic for a fixed (request, seed).
BuildResult construct(const BuildRequest& req);

} // namespace nzsh
