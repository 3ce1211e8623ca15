#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nzsh/pfarray.hpp"

namespace nzsh {

struct Feasibility {
    enum class Kind { Infeasible, Open, FeasibleBy };
    Kind kind = Kind::Open;
    std::string detail; // reason when infeasible, regime tag when feasible
};

// One row of the dispatch table. Regimes are tried in order; the first whose
// predicate holds names the construction that is guaranteed to succeed.
struct Regime {
    std::string tag;
    std::string description;
    bool (*applies)(const FiniteGroup& g, const Subgroup& j, const Params& p);
};

const std::vector<Regime>& regime_table();

// nullopt when the necessary counting conditions hold, else the reason they
// fail. Includes the sharper single-row conditions for elementary 2-groups.
std::optional<std::string> necessary_failure(const FiniteGroup& g, const Subgroup& j, const Params& p);

Feasibility feasibility(const FiniteGroup& g, const Subgroup& j, const Params& p);

// nk / lcm(m,n); every valid parameter set makes this an integer
int coset_ratio(const Params& p);

bool complement_has_involution(const FiniteGroup& g, const Subgroup& j);

// abelian with every non-identity element an involution
bool is_elementary_two_group(const FiniteGroup& g);

} // namespace nzsh
