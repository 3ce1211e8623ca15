#pragma once

#include <string>

#include <json.hpp>

#include "nzsh/construct.hpp"
#include "nzsh/topology.hpp"

namespace nzsh {

// {"group": "z:7", "m":.., "n":.., "lambda":.., "subgroup":[..],
//  "cells":[{"r":..,"c":..,"v":..}, ...]}  cells in row-major order
nlohmann::json array_to_json(const PFArray& a, const Subgroup& j, int64_t lambda);

struct LoadedArray {
    GroupPtr group;
    Subgroup j;
    Params params; // h, k inferred from the most common line counts
    PFArray array;
};

LoadedArray array_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const VerifyReport& rep);
nlohmann::json plan_to_json(const TilePlan& plan);
nlohmann::json orientation_to_json(const Orientation& o);
nlohmann::json embedding_to_json(const Embedding& e, const EmbeddingReport& rep);
nlohmann::json regimes_to_json();

// grid CSV, one line per row, element indices, empty cells blank
std::string grid_csv(const PFArray& a);

} // namespace nzsh
