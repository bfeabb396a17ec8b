#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nutkit/graph.hpp"
#include "nutkit/kernel.hpp"

namespace nutkit {

/// A named seed graph with its expected classification. The graph6 string is
/// stored alongside for bit-exact regression.
struct SeedEntry {
    std::string name;
    Graph graph;
    GraphClassTag expected_class;
    int expected_order;
    std::optional<int> expected_degree;
    std::string graph6;
};

/// Lookup by name; throws std::invalid_argument for unknown names.
const SeedEntry& seed(std::string_view name);

/// The 14 seeds in a fixed order.
const std::vector<SeedEntry>& all_seeds();

}  // namespace nutkit
