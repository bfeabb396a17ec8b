#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nutkit/graph.hpp"

namespace nutkit {

/// Total-order key: two graphs have equal keys iff they are isomorphic.
/// Bytes are the order followed by the lexicographically minimal adjacency
/// encoding over the discrete refinements reached by the search.
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

/// Full result of the canonical search: the form, one labelling achieving it,
/// and a generating set of the automorphism group discovered along the way.
struct CanonicalResult {
    CanonicalForm form;
    std::vector<int> canonical_order;               // position -> vertex
    std::vector<int> labelling;                     // vertex -> position
    std::vector<std::vector<int>> generators;       // automorphisms, vertex -> vertex
};

/// Refinement + backtracking canonical labelling. `colors` (optional) is an
/// initial vertex coloring; cells start ordered by ascending color, so two
/// colored graphs get equal forms iff a color-preserving isomorphism exists.
CanonicalResult canonical_analyze(const Graph& g, const std::vector<int>& colors = {});

CanonicalForm canonical_form(const Graph& g);

/// Orbit representative (smallest label in orbit) per vertex under the group
/// generated by `generators`.
std::vector<int> vertex_orbit_reps(int n, const std::vector<std::vector<int>>& generators);

}  // namespace nutkit
