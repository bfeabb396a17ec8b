#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "nutkit/graph.hpp"
#include "nutkit/kernel.hpp"

namespace nutkit {

/// Census over one isomorph-free generation run. Class totals always sum to
/// the number of graphs examined.
struct CensusReport {
    int order = 0;
    std::string constraint;  // "all" or "connected <rho>-regular"
    long long examined = 0;
    std::array<long long, 4> class_totals{};  // indexed by GraphClassTag
    double elapsed_seconds = 0.0;

    long long nuts() const { return class_totals[static_cast<int>(GraphClassTag::Nut)]; }
};

/// Deterministic text form; elapsed time is intentionally omitted.
std::string to_text(const CensusReport& report);

/// One representative per isomorphism class of simple graphs on n vertices
/// (disconnected included), by canonical construction path on edge
/// augmentation. Practical bound n <= 9.
void enumerate_all(int n, const std::function<void(const Graph&)>& emit);

/// One representative per isomorphism class of connected rho-regular graphs
/// on n vertices, by canonical construction path on vertex augmentation with
/// degree pruning. Practical bounds: rho=3 up to n=16, rho=4 up to n=15,
/// rho<=2 up to n=64.
void enumerate_regular(int rho, int n, const std::function<void(const Graph&)>& emit);

/// Generate + classify. `jobs` splits the generation tree at a fixed depth
/// into independent subtasks whose tallies merge by summation; any jobs value
/// produces identical reports and identical nut streams. When `nut_graph6` is
/// non-null every nut graph found is appended as graph6.
///
/// The order-1 census corner: the trivial graph K1 satisfies the literal nut
/// definitions (classify reports Nut) but the census follows the convention
/// that a nut graph has at least two vertices and tallies it as CoreNonNut.
CensusReport census_all(int n, int jobs = 1, std::vector<std::string>* nut_graph6 = nullptr);
CensusReport census_regular(int rho, int n, int jobs = 1, std::vector<std::string>* nut_graph6 = nullptr);

}  // namespace nutkit
