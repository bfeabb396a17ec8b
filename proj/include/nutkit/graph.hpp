#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nutkit {

/// Thrown when graph construction or graph6 decoding rejects its input.
/// Each rejection reason carries a distinct kind.
class GraphError : public std::runtime_error {
public:
    enum class Kind {
        BadOrder,          // order < 1 or above the supported cap
        LabelOutOfRange,   // endpoint label >= order
        SelfLoop,
        DuplicateEdge,
        BadFormat,         // malformed graph6 text
    };

    GraphError(Kind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Simple undirected labelled graph on vertices {0,...,n-1}.
/// Immutable after construction; edges are stored sorted and a bitset
/// adjacency backs O(1) queries.
class Graph {
public:
    static constexpr int kMaxOrder = 10000;

    Graph(int order, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
    }

    int degree(int v) const;
    bool is_regular(int rho) const;
    std::vector<int> neighbors(int v) const;  // ascending labels
    bool connected() const;

    // Raw bitset row; words() 64-bit words per row.
    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
    int words() const { return words_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw GraphError(GraphError::Kind::LabelOutOfRange,
                             "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }

    int n_;
    int words_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<uint64_t> bits_;
};

/// graph6 decoding per the standard format: N(n) header, then the upper
/// triangle read column-major, packed into 6-bit printable characters.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// DOT text for debug visualization; write-only by design.
std::string write_dot(const Graph& g, const std::string& name = "g");

}  // namespace nutkit
