#include "nutkit/graph.hpp"

#include <algorithm>
#include <sstream>

namespace nutkit {

Graph::Graph(int order, std::vector<std::pair<int, int>> edges) : n_(order) {
    if (order < 1 || order > kMaxOrder)
        throw GraphError(GraphError::Kind::BadOrder,
                         "order " + std::to_string(order) + " outside [1," + std::to_string(kMaxOrder) + "]");
    words_ = (order + 63) / 64;
    bits_.assign(static_cast<size_t>(n_) * words_, 0);

    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw GraphError(GraphError::Kind::LabelOutOfRange,
                             "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                                 std::to_string(n_ - 1));
        if (u == v)
            throw GraphError(GraphError::Kind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw GraphError(GraphError::Kind::DuplicateEdge,
                             "duplicate edge (" + std::to_string(edges[i].first) + "," +
                                 std::to_string(edges[i].second) + ")");
    edges_ = std::move(edges);

    for (auto [u, v] : edges_) {
        bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
        bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
    }
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
    return d;
}

bool Graph::is_regular(int rho) const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != rho) return false;
    return true;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        uint64_t bits = r[w];
        while (bits) {
            int b = __builtin_ctzll(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

bool Graph::connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n_;
}

Graph parse_graph6(std::string_view text) {
    if (text.empty())
        throw GraphError(GraphError::Kind::BadFormat, "empty graph6 string");
    for (char c : text)
        if (static_cast<unsigned char>(c) < 0x3F || static_cast<unsigned char>(c) > 0x7E)
            throw GraphError(GraphError::Kind::BadFormat, "character outside graph6 range 0x3F-0x7E");

    size_t pos = 0;
    long long n;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else if (text.size() >= 4 && text[1] != '~') {
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - 63);
        pos = 4;
    } else if (text.size() >= 8 && text[1] == '~') {
        n = 0;
        for (size_t i = 2; i <= 7; ++i) n = (n << 6) | (text[i] - 63);
        pos = 8;
    } else {
        throw GraphError(GraphError::Kind::BadFormat, "truncated graph6 header");
    }
    if (n < 1 || n > Graph::kMaxOrder)
        throw GraphError(GraphError::Kind::BadFormat,
                         "graph6 order " + std::to_string(n) + " outside supported range 1.." +
                             std::to_string(Graph::kMaxOrder));

    long long bits_needed = n * (n - 1) / 2;
    long long chars_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) < chars_needed)
        throw GraphError(GraphError::Kind::BadFormat, "graph6 body shorter than the header promises");
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) > chars_needed)
        throw GraphError(GraphError::Kind::BadFormat, "trailing garbage after graph6 body");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int i = 0, j = 1;
    for (long long c = 0; c < chars_needed; ++c) {
        int val = text[pos + c] - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit >= bits_needed) {
                if ((val >> b) & 1)
                    throw GraphError(GraphError::Kind::BadFormat, "nonzero padding bits in graph6 body");
                continue;
            }
            if ((val >> b) & 1) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    long long bits_needed = static_cast<long long>(n) * (n - 1) / 2;
    int val = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            val = (val << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(val + 63));
                val = 0;
                filled = 0;
            }
        }
    }
    if (bits_needed % 6) {
        val <<= 6 - bits_needed % 6;
        out.push_back(static_cast<char>(val + 63));
    }
    return out;
}

std::string write_dot(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace nutkit
