#include "nutkit/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace nutkit {

namespace {

// Disjoint-set over vertex labels.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

struct Search {
    const Graph& g;
    int n;
    long long total_bits;
    size_t code_words;

    bool have_first = false;
    std::vector<uint64_t> first_code, best_code;
    std::vector<int> first_order, best_order;
    std::vector<std::vector<int>> gens;
    std::vector<int> fixed_path;

    explicit Search(const Graph& graph) : g(graph), n(graph.order()) {
        total_bits = static_cast<long long>(n) * (n - 1) / 2;
        code_words = static_cast<size_t>((total_bits + 63) / 64);
    }

    // Equitable refinement by iterated signature re-sort. `order` holds the
    // vertices in partition order; `cell_start[p]` is the start position of
    // the cell containing position p.
    static void refine(const Graph& g, std::vector<int>& order, std::vector<int>& cell_start) {
        const int n = g.order();
        std::vector<int> cell_of(n);       // vertex -> dense cell index
        std::vector<int> starts;           // start position per dense cell index
        std::vector<std::pair<std::vector<int>, int>> keyed;
        for (;;) {
            starts.clear();
            for (int p = 0; p < n; ++p)
                if (cell_start[p] == p) starts.push_back(p);
            const int ncells = static_cast<int>(starts.size());
            if (ncells == n) return;
            for (int c = 0; c < ncells; ++c) {
                int s = starts[c];
                int e = (c + 1 < ncells) ? starts[c + 1] : n;
                for (int p = s; p < e; ++p) cell_of[order[p]] = c;
            }
            bool changed = false;
            for (int c = 0; c < ncells; ++c) {
                int s = starts[c];
                int e = (c + 1 < ncells) ? starts[c + 1] : n;
                if (e - s < 2) continue;
                keyed.clear();
                for (int p = s; p < e; ++p) {
                    int v = order[p];
                    std::vector<int> sig(ncells, 0);
                    const uint64_t* r = g.row(v);
                    for (int w = 0; w < g.words(); ++w) {
                        uint64_t bits = r[w];
                        while (bits) {
                            int u = w * 64 + __builtin_ctzll(bits);
                            bits &= bits - 1;
                            ++sig[cell_of[u]];
                        }
                    }
                    keyed.emplace_back(std::move(sig), v);
                }
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                bool splits = false;
                for (size_t k = 1; k < keyed.size(); ++k)
                    if (keyed[k].first != keyed[k - 1].first) splits = true;
                if (!splits) continue;
                changed = true;
                for (int p = s; p < e; ++p) {
                    order[p] = keyed[p - s].second;
                    cell_start[p] = (p == s || keyed[p - s].first != keyed[p - s - 1].first) ? p : cell_start[p - 1];
                }
            }
            if (!changed) return;
        }
    }

    int singleton_prefix(const std::vector<int>& cell_start) const {
        int p = 0;
        while (p < n) {
            int s = cell_start[p];
            int e = p + 1;
            while (e < n && cell_start[e] == s) ++e;
            if (e - s > 1) break;
            p = e;
        }
        return p;
    }

    // Column-major upper-triangle bits over the first `p` positions, packed
    // MSB-first so word comparison is lexicographic bit comparison.
    std::vector<uint64_t> partial_code(const std::vector<int>& order, int p) const {
        long long bits = static_cast<long long>(p) * (p - 1) / 2;
        std::vector<uint64_t> code((bits + 63) / 64, 0);
        long long t = 0;
        for (int j = 1; j < p; ++j) {
            int vj = order[j];
            for (int i = 0; i < j; ++i, ++t)
                if (g.adjacent(order[i], vj)) code[t >> 6] |= uint64_t{1} << (63 - (t & 63));
        }
        return code;
    }

    // Lexicographic comparison of `code` (holding `bits` valid bits) against
    // the same leading bits of `ref` (a full-length code).
    static int compare_prefix(const std::vector<uint64_t>& code, long long bits, const std::vector<uint64_t>& ref) {
        size_t full = static_cast<size_t>(bits / 64);
        for (size_t w = 0; w < full; ++w) {
            if (code[w] != ref[w]) return code[w] < ref[w] ? -1 : 1;
        }
        int rem = static_cast<int>(bits % 64);
        if (rem) {
            uint64_t mask = ~uint64_t{0} << (64 - rem);
            uint64_t a = code[full] & mask;
            uint64_t b = ref[full] & mask;
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }

    void record_automorphism(const std::vector<int>& ref_order, const std::vector<int>& leaf_order) {
        std::vector<int> sigma(n);
        bool identity = true;
        for (int p = 0; p < n; ++p) {
            sigma[ref_order[p]] = leaf_order[p];
            if (ref_order[p] != leaf_order[p]) identity = false;
        }
        if (identity) return;
        for (auto [u, v] : g.edges())
            if (!g.adjacent(sigma[u], sigma[v]))
                throw std::logic_error("canonical search produced a non-automorphism");
        for (const auto& existing : gens)
            if (existing == sigma) return;
        if (gens.size() >= 4096)
            throw std::logic_error("automorphism generator cap exceeded");
        gens.push_back(std::move(sigma));
    }

    void run(std::vector<int>& order, std::vector<int>& cell_start) {
        refine(g, order, cell_start);
        int p = singleton_prefix(cell_start);
        long long pbits = static_cast<long long>(p) * (p - 1) / 2;
        std::vector<uint64_t> partial = partial_code(order, p);

        if (have_first) {
            int vs_best = compare_prefix(partial, pbits, best_code);
            int vs_first = compare_prefix(partial, pbits, first_code);
            if (vs_best > 0 && vs_first != 0) return;
        }

        if (p == n) {
            if (!have_first) {
                have_first = true;
                partial.resize(code_words, 0);
                first_code = partial;
                best_code = std::move(partial);
                first_order = order;
                best_order = order;
                return;
            }
            partial.resize(code_words, 0);
            if (partial == first_code) record_automorphism(first_order, order);
            if (partial == best_code) {
                if (best_order != first_order) record_automorphism(best_order, order);
            } else if (compare_prefix(partial, total_bits, best_code) < 0) {
                best_code = std::move(partial);
                best_order = order;
            }
            return;
        }

        // first non-singleton cell sits at position p
        int s = cell_start[p] == p ? p : cell_start[p];
        int e = s + 1;
        while (e < n && cell_start[e] == s) ++e;
        std::vector<int> candidates(order.begin() + s, order.begin() + e);
        std::sort(candidates.begin(), candidates.end());

        std::vector<int> tried;
        for (int v : candidates) {
            // orbit pruning: skip v if a prefix-fixing known automorphism maps
            // it into an already-explored candidate
            if (!tried.empty() && !gens.empty()) {
                UnionFind uf(n);
                for (const auto& sigma : gens) {
                    bool fixes = true;
                    for (int w : fixed_path)
                        if (sigma[w] != w) {
                            fixes = false;
                            break;
                        }
                    if (!fixes) continue;
                    for (int x = 0; x < n; ++x) uf.unite(x, sigma[x]);
                }
                bool skip = false;
                for (int u : tried)
                    if (uf.find(u) == uf.find(v)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            tried.push_back(v);

            std::vector<int> child_order = order;
            std::vector<int> child_start = cell_start;
            // individualize: move v to the front of its cell as a singleton
            auto it = std::find(child_order.begin() + s, child_order.begin() + e, v);
            std::rotate(child_order.begin() + s, it, it + 1);
            child_start[s] = s;
            for (int q = s + 1; q < e; ++q) child_start[q] = s + 1;

            fixed_path.push_back(v);
            run(child_order, child_start);
            fixed_path.pop_back();
        }
    }
};

}  // namespace

CanonicalResult canonical_analyze(const Graph& g, const std::vector<int>& colors) {
    const int n = g.order();
    if (!colors.empty() && static_cast<int>(colors.size()) != n)
        throw std::invalid_argument("color vector size must equal graph order");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (!colors.empty())
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });

    std::vector<int> cell_start(n, 0);
    for (int p = 1; p < n; ++p) {
        bool same = colors.empty() || colors[order[p]] == colors[order[p - 1]];
        cell_start[p] = same ? cell_start[p - 1] : p;
    }

    Search search(g);
    search.run(order, cell_start);

    CanonicalResult result;
    result.canonical_order = search.best_order;
    result.labelling.assign(n, 0);
    for (int p = 0; p < n; ++p) result.labelling[search.best_order[p]] = p;
    result.generators = std::move(search.gens);

    std::string bytes;
    bytes.reserve(4 + search.best_code.size() * 8);
    for (int s = 24; s >= 0; s -= 8) bytes.push_back(static_cast<char>((n >> s) & 0xFF));
    long long nbytes = (search.total_bits + 7) / 8;
    for (long long b = 0; b < nbytes; ++b) {
        uint64_t word = search.best_code[b / 8];
        bytes.push_back(static_cast<char>((word >> (56 - 8 * (b % 8))) & 0xFF));
    }
    result.form.bytes = std::move(bytes);
    return result;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_analyze(g).form; }

std::vector<int> vertex_orbit_reps(int n, const std::vector<std::vector<int>>& generators) {
    UnionFind uf(n);
    for (const auto& sigma : generators)
        for (int v = 0; v < n; ++v) uf.unite(v, sigma[v]);
    std::vector<int> rep(n);
    for (int v = 0; v < n; ++v) rep[v] = uf.find(v);
    return rep;
}

}  // namespace nutkit
