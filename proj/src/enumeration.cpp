#include "nutkit/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nutkit/canonical.hpp"

namespace nutkit {

namespace {

using Gens = std::vector<std::vector<int>>;

uint64_t apply_to_mask(const std::vector<int>& sigma, uint64_t mask) {
    uint64_t out = 0;
    while (mask) {
        int v = __builtin_ctzll(mask);
        mask &= mask - 1;
        out |= uint64_t{1} << sigma[v];
    }
    return out;
}

// Smallest bitmask in the orbit of `mask` under the group.
uint64_t orbit_min_mask(uint64_t mask, const Gens& gens, std::vector<uint64_t>& scratch) {
    if (gens.empty()) return mask;
    scratch.clear();
    scratch.push_back(mask);
    uint64_t best = mask;
    for (size_t head = 0; head < scratch.size(); ++head) {
        for (const auto& sigma : gens) {
            uint64_t img = apply_to_mask(sigma, scratch[head]);
            if (img < best) best = img;
            if (std::find(scratch.begin(), scratch.end(), img) == scratch.end()) scratch.push_back(img);
        }
    }
    return best;
}

bool same_subset_orbit(uint64_t a, uint64_t b, const Gens& gens, std::vector<uint64_t>& scratch) {
    if (a == b) return true;
    if (gens.empty()) return false;
    scratch.clear();
    scratch.push_back(a);
    for (size_t head = 0; head < scratch.size(); ++head) {
        for (const auto& sigma : gens) {
            uint64_t img = apply_to_mask(sigma, scratch[head]);
            if (img == b) return true;
            if (std::find(scratch.begin(), scratch.end(), img) == scratch.end()) scratch.push_back(img);
        }
    }
    return false;
}

// ---- canonical construction path on edge augmentation (all graphs) --------

struct AllGraphsGenerator {
    int n = 0;
    std::function<void(const Graph&, const Gens&)> visit;
    // when set, states with exactly `frontier_edges` edges are handed to
    // `on_frontier` unexpanded instead of being visited
    int frontier_edges = -1;
    std::function<void(const Graph&, const Gens&)> on_frontier;

    // The edge occupying the largest slot of the canonical encoding, pulled
    // back through the canonical labelling; well-defined up to Aut.
    static std::pair<int, int> canonical_deletion(const Graph& g, const CanonicalResult& res) {
        const int order = g.order();
        for (int j = order - 1; j >= 1; --j)
            for (int i = j - 1; i >= 0; --i) {
                int u = res.canonical_order[i];
                int v = res.canonical_order[j];
                if (g.adjacent(u, v)) return {std::min(u, v), std::max(u, v)};
            }
        throw std::logic_error("canonical_deletion on an empty graph");
    }

    void expand(const Graph& g, const Gens& gens) {
        if (frontier_edges >= 0 && g.edge_count() == frontier_edges) {
            on_frontier(g, gens);
            return;
        }
        visit(g, gens);
        std::vector<uint64_t> scratch;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (g.adjacent(u, v)) continue;
                uint64_t mask = (uint64_t{1} << u) | (uint64_t{1} << v);
                if (orbit_min_mask(mask, gens, scratch) != mask) continue;  // one rep per orbit

                std::vector<std::pair<int, int>> edges = g.edges();
                edges.emplace_back(u, v);
                Graph child(n, std::move(edges));
                CanonicalResult cres = canonical_analyze(child);
                auto d = canonical_deletion(child, cres);
                uint64_t dmask = (uint64_t{1} << d.first) | (uint64_t{1} << d.second);
                if (!same_subset_orbit(mask, dmask, cres.generators, scratch)) continue;
                expand(child, cres.generators);
            }
    }

    void run() {
        Graph empty(n, {});
        CanonicalResult res = canonical_analyze(empty);
        expand(empty, res.generators);
    }
};

// ---- canonical construction path on vertex augmentation (regular) ---------

struct RegularGenerator {
    int rho = 0;
    int n = 0;
    std::function<void(const Graph&, const Gens&)> visit;
    int frontier_order = -1;
    std::function<void(const Graph&, const Gens&)> on_frontier;

    // Among minimum-degree vertices, the one at the largest canonical position.
    static int canonical_deletion(const Graph& g, const CanonicalResult& res, int mindeg) {
        for (int p = g.order() - 1; p >= 0; --p) {
            int v = res.canonical_order[p];
            if (g.degree(v) == mindeg) return v;
        }
        throw std::logic_error("no minimum-degree vertex");
    }

    bool child_viable(const Graph& c) const {
        const int k1 = c.order();
        std::vector<int> deg(k1);
        int isolated = 0;
        long long deficiency = 0;
        for (int v = 0; v < k1; ++v) {
            deg[v] = c.degree(v);
            if (deg[v] == 0) ++isolated;
            deficiency += rho - deg[v];
            if (rho - deg[v] > n - k1) return false;  // future arrivals cannot feed v
        }
        if (isolated >= 2) return false;  // a peel order never leaves two at once
        long long future_slots = static_cast<long long>(rho) * (n - k1);
        if (deficiency > future_slots || (future_slots - deficiency) % 2 != 0) return false;

        if (k1 < n) {
            // a saturated component can never gain an edge to the rest
            std::vector<int> comp(k1, -1);
            for (int start = 0; start < k1; ++start) {
                if (comp[start] >= 0) continue;
                std::vector<int> stack{start};
                comp[start] = start;
                bool saturated = true;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    if (deg[v] < rho) saturated = false;
                    for (int u : c.neighbors(v))
                        if (comp[u] < 0) {
                            comp[u] = start;
                            stack.push_back(u);
                        }
                }
                if (saturated) return false;
            }
        }
        return true;
    }

    void try_subset(const Graph& g, const Gens& gens, uint64_t mask, std::vector<uint64_t>& scratch) {
        if (orbit_min_mask(mask, gens, scratch) != mask) return;

        const int k = g.order();
        std::vector<std::pair<int, int>> edges = g.edges();
        int ssize = 0;
        for (uint64_t m = mask; m; m &= m - 1) {
            edges.emplace_back(__builtin_ctzll(m), k);
            ++ssize;
        }
        Graph child(k + 1, std::move(edges));

        // acceptance requires the new vertex to be a minimum-degree vertex
        int child_min = ssize;
        for (int v = 0; v < k; ++v) child_min = std::min(child_min, child.degree(v));
        if (ssize > child_min) return;
        if (!child_viable(child)) return;

        CanonicalResult cres = canonical_analyze(child);
        int d = canonical_deletion(child, cres, child_min);
        if (!same_subset_orbit(uint64_t{1} << k, uint64_t{1} << d, cres.generators, scratch)) return;
        expand(child, cres.generators);
    }

    void expand(const Graph& g, const Gens& gens) {
        const int k = g.order();
        if (frontier_order >= 0 && k == frontier_order) {
            on_frontier(g, gens);
            return;
        }
        if (k == n) {
            if (g.is_regular(rho) && g.connected()) visit(g, gens);
            return;
        }

        std::vector<int> deficient;
        for (int v = 0; v < k; ++v)
            if (g.degree(v) < rho) deficient.push_back(v);
        const int smin = std::max(0, rho - (n - k - 1));
        const int smax = std::min(rho, static_cast<int>(deficient.size()));
        std::vector<uint64_t> scratch;

        for (int size = smin; size <= smax; ++size) {
            if (size == 0) {
                try_subset(g, gens, 0, scratch);
                continue;
            }
            std::vector<int> idx(size);
            for (int i = 0; i < size; ++i) idx[i] = i;
            for (;;) {
                uint64_t mask = 0;
                for (int i : idx) mask |= uint64_t{1} << deficient[i];
                try_subset(g, gens, mask, scratch);
                int i = size - 1;
                while (i >= 0 && idx[i] == static_cast<int>(deficient.size()) - size + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }

    void run() {
        Graph single(1, {});
        CanonicalResult res = canonical_analyze(single);
        expand(single, res.generators);
    }
};

void check_all_bounds(int n) {
    if (n < 1) throw std::invalid_argument("order must be at least 1");
    if (n > 9)
        throw std::invalid_argument("enumerate_all is bounded at n <= 9 (" + std::to_string(n) +
                                    " requested); use --regular for degree-constrained runs at larger orders");
}

void check_regular_bounds(int rho, int n) {
    if (rho < 0 || n < 1) throw std::invalid_argument("enumerate_regular needs rho >= 0 and n >= 1");
    if ((static_cast<long long>(rho) * n) % 2 != 0)
        throw std::invalid_argument("parity violation: rho*n must be even");
    int cap;
    if (rho <= 2) cap = 64;
    else if (rho == 3) cap = 16;
    else if (rho == 4) cap = 15;
    else
        throw std::invalid_argument("enumerate_regular is bounded at rho <= 4; N(rho) is open beyond that");
    if (n > cap)
        throw std::invalid_argument("enumerate_regular(rho=" + std::to_string(rho) + ") is bounded at n <= " +
                                    std::to_string(cap));
}

// ---- census ----------------------------------------------------------------

GraphClassTag census_tag(const Graph& g) {
    GraphClass cls = classify(g);
    // census convention: a nut graph has at least two vertices
    if (cls.tag == GraphClassTag::Nut && g.order() == 1) return GraphClassTag::CoreNonNut;
    return cls.tag;
}

struct Tally {
    long long examined = 0;
    std::array<long long, 4> totals{};
    std::vector<std::string> nuts;

    void add(const Graph& g) {
        ++examined;
        GraphClassTag tag = census_tag(g);
        ++totals[static_cast<int>(tag)];
        if (tag == GraphClassTag::Nut) nuts.push_back(write_graph6(g));
    }
    void merge(Tally&& other) {
        examined += other.examined;
        for (int i = 0; i < 4; ++i) totals[i] += other.totals[i];
        nuts.insert(nuts.end(), std::make_move_iterator(other.nuts.begin()),
                    std::make_move_iterator(other.nuts.end()));
    }
};

struct Task {
    Graph graph;
    Gens gens;
};

// Phase 2 of a split census: process frontier tasks on `jobs` threads and
// merge the tallies in task order, which keeps every report identical to the
// single-threaded run.
template <typename MakeSub>
void process_tasks(std::vector<Task>& tasks, int jobs, Tally& base, MakeSub make_sub) {
    std::vector<Tally> task_tallies(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            Tally local;
            make_sub(local, tasks[i]);
            task_tallies[i] = std::move(local);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& t : task_tallies) base.merge(std::move(t));
}

}  // namespace

void enumerate_all(int n, const std::function<void(const Graph&)>& emit) {
    check_all_bounds(n);
    AllGraphsGenerator gen;
    gen.n = n;
    gen.visit = [&](const Graph& g, const Gens&) { emit(g); };
    gen.run();
}

void enumerate_regular(int rho, int n, const std::function<void(const Graph&)>& emit) {
    check_regular_bounds(rho, n);
    RegularGenerator gen;
    gen.rho = rho;
    gen.n = n;
    gen.visit = [&](const Graph& g, const Gens&) { emit(g); };
    gen.run();
}

CensusReport census_all(int n, int jobs, std::vector<std::string>* nut_graph6) {
    check_all_bounds(n);
    if (jobs < 1) jobs = 1;
    auto t0 = std::chrono::steady_clock::now();

    CensusReport report;
    report.order = n;
    report.constraint = "all";
    Tally base;

    AllGraphsGenerator gen;
    gen.n = n;
    gen.visit = [&](const Graph& g, const Gens&) { base.add(g); };
    if (jobs == 1) {
        gen.run();
    } else {
        std::vector<Task> tasks;
        gen.frontier_edges = 5;  // fixed split depth
        gen.on_frontier = [&](const Graph& g, const Gens& gens) { tasks.push_back(Task{g, gens}); };
        gen.run();
        process_tasks(tasks, jobs, base, [&](Tally& local, const Task& task) {
            AllGraphsGenerator sub;
            sub.n = n;
            sub.visit = [&](const Graph& g, const Gens&) { local.add(g); };
            sub.expand(task.graph, task.gens);
        });
    }

    report.examined = base.examined;
    report.class_totals = base.totals;
    if (nut_graph6) *nut_graph6 = std::move(base.nuts);
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

CensusReport census_regular(int rho, int n, int jobs, std::vector<std::string>* nut_graph6) {
    check_regular_bounds(rho, n);
    if (jobs < 1) jobs = 1;
    auto t0 = std::chrono::steady_clock::now();

    CensusReport report;
    report.order = n;
    report.constraint = "connected " + std::to_string(rho) + "-regular";
    Tally base;

    RegularGenerator gen;
    gen.rho = rho;
    gen.n = n;
    gen.visit = [&](const Graph& g, const Gens&) { base.add(g); };
    const int frontier = std::max(2, n - 6);
    if (jobs == 1 || frontier >= n) {
        gen.run();
    } else {
        std::vector<Task> tasks;
        gen.frontier_order = frontier;
        gen.on_frontier = [&](const Graph& g, const Gens& gens) { tasks.push_back(Task{g, gens}); };
        gen.run();
        process_tasks(tasks, jobs, base, [&](Tally& local, const Task& task) {
            RegularGenerator sub;
            sub.rho = rho;
            sub.n = n;
            sub.visit = [&](const Graph& g, const Gens&) { local.add(g); };
            sub.expand(task.graph, task.gens);
        });
    }

    report.examined = base.examined;
    report.class_totals = base.totals;
    if (nut_graph6) *nut_graph6 = std::move(base.nuts);
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string to_text(const CensusReport& report) {
    std::ostringstream os;
    os << "order " << report.order << "\n";
    os << "constraint " << report.constraint << "\n";
    os << "examined " << report.examined << "\n";
    os << "NonSingular " << report.class_totals[0] << "\n";
    os << "SingularNonCore " << report.class_totals[1] << "\n";
    os << "CoreNonNut " << report.class_totals[2] << "\n";
    os << "Nut " << report.class_totals[3] << "\n";
    return os.str();
}

}  // namespace nutkit
