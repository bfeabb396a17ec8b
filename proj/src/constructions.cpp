#include "nutkit/constructions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nutkit {

FowlerSite fowler_site(const Graph& g, int v) {
    FowlerSite site;
    site.base_order = g.order();
    site.vertex = v;
    site.neighbor_order = g.neighbors(v);  // ascending
    site.rho = static_cast<int>(site.neighbor_order.size());
    if (site.rho == 0)
        throw std::invalid_argument("fowler construction is undefined at an isolated vertex");
    for (int i = 0; i < site.rho; ++i) {
        site.q_labels.push_back(site.base_order + i);
        site.p_labels.push_back(site.base_order + site.rho + i);
    }
    return site;
}

Graph fowler(const Graph& g, int v) {
    FowlerSite site = fowler_site(g, v);
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (a != v && b != v) edges.emplace_back(a, b);
    for (int i = 0; i < site.rho; ++i) {
        edges.emplace_back(v, site.q_labels[i]);
        edges.emplace_back(site.p_labels[i], site.neighbor_order[i]);
        for (int j = 0; j < site.rho; ++j)
            if (i != j) edges.emplace_back(site.p_labels[i], site.q_labels[j]);
    }
    return Graph(site.base_order + 2 * site.rho, std::move(edges));
}

std::vector<mpz_class> fowler_lift(const std::vector<mpz_class>& x, const FowlerSite& site) {
    if (static_cast<int>(x.size()) != site.base_order)
        throw std::invalid_argument("kernel vector length differs from the site's base order");
    std::vector<mpz_class> lifted(site.base_order + 2 * site.rho, 0);
    for (int w = 0; w < site.base_order; ++w) lifted[w] = x[w];
    const mpz_class a = x[site.vertex];
    for (int i = 0; i < site.rho; ++i) {
        lifted[site.q_labels[i]] = x[site.neighbor_order[i]];
        lifted[site.p_labels[i]] = a;
    }
    lifted[site.vertex] = -(site.rho - 1) * a;
    return lifted;
}

Graph subdivide_4fold(const Graph& g, std::pair<int, int> e) {
    int a = std::min(e.first, e.second);
    int b = std::max(e.first, e.second);
    if (a < 0 || b >= g.order() || !g.adjacent(a, b))
        throw std::invalid_argument("subdivide_4fold: (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ") is not an edge");
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (!(u == a && v == b)) edges.emplace_back(u, v);
    edges.emplace_back(a, n);
    edges.emplace_back(n, n + 1);
    edges.emplace_back(n + 1, n + 2);
    edges.emplace_back(n + 2, n + 3);
    edges.emplace_back(n + 3, b);
    return Graph(n + 4, std::move(edges));
}

Graph circulant(const CirculantSpec& spec) {
    const int N = spec.order;
    if (N < 1) throw std::invalid_argument("circulant order must be at least 1");
    std::vector<int> offsets = spec.offsets;
    std::sort(offsets.begin(), offsets.end());
    for (size_t i = 0; i < offsets.size(); ++i) {
        if (offsets[i] < 1 || offsets[i] > N / 2)
            throw std::invalid_argument("circulant offset " + std::to_string(offsets[i]) +
                                        " outside 1.." + std::to_string(N / 2));
        if (i && offsets[i] == offsets[i - 1])
            throw std::invalid_argument("duplicate circulant offset");
    }
    std::vector<std::pair<int, int>> edges;
    for (int s : offsets) {
        if (2 * s == N) {
            // antipodal offset: each edge would be generated twice
            for (int i = 0; i < N / 2; ++i) edges.emplace_back(i, i + N / 2);
        } else {
            for (int i = 0; i < N; ++i) edges.emplace_back(i, (i + s) % N);
        }
    }
    return Graph(N, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    return circulant({n, {1}});
}

Graph antiprism(int n) {
    if (n < 3) throw std::invalid_argument("antiprism needs n >= 3");
    return circulant({2 * n, {1, 2}});
}

std::vector<double> circulant_eigenvalues(const CirculantSpec& spec) {
    const int N = spec.order;
    std::vector<double> lambda(N, 0.0);
    for (int r = 0; r < N; ++r)
        for (int s : spec.offsets) {
            double angle = 2.0 * std::numbers::pi * r * s / N;
            // offset N/2 contributes a single +-1 term, every other offset a
            // conjugate pair
            lambda[r] += (2 * s == N) ? std::cos(angle) : 2.0 * std::cos(angle);
        }
    return lambda;
}

int antiprism_nullity(int n) {
    if (n < 3) throw std::invalid_argument("antiprism needs n >= 3");
    return n % 3 == 0 ? 3 : 1;
}

std::vector<std::vector<mpz_class>> antiprism_kernel_closed_form(int n) {
    if (n < 3) throw std::invalid_argument("antiprism needs n >= 3");
    const int N = 2 * n;
    std::vector<std::vector<mpz_class>> out;
    if (n % 3 == 0) {
        const int patterns[3][6] = {
            {0, 0, -1, 0, 0, 1},
            {0, -1, 0, 0, 1, 0},
            {-1, 0, 0, 1, 0, 0},
        };
        for (const auto& pattern : patterns) {
            std::vector<mpz_class> v(N);
            for (int i = 0; i < N; ++i) v[i] = pattern[i % 6];
            out.push_back(std::move(v));
        }
    } else {
        std::vector<mpz_class> v(N);
        for (int i = 0; i < N; ++i) v[i] = (i % 2 == 0) ? -1 : 1;
        out.push_back(std::move(v));
    }
    return out;
}

AntiprismPropagation antiprism_propagate(int n) {
    if (n < 3) throw std::invalid_argument("antiprism needs n >= 3");
    const int N = 2 * n;

    // Paper-order vertices 1..2n; x(1..4) = a,b,c,d, and the zero-sum rule at
    // vertex k determines x(k+2) = -(x(k+1) + x(k-1) + x(k-2)).
    std::vector<LinearForm> x(N + 1);
    for (int i = 0; i < 4; ++i) x[i + 1].coeff[i] = 1;
    for (int k = 3; k + 2 <= N; ++k) x[k + 2] = -(x[k + 1] + x[k - 1] + x[k - 2]);

    auto wrap = [&](int i) { return (i - 1 + N) % N + 1; };
    auto zero_sum_at = [&](int k) {
        return x[wrap(k - 2)] + x[wrap(k - 1)] + x[wrap(k + 1)] + x[wrap(k + 2)];
    };

    AntiprismPropagation result;
    // Wrap-around constraints at vertices 2n-1, 2n, 1, 2; the printed Q uses
    // the negated coefficient rows.
    const int constraint_vertices[4] = {N - 1, N, 1, 2};
    for (int r = 0; r < 4; ++r) {
        LinearForm row = -zero_sum_at(constraint_vertices[r]);
        for (int cidx = 0; cidx < 4; ++cidx) result.q[r][cidx] = row.coeff[cidx];
    }
    result.entries.assign(N, LinearForm{});
    for (int k = 1; k <= N; ++k) result.entries[k - 1] = x[k];  // circulant vertex k-1
    return result;
}

}  // namespace nutkit
