#pragma once

#include <gmpxx.h>

#include <array>
#include <utility>
#include <vector>

#include "nutkit/graph.hpp"

namespace nutkit {

/// Deterministic labelling of a Fowler expansion site: neighbors of v in
/// ascending order u_1 < ... < u_rho, then q_i = n+(i-1) and p_i = n+rho+(i-1).
struct FowlerSite {
    int base_order = 0;
    int vertex = 0;
    int rho = 0;
    std::vector<int> neighbor_order;
    std::vector<int> q_labels;
    std::vector<int> p_labels;
};

FowlerSite fowler_site(const Graph& g, int v);

/// Local enlargement at v: the v-u_i edges are replaced by v-q_i and p_i-u_i,
/// plus every p_i-q_j with i != j. Adds 2*rho vertices and preserves both
/// nullity and rho-regularity.
Graph fowler(const Graph& g, int v);

/// Kernel vector transport onto fowler(g, v): entries away from v are kept,
/// x'(p_i) = x(v), x'(q_i) = x(u_i), x'(v) = -(rho-1)*x(v).
std::vector<mpz_class> fowler_lift(const std::vector<mpz_class>& x, const FowlerSite& site);

/// Replace edge e by a path of five edges through four new vertices
/// n, n+1, n+2, n+3 in path order.
Graph subdivide_4fold(const Graph& g, std::pair<int, int> e);

struct CirculantSpec {
    int order = 0;
    std::vector<int> offsets;  // distinct, within 1..order/2
};

/// Vertex i adjacent to i +- s (mod N) for every offset s.
Graph circulant(const CirculantSpec& spec);
Graph cycle(int n);      // circulant(n, {1}), n >= 3
Graph antiprism(int n);  // circulant(2n, {1,2}), n >= 3

/// lambda_r = sum over offsets of the character contribution, r = 0..N-1.
std::vector<double> circulant_eigenvalues(const CirculantSpec& spec);

/// 3 when 3 | n, else 1; equals the exact nullity of antiprism(n).
int antiprism_nullity(int n);

/// The closed-form kernel vectors: for 3 | n three 6-periodic patterns, else
/// the single alternating vector; every vector satisfies A·v = 0 exactly.
std::vector<std::vector<mpz_class>> antiprism_kernel_closed_form(int n);

/// Integer linear combination of the four seed symbols a,b,c,d.
struct LinearForm {
    std::array<long long, 4> coeff{0, 0, 0, 0};

    friend LinearForm operator+(const LinearForm& l, const LinearForm& r) {
        LinearForm out;
        for (int i = 0; i < 4; ++i) out.coeff[i] = l.coeff[i] + r.coeff[i];
        return out;
    }
    friend LinearForm operator-(const LinearForm& l) {
        LinearForm out;
        for (int i = 0; i < 4; ++i) out.coeff[i] = -l.coeff[i];
        return out;
    }
    friend LinearForm operator-(const LinearForm& l, const LinearForm& r) { return l + (-r); }
    bool operator==(const LinearForm&) const = default;

    long long evaluate(long long a, long long b, long long c, long long d) const {
        return coeff[0] * a + coeff[1] * b + coeff[2] * c + coeff[3] * d;
    }
};

/// Symbolic nullspace propagation around the antiprism in the paper's
/// vertex order: entries per circulant vertex plus the 4x4 wrap-around
/// constraint matrix Q on (a,b,c,d).
struct AntiprismPropagation {
    std::vector<LinearForm> entries;              // index = circulant vertex
    std::array<std::array<long long, 4>, 4> q{};  // constraint rows
};

AntiprismPropagation antiprism_propagate(int n);

}  // namespace nutkit
