#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "nutkit/graph.hpp"

namespace nutkit {

/// Exact integer basis of ker(A(G)). Every basis vector satisfies A·x = 0 in
/// integer arithmetic, is primitive (entry gcd 1) and has its first nonzero
/// entry positive; nullity + rank(A) = order.
struct KernelCertificate {
    int nullity = 0;
    std::vector<std::vector<mpz_class>> basis;
};

/// Primitive, everywhere-nonzero integer kernel vector proving nut status.
/// Exists only when the nullity is one; determined up to sign, normalized to
/// a positive first entry.
struct NutCertificate {
    std::vector<mpz_class> entries;
};

enum class GraphClassTag { NonSingular, SingularNonCore, CoreNonNut, Nut };

const char* to_string(GraphClassTag tag);

struct GraphClass {
    GraphClassTag tag;
    int nullity = 0;
    // Nut: the certificate vector; CoreNonNut: an admissible vector.
    std::optional<std::vector<mpz_class>> witness;
};

/// Exact null-space basis via fraction-free (Bareiss) elimination with a
/// deterministic pivot rule: among maximal-absolute-value candidates of the
/// trailing submatrix, smallest row index then smallest column index.
KernelCertificate kernel(const Graph& g);

/// Vertices carrying a nonzero entry in some kernel eigenvector: the union of
/// the basis supports.
std::vector<int> core_vertices(const KernelCertificate& cert);

/// All-nonzero integer kernel vector sum(t^i * basis_i) with
/// t = 1 + max |entry|, when every vertex is a core vertex; absent otherwise.
std::optional<std::vector<mpz_class>> admissible_vector(const KernelCertificate& cert);

GraphClass classify(const Graph& g);

class Lemma5Error : public std::runtime_error {
public:
    enum class Kind { AdjacentPair, ExclusiveNeighborhoodNotSingleton, NotKernelVector, NotAdmissible, BadVertex };
    Lemma5Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// For non-adjacent u,v whose exclusive neighborhoods are singletons {u'},{v'}
/// and an admissible kernel vector x, reports whether x(u') = x(v').
bool check_lemma5(const Graph& g, const std::vector<mpz_class>& x, int u, int v);

/// Line-oriented text: "nullity k" then k lines of space-separated integers.
std::string write_certificate(const KernelCertificate& cert);
KernelCertificate parse_certificate(const std::string& text);

}  // namespace nutkit
