#include "nutkit/kernel.hpp"

#include <algorithm>
#include <sstream>

namespace nutkit {

namespace {

void normalize_primitive(std::vector<mpz_class>& vec) {
    mpz_class g = 0;
    for (const auto& x : vec) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : vec) x /= g;
    for (const auto& x : vec) {
        if (x != 0) {
            if (x < 0)
                for (auto& y : vec) y = -y;
            break;
        }
    }
}

void verify_in_kernel(const Graph& g, const std::vector<mpz_class>& x) {
    for (int v = 0; v < g.order(); ++v) {
        mpz_class sum = 0;
        for (int u : g.neighbors(v)) sum += x[u];
        if (sum != 0) throw std::logic_error("kernel self-check failed: A*x != 0");
    }
}

}  // namespace

const char* to_string(GraphClassTag tag) {
    switch (tag) {
        case GraphClassTag::NonSingular: return "NonSingular";
        case GraphClassTag::SingularNonCore: return "SingularNonCore";
        case GraphClassTag::CoreNonNut: return "CoreNonNut";
        case GraphClassTag::Nut: return "Nut";
    }
    return "?";
}

KernelCertificate kernel(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (auto [u, v] : g.edges()) {
        m[u][v] = 1;
        m[v][u] = 1;
    }
    std::vector<int> col_var(n);  // column position -> original variable
    for (int j = 0; j < n; ++j) col_var[j] = j;

    mpz_class prev = 1;
    int rank = 0;
    for (int step = 0; step < n; ++step) {
        int pr = -1, pc = -1;
        mpz_class best = 0;
        for (int i = step; i < n; ++i)
            for (int j = step; j < n; ++j) {
                mpz_class a = abs(m[i][j]);
                if (a > best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        if (pr != step) std::swap(m[pr], m[step]);
        if (pc != step) {
            for (int i = 0; i < n; ++i) std::swap(m[i][pc], m[i][step]);
            std::swap(col_var[pc], col_var[step]);
        }
        for (int i = step + 1; i < n; ++i) {
            for (int j = step + 1; j < n; ++j) {
                mpz_class t = m[step][step] * m[i][j] - m[i][step] * m[step][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][step] = 0;
        }
        prev = m[step][step];
        ++rank;
    }

    KernelCertificate cert;
    cert.nullity = n - rank;
    for (int f = rank; f < n; ++f) {
        // back-substitute over rationals with x[f] = 1, other free vars 0
        std::vector<mpq_class> x(n, 0);
        x[f] = 1;
        for (int i = rank - 1; i >= 0; --i) {
            mpq_class sum = 0;
            for (int j = i + 1; j < n; ++j)
                if (x[j] != 0) sum += mpq_class(m[i][j]) * x[j];
            x[i] = -sum / mpq_class(m[i][i]);
        }
        mpz_class lcm = 1;
        for (const auto& q : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<mpz_class> vec(n, 0);
        for (int j = 0; j < n; ++j) {
            mpq_class scaled = x[j] * mpq_class(lcm);
            vec[col_var[j]] = scaled.get_num();
        }
        normalize_primitive(vec);
        verify_in_kernel(g, vec);
        cert.basis.push_back(std::move(vec));
    }
    return cert;
}

std::vector<int> core_vertices(const KernelCertificate& cert) {
    if (cert.basis.empty()) return {};
    const int n = static_cast<int>(cert.basis.front().size());
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        for (const auto& b : cert.basis)
            if (b[v] != 0) {
                out.push_back(v);
                break;
            }
    return out;
}

std::optional<std::vector<mpz_class>> admissible_vector(const KernelCertificate& cert) {
    if (cert.nullity == 0) return std::nullopt;
    const int n = static_cast<int>(cert.basis.front().size());
    if (static_cast<int>(core_vertices(cert).size()) != n) return std::nullopt;

    // x = sum t^i basis_i with t beyond the Cauchy root bound of every
    // coordinate polynomial, so no coordinate can vanish.
    mpz_class maxabs = 0;
    for (const auto& b : cert.basis)
        for (const auto& e : b) {
            mpz_class a = abs(e);
            if (a > maxabs) maxabs = a;
        }
    mpz_class t = maxabs + 1;
    std::vector<mpz_class> x(n, 0);
    mpz_class power = 1;
    for (const auto& b : cert.basis) {
        for (int v = 0; v < n; ++v) x[v] += power * b[v];
        power *= t;
    }
    for (const auto& e : x)
        if (e == 0) throw std::logic_error("admissible vector construction produced a zero entry");
    normalize_primitive(x);
    return x;
}

GraphClass classify(const Graph& g) {
    KernelCertificate cert = kernel(g);
    GraphClass result;
    result.nullity = cert.nullity;
    if (cert.nullity == 0) {
        result.tag = GraphClassTag::NonSingular;
        return result;
    }
    auto admissible = admissible_vector(cert);
    if (!admissible) {
        result.tag = GraphClassTag::SingularNonCore;
        return result;
    }
    if (cert.nullity == 1) {
        result.tag = GraphClassTag::Nut;
        result.witness = std::move(*admissible);
        return result;
    }
    result.tag = GraphClassTag::CoreNonNut;
    result.witness = std::move(*admissible);
    return result;
}

bool check_lemma5(const Graph& g, const std::vector<mpz_class>& x, int u, int v) {
    const int n = g.order();
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw Lemma5Error(Lemma5Error::Kind::BadVertex, "u,v must be distinct vertices of the graph");
    if (static_cast<int>(x.size()) != n)
        throw Lemma5Error(Lemma5Error::Kind::NotKernelVector, "vector length differs from graph order");
    for (int w = 0; w < n; ++w) {
        mpz_class sum = 0;
        for (int y : g.neighbors(w)) sum += x[y];
        if (sum != 0) throw Lemma5Error(Lemma5Error::Kind::NotKernelVector, "A*x != 0");
    }
    for (const auto& e : x)
        if (e == 0) throw Lemma5Error(Lemma5Error::Kind::NotAdmissible, "kernel vector has a zero entry");
    if (g.adjacent(u, v))
        throw Lemma5Error(Lemma5Error::Kind::AdjacentPair, "u and v are adjacent");

    std::vector<int> exclusive_u, exclusive_v;
    for (int w : g.neighbors(u))
        if (!g.adjacent(v, w) && w != v) exclusive_u.push_back(w);
    for (int w : g.neighbors(v))
        if (!g.adjacent(u, w) && w != u) exclusive_v.push_back(w);
    if (exclusive_u.size() != 1 || exclusive_v.size() != 1)
        throw Lemma5Error(Lemma5Error::Kind::ExclusiveNeighborhoodNotSingleton,
                          "N(u-v) and N(v-u) must both be singletons");
    return x[exclusive_u.front()] == x[exclusive_v.front()];
}

std::string write_certificate(const KernelCertificate& cert) {
    std::ostringstream os;
    os << "nullity " << cert.nullity << "\n";
    for (const auto& b : cert.basis) {
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) os << ' ';
            os << b[i];
        }
        os << "\n";
    }
    return os.str();
}

KernelCertificate parse_certificate(const std::string& text) {
    std::istringstream is(text);
    std::string word;
    KernelCertificate cert;
    if (!(is >> word) || word != "nullity" || !(is >> cert.nullity) || cert.nullity < 0)
        throw std::invalid_argument("bad certificate header");
    std::string rest;
    std::getline(is, rest);
    for (int k = 0; k < cert.nullity; ++k) {
        std::string line;
        if (!std::getline(is, line)) throw std::invalid_argument("certificate truncated");
        std::istringstream ls(line);
        std::vector<mpz_class> vec;
        std::string tok;
        while (ls >> tok) vec.emplace_back(tok);
        if (vec.empty()) throw std::invalid_argument("empty certificate row");
        cert.basis.push_back(std::move(vec));
    }
    return cert;
}

}  // namespace nutkit
