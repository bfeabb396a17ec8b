#include "nutkit/synthesis.hpp"

#include <sstream>
#include <stdexcept>

#include "nutkit/catalog.hpp"
#include "nutkit/constructions.hpp"

namespace nutkit {

const char* to_string(Membership m) {
    switch (m) {
        case Membership::Member: return "Member";
        case Membership::NonMember: return "NonMember";
        case Membership::Unknown: return "Unknown";
    }
    return "?";
}

MembershipVerdict membership(int rho, long long n) {
    if (rho < 0 || n < 1) throw std::invalid_argument("membership needs rho >= 0 and n >= 1");
    if (rho == 0 || rho == 1)
        return {Membership::NonMember,
                "a " + std::to_string(rho) + "-regular graph is a union of K1/K2 components, never a nut graph"};
    if (rho == 2)
        return {Membership::NonMember, "no regular nut graphs of degree two exist"};
    if (rho == 3) {
        if (n % 2 != 0) return {Membership::NonMember, "cubic graphs need even order"};
        if (n < 12) return {Membership::NonMember, "no cubic nut graphs below order 12"};
        if (n == 14 || n == 16) return {Membership::NonMember, "no cubic nut graphs on 14 and 16 vertices"};
        return {Membership::Member, ""};
    }
    if (rho == 4) {
        if (n == 8 || n == 10 || n == 12 || n >= 14) return {Membership::Member, ""};
        if (n % 2 != 0) return {Membership::NonMember, "no quartic nut graphs of odd order at most 13"};
        return {Membership::NonMember, "no quartic nut graphs below order 8"};
    }
    return {Membership::Unknown, "open problem: N(rho) is not determined for rho > 4"};
}

namespace {

struct SeedChoice {
    std::string name;
    Graph graph;
};

SeedChoice pick_seed(int rho, int n) {
    if (rho == 3) {
        switch (n % 6) {
            case 0: return {"frucht", seed("frucht").graph};
            case 2: return {"cubic20", seed("cubic20").graph};
            default: return {"cubic22", seed("cubic22").graph};
        }
    }
    // rho == 4
    if (n % 2 == 0) {
        switch (n % 8) {
            case 0: return {"antiprism4", seed("antiprism4").graph};
            case 2: return {"antiprism(5)", antiprism(5)};
            case 4: return {"quartic12", seed("quartic12").graph};
            default: return {"antiprism(7)", antiprism(7)};
        }
    }
    switch (n % 8) {
        case 7: return {"quartic15", seed("quartic15").graph};
        case 1: return {"quartic17", seed("quartic17").graph};
        case 3: return {"quartic19", seed("quartic19").graph};
        default: return {"quartic21", seed("quartic21").graph};
    }
}

}  // namespace

Synthesis construct_regular_nut(int rho, int n) {
    MembershipVerdict verdict = membership(rho, n);
    if (verdict.value != Membership::Member)
        throw std::invalid_argument("construct_regular_nut(" + std::to_string(rho) + "," + std::to_string(n) +
                                    "): " + to_string(verdict.value) +
                                    (verdict.reason.empty() ? "" : " - " + verdict.reason));

    SeedChoice choice = pick_seed(rho, n);
    if ((n - choice.graph.order()) % (2 * rho) != 0 || n < choice.graph.order())
        throw std::logic_error("seed residue table broken for (" + std::to_string(rho) + "," + std::to_string(n) + ")");
    const int steps = (n - choice.graph.order()) / (2 * rho);

    Graph g = choice.graph;
    for (int s = 0; s < steps; ++s) g = fowler(g, 0);

    KernelCertificate cert = kernel(g);
    if (cert.nullity != 1) throw std::logic_error("synthesis produced nullity != 1");
    for (const auto& e : cert.basis.front())
        if (e == 0) throw std::logic_error("synthesis produced a kernel vector with a zero entry");

    Synthesis out{std::move(g), NutCertificate{cert.basis.front()}, SynthesisPlan{}};
    out.plan.rho = rho;
    out.plan.target_order = n;
    out.plan.seed_name = choice.name;
    out.plan.steps = steps;
    return out;
}

CertifyReport certify(const Graph& g, int rho) {
    CertifyReport report;
    report.order = g.order();
    report.rho = rho;
    report.regular = g.is_regular(rho);
    report.classification = classify(g);
    return report;
}

std::string to_text(const CertifyReport& report) {
    std::ostringstream os;
    os << "order " << report.order << "\n";
    os << "regular(" << report.rho << ") " << (report.regular ? "yes" : "no") << "\n";
    os << "class " << to_string(report.classification.tag) << "\n";
    os << "nullity " << report.classification.nullity << "\n";
    if (report.classification.tag == GraphClassTag::Nut && report.classification.witness) {
        os << "certificate";
        for (const auto& e : *report.classification.witness) os << ' ' << e;
        os << "\n";
    }
    return os.str();
}

}  // namespace nutkit
