#pragma once

#include <string>
#include <vector>

#include "nutkit/graph.hpp"
#include "nutkit/kernel.hpp"

namespace nutkit {

enum class Membership { Member, NonMember, Unknown };

const char* to_string(Membership m);

struct MembershipVerdict {
    Membership value;
    std::string reason;
};

/// Does a rho-regular nut graph of order n exist?
///   rho=2: never. rho=3: n even, n >= 12, n not in {14,16}.
///   rho=4: n in {8,10,12} or n >= 14. rho in {0,1}: never (unions of K1/K2).
///   rho >= 5: open problem.
MembershipVerdict membership(int rho, long long n);

struct SynthesisPlan {
    int rho = 0;
    int target_order = 0;
    std::string seed_name;
    int steps = 0;
    std::string vertex_rule = "vertex 0 at every step";
};

struct Synthesis {
    Graph graph;
    NutCertificate certificate;
    SynthesisPlan plan;
};

/// Build a certified rho-regular nut graph of order n by repeated Fowler
/// expansion at vertex 0 from a fixed residue-indexed seed. Throws
/// std::invalid_argument when membership(rho, n) is not Member.
Synthesis construct_regular_nut(int rho, int n);

struct CertifyReport {
    int order = 0;
    bool regular = false;
    int rho = 0;
    GraphClass classification{GraphClassTag::NonSingular, 0, {}};
};

/// Independent recomputation: degree check plus full classification; trusts
/// nothing from the construction.
CertifyReport certify(const Graph& g, int rho);

std::string to_text(const CertifyReport& report);

}  // namespace nutkit
