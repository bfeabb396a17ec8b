// Command-line front end: verification, construction, synthesis, enumeration
// and catalog access over graph6 pipes. Machine-readable output goes to
// stdout, commentary to stderr. Exit codes: 0 success, 1 domain rejection,
// 2 malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nutkit/catalog.hpp"
#include "nutkit/constructions.hpp"
#include "nutkit/enumeration.hpp"
#include "nutkit/graph.hpp"
#include "nutkit/kernel.hpp"
#include "nutkit/synthesis.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitMalformed = 2;

struct DomainRejection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_int(const std::string& text) {
    try {
        size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw nutkit::GraphError(nutkit::GraphError::Kind::BadFormat, "not an integer: " + text);
    }
}

std::vector<std::string> read_graph6_lines(const std::string& input, const std::string& file) {
    std::vector<std::string> lines;
    auto push = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '>' || line[0] == '#') continue;
            lines.push_back(line);
        }
    };
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw DomainRejection("cannot open file: " + file);
        push(in);
    } else if (!input.empty() && input != "-") {
        lines.push_back(input);
    } else {
        push(std::cin);
    }
    if (lines.empty()) throw nutkit::GraphError(nutkit::GraphError::Kind::BadFormat, "no graph6 input");
    return lines;
}

void print_verification(const nutkit::Graph& g) {
    nutkit::KernelCertificate cert = nutkit::kernel(g);
    nutkit::GraphClass cls = nutkit::classify(g);
    std::cout << nutkit::to_string(cls.tag) << ", nullity " << cls.nullity << "\n";
    std::cout << nutkit::write_certificate(cert);
}

int cmd_verify(const std::string& input, const std::string& file) {
    for (const auto& line : read_graph6_lines(input, file)) {
        nutkit::Graph g = nutkit::parse_graph6(line);
        print_verification(g);
    }
    return kExitOk;
}

int cmd_construct(int rho, int n, const std::string& emit) {
    nutkit::MembershipVerdict verdict = nutkit::membership(rho, n);
    if (verdict.value != nutkit::Membership::Member) {
        std::cerr << nutkit::to_string(verdict.value) << ": " << verdict.reason << "\n";
        return kExitDomain;
    }
    nutkit::Synthesis result = nutkit::construct_regular_nut(rho, n);
    if (emit == "graph6") {
        std::cout << nutkit::write_graph6(result.graph) << "\n";
    } else if (emit == "dot") {
        std::cout << nutkit::write_dot(result.graph);
    } else if (emit == "certificate") {
        std::cout << nutkit::write_graph6(result.graph) << "\n";
        nutkit::KernelCertificate cert{1, {result.certificate.entries}};
        std::cout << nutkit::write_certificate(cert);
    } else {
        throw CLI::ValidationError("--emit must be graph6, dot or certificate");
    }
    std::cerr << "seed " << result.plan.seed_name << ", " << result.plan.steps << " expansion step(s), "
              << result.plan.vertex_rule << "\n";
    return kExitOk;
}

int cmd_fowler(const std::string& input, const std::string& file, int vertex, bool dot) {
    for (const auto& line : read_graph6_lines(input, file)) {
        nutkit::Graph g = nutkit::parse_graph6(line);
        if (vertex < 0 || vertex >= g.order()) throw DomainRejection("vertex out of range");
        if (g.degree(vertex) == 0) throw DomainRejection("fowler construction is undefined at an isolated vertex");
        nutkit::Graph result = nutkit::fowler(g, vertex);
        if (g.degree(vertex) == 1)
            std::cerr << "note: degree-1 site, the p-q block is empty and the result may be disconnected\n";
        std::cout << (dot ? nutkit::write_dot(result) : nutkit::write_graph6(result) + "\n");
    }
    return kExitOk;
}

int cmd_subdivide(const std::string& input, const std::string& file, int eu, int ev, bool dot) {
    for (const auto& line : read_graph6_lines(input, file)) {
        nutkit::Graph g = nutkit::parse_graph6(line);
        if (eu < 0 || eu >= g.order() || ev < 0 || ev >= g.order() || !g.adjacent(eu, ev))
            throw DomainRejection("(" + std::to_string(eu) + "," + std::to_string(ev) + ") is not an edge");
        nutkit::Graph result = nutkit::subdivide_4fold(g, {eu, ev});
        std::cout << (dot ? nutkit::write_dot(result) : nutkit::write_graph6(result) + "\n");
    }
    return kExitOk;
}

int cmd_antiprism(int n, bool dot) {
    if (n < 3) throw DomainRejection("antiprism needs n >= 3");
    nutkit::Graph g = nutkit::antiprism(n);
    std::cout << (dot ? nutkit::write_dot(g) : nutkit::write_graph6(g) + "\n");
    return kExitOk;
}

int cmd_circulant(int order, const std::vector<int>& offsets, bool dot) {
    nutkit::Graph g = nutkit::circulant({order, offsets});
    std::cout << (dot ? nutkit::write_dot(g) : nutkit::write_graph6(g) + "\n");
    return kExitOk;
}

int cmd_enumerate(int order, int regular, bool long_run, int jobs, const std::string& emit_nuts) {
    if (regular == 4 && order == 15 && !long_run)
        throw DomainRejection("the quartic order-15 census takes hours; pass --long-run to confirm");
    std::vector<std::string> nuts;
    std::vector<std::string>* nuts_ptr = emit_nuts.empty() ? nullptr : &nuts;
    nutkit::CensusReport report = (regular < 0) ? nutkit::census_all(order, jobs, nuts_ptr)
                                                : nutkit::census_regular(regular, order, jobs, nuts_ptr);
    std::cout << nutkit::to_text(report);
    std::cerr << "elapsed " << report.elapsed_seconds << "s\n";
    if (!emit_nuts.empty()) {
        std::sort(nuts.begin(), nuts.end());
        std::ofstream out(emit_nuts);
        if (!out) throw DomainRejection("cannot open " + emit_nuts + " for writing");
        for (const auto& line : nuts) out << line << "\n";
        std::cerr << "wrote " << nuts.size() << " nut graph(s) to " << emit_nuts << "\n";
    }
    return kExitOk;
}

int cmd_seeds_list() {
    for (const auto& entry : nutkit::all_seeds()) std::cout << entry.name << "\n";
    return kExitOk;
}

int cmd_seeds_show(const std::string& name) {
    const nutkit::SeedEntry* entry = nullptr;
    try {
        entry = &nutkit::seed(name);
    } catch (const std::invalid_argument& e) {
        throw DomainRejection(e.what());
    }
    std::cout << entry->graph6 << "\n";
    print_verification(entry->graph);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nut graph toolkit: verify, construct, enumerate"};
    app.require_subcommand(1);

    std::string input, file;
    auto* verify = app.add_subcommand("verify", "classify graph6 input and print its kernel certificate");
    verify->add_option("graph6", input, "graph6 string ('-' or omitted: read stdin)");
    verify->add_option("--file", file, "read newline-delimited graph6 from a file");

    int rho = 0, order = 0;
    std::string emit = "graph6";
    auto* construct = app.add_subcommand("construct", "build a certified rho-regular nut graph of order n");
    construct->add_option("--degree,-r", rho, "degree rho")->required();
    construct->add_option("--order,-n", order, "target order n")->required();
    construct->add_option("--emit", emit, "graph6 | dot | certificate");

    int vertex = 0;
    bool dot = false;
    auto* fow = app.add_subcommand("fowler", "apply the local expansion at a vertex");
    fow->add_option("graph6", input, "graph6 string ('-' or omitted: read stdin)");
    fow->add_option("--file", file, "read graph6 from a file");
    fow->add_option("--vertex,-v", vertex, "expansion vertex")->required();
    fow->add_flag("--dot", dot, "emit DOT instead of graph6");

    int eu = 0, ev = 0;
    auto* sub = app.add_subcommand("subdivide", "replace an edge by a 5-edge path (4-fold subdivision)");
    sub->add_option("graph6", input, "graph6 string ('-' or omitted: read stdin)");
    sub->add_option("--file", file, "read graph6 from a file");
    std::string edge_spec;
    sub->add_option("--edge", edge_spec, "edge as u,v")->required();
    sub->add_flag("--dot", dot, "emit DOT instead of graph6");

    int apn = 0;
    auto* ap = app.add_subcommand("antiprism", "emit the antiprism graph A_n (order 2n)");
    ap->add_option("n", apn, "half order n >= 3")->required();
    ap->add_flag("--dot", dot, "emit DOT instead of graph6");

    int corder = 0;
    std::string offsets_spec;
    auto* circ = app.add_subcommand("circulant", "emit a circulant graph");
    circ->add_option("--order,-n", corder, "number of vertices")->required();
    circ->add_option("--offsets,-s", offsets_spec, "comma-separated connection set, e.g. 1,2")->required();
    circ->add_flag("--dot", dot, "emit DOT instead of graph6");

    int eorder = 0, eregular = -1, jobs = 1;
    bool long_run = false;
    std::string emit_nuts;
    auto* en = app.add_subcommand("enumerate", "isomorph-free census of small graphs");
    en->add_option("--order,-n", eorder, "number of vertices")->required();
    en->add_option("--regular,-r", eregular, "restrict to connected rho-regular graphs");
    en->add_flag("--long-run", long_run, "allow the multi-hour quartic order-15 run");
    en->add_option("--jobs,-j", jobs, "worker threads (default 1; reports are jobs-invariant)");
    en->add_option("--emit-nuts", emit_nuts, "write every nut found as sorted graph6 lines");

    auto* seeds = app.add_subcommand("seeds", "embedded seed graphs");
    auto* seeds_list = seeds->add_subcommand("list", "list seed names");
    std::string seed_name;
    auto* seeds_show = seeds->add_subcommand("show", "print a seed's graph6 and classification");
    seeds_show->add_option("name", seed_name, "seed name")->required();
    seeds->require_subcommand(1);

    try {
        app.parse(argc, argv);

        if (*verify) return cmd_verify(input, file);
        if (*construct) return cmd_construct(rho, order, emit);
        if (*fow) return cmd_fowler(input, file, vertex, dot);
        if (*sub) {
            auto comma = edge_spec.find(',');
            if (comma == std::string::npos)
                throw nutkit::GraphError(nutkit::GraphError::Kind::BadFormat, "--edge expects u,v");
            eu = parse_int(edge_spec.substr(0, comma));
            ev = parse_int(edge_spec.substr(comma + 1));
            return cmd_subdivide(input, file, eu, ev, dot);
        }
        if (*ap) return cmd_antiprism(apn, dot);
        if (*circ) {
            std::vector<int> offsets;
            std::stringstream ss(offsets_spec);
            std::string tok;
            while (std::getline(ss, tok, ',')) offsets.push_back(parse_int(tok));
            return cmd_circulant(corder, offsets, dot);
        }
        if (*en) return cmd_enumerate(eorder, eregular, long_run, jobs, emit_nuts);
        if (*seeds_list) return cmd_seeds_list();
        if (*seeds_show) return cmd_seeds_show(seed_name);
        return kExitMalformed;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitMalformed;
    } catch (const nutkit::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const DomainRejection& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMalformed;
    }
}
