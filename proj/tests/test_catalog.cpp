#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nutkit/canonical.hpp"
#include "nutkit/catalog.hpp"
#include "nutkit/constructions.hpp"
#include "nutkit/kernel.hpp"

using namespace nutkit;

TEST_CASE("the catalog holds 14 seeds in deterministic order") {
    const auto& seeds = all_seeds();
    REQUIRE(seeds.size() == 14);
    std::vector<std::string> names;
    for (const auto& e : seeds) names.push_back(e.name);
    CHECK(names == std::vector<std::string>{"nut7_a", "nut7_b", "nut7_c", "antiprism4", "frucht", "cubic20",
                                            "cubic22", "cubic26", "cubic28", "quartic12", "quartic15",
                                            "quartic17", "quartic19", "quartic21"});
}

TEST_CASE("every seed classifies as a nut graph (self-validation)") {
    for (const auto& entry : all_seeds()) {
        CAPTURE(entry.name);
        auto cls = classify(entry.graph);
        CHECK(cls.tag == entry.expected_class);
        CHECK(cls.tag == GraphClassTag::Nut);
        CHECK(cls.nullity == 1);
        REQUIRE(cls.witness.has_value());
        for (const auto& e : *cls.witness) CHECK(e != 0);
    }
}

TEST_CASE("orders, degrees and bit-exact graph6 regression") {
    for (const auto& entry : all_seeds()) {
        CAPTURE(entry.name);
        CHECK(entry.graph.order() == entry.expected_order);
        if (entry.expected_degree) CHECK(entry.graph.is_regular(*entry.expected_degree));
        CHECK(write_graph6(entry.graph) == entry.graph6);
        CHECK(parse_graph6(entry.graph6).edges() == entry.graph.edges());
    }
    CHECK(seed("frucht").graph.edge_count() == 18);
    CHECK(seed("quartic15").graph.edge_count() == 30);
    CHECK(seed("cubic20").graph.order() == 20);
}

TEST_CASE("seed lookup errors on unknown names") {
    CHECK_THROWS_AS(seed("not_a_seed"), std::invalid_argument);
}

TEST_CASE("the three 7-vertex seeds are pairwise non-isomorphic") {
    std::set<CanonicalForm> forms;
    forms.insert(canonical_form(seed("nut7_a").graph));
    forms.insert(canonical_form(seed("nut7_b").graph));
    forms.insert(canonical_form(seed("nut7_c").graph));
    CHECK(forms.size() == 3);
}

TEST_CASE("seed antiprism4 is the generated antiprism") {
    CHECK(canonical_form(seed("antiprism4").graph) == canonical_form(antiprism(4)));
}
