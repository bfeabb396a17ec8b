#include "nutkit/catalog.hpp"

#include <stdexcept>

namespace nutkit {

namespace {

struct RawSeed {
    const char* name;
    int order;
    int degree;  // -1: not regular
    std::vector<std::pair<int, int>> edges;
    const char* graph6;
};

// Seed edge lists on 0-based labels. The 7-, 8-, 12-vertex entries and the
// order-20/22/26 cubics and odd quartics come from published drawings; the
// order-28 cubic is the Fowler expansion of the order-22 seed at vertex 0.
const std::vector<RawSeed>& raw_seeds() {
    static const std::vector<RawSeed> seeds = {
        {"nut7_a", 7, -1, {{0,1},{0,4},{1,2},{2,3},{3,4},{4,5},{4,6},{5,6}},
         "FhcGW"},
        {"nut7_b", 7, -1, {{0,1},{0,2},{0,4},{0,5},{1,2},{2,3},{2,4},{2,5},{2,6},{3,4},{4,5},{5,6}},
         "FxmhG"},
        {"nut7_c", 7, -1, {{0,1},{0,3},{0,4},{0,6},{1,2},{2,3},{2,4},{2,5},{3,4},{3,5},{4,5},{5,6}},
         "Flk{G"},
        {"antiprism4", 8, 4, {{0,1},{0,3},{0,4},{0,5},{1,2},{1,5},{1,6},{2,3},{2,6},{2,7},{3,4},{3,7},{4,5},{4,7},{5,6},{6,7}},
         "GlfJHs"},
        {"frucht", 12, 3, {{0,1},{0,9},{0,10},{1,2},{1,8},{2,3},{2,8},{3,4},{3,11},{4,5},{4,11},{5,6},{5,10},{6,7},{6,9},{7,8},{7,9},{10,11}},
         "KhCGGD`_sGB@"},
        {"cubic20", 20, 3, {{0,1},{0,9},{0,10},{1,2},{1,11},{2,3},{2,12},{3,4},{3,13},{4,5},{4,14},{5,6},{5,15},{6,7},{6,16},{7,8},{7,17},{8,9},{8,18},{9,19},{10,12},{10,14},{11,17},{11,19},{12,16},{13,15},{13,17},{14,18},{15,19},{16,18}},
         "ShCGGC@_K?G?GAC?@@?GA?__@D?@@O?g_"},
        {"cubic22", 22, 3, {{0,1},{0,4},{0,5},{1,2},{1,6},{2,3},{2,11},{3,12},{3,13},{4,5},{4,16},{5,16},{6,7},{6,17},{7,8},{7,14},{8,9},{8,14},{9,10},{9,15},{10,11},{10,15},{11,20},{12,13},{12,21},{13,21},{14,18},{15,19},{16,17},{17,18},{18,19},{19,20},{20,21}},
         "UhaI?C@?G?c@C?C?_K??oB??A?G?@G??c?C@??oG"},
        {"cubic26", 26, 3, {{0,1},{0,2},{0,3},{1,4},{1,5},{2,6},{2,7},{3,7},{3,8},{4,9},{4,10},{5,6},{5,11},{6,12},{7,13},{8,14},{8,15},{9,15},{9,16},{10,11},{10,17},{11,18},{12,13},{12,18},{13,14},{14,19},{15,20},{16,21},{16,22},{17,22},{17,23},{18,19},{19,20},{20,24},{21,24},{21,25},{22,23},{23,25},{24,25}},
         "YsP@H_OA?O?`?_?O_CG@_?C??G??K??@C??P??A???W???`???K???D_"},
        {"cubic28", 28, 3, {{0,22},{0,23},{0,24},{1,2},{1,6},{1,25},{2,3},{2,11},{3,12},{3,13},{4,5},{4,16},{4,26},{5,16},{5,27},{6,7},{6,17},{7,8},{7,14},{8,9},{8,14},{9,10},{9,15},{10,11},{10,15},{11,20},{12,13},{12,21},{13,21},{14,18},{15,19},{16,17},{17,18},{18,19},{19,20},{20,21},{22,26},{22,27},{23,25},{23,27},{24,25},{24,26}},
         "[H?I?C@?G?c@C?C?_K??oB??A?G?@G??c?C@??oK???O???_???O??@`??@OG??W"},
        {"quartic12", 12, 4, {{0,5},{0,6},{0,9},{0,11},{1,6},{1,7},{1,8},{1,9},{2,6},{2,8},{2,9},{2,10},{3,7},{3,8},{3,10},{3,11},{4,8},{4,9},{4,10},{4,11},{5,7},{5,10},{5,11},{6,7}},
         "K?AFAlwy@wR_"},
        {"quartic15", 15, 4, {{0,6},{0,8},{0,10},{0,11},{1,6},{1,9},{1,11},{1,12},{2,7},{2,9},{2,11},{2,12},{3,7},{3,10},{3,12},{3,14},{4,8},{4,9},{4,13},{4,14},{5,8},{5,12},{5,13},{5,14},{6,10},{6,13},{7,11},{7,13},{8,14},{9,10}},
         "N??E@aKYCc{G\\?BoBc?"},
        {"quartic17", 17, 4, {{0,6},{0,10},{0,15},{0,16},{1,7},{1,8},{1,11},{1,12},{2,7},{2,9},{2,14},{2,15},{3,8},{3,11},{3,12},{3,14},{4,9},{4,10},{4,13},{4,14},{5,11},{5,12},{5,15},{5,16},{6,13},{6,14},{6,16},{7,12},{7,13},{8,10},{8,15},{9,11},{9,13},{10,16}},
         "P??CB@OICPIaTOAsFODH?`a?"},
        {"quartic19", 19, 4, {{0,7},{0,8},{0,13},{0,17},{1,7},{1,11},{1,12},{1,16},{2,8},{2,12},{2,14},{2,17},{3,9},{3,11},{3,15},{3,18},{4,9},{4,12},{4,13},{4,15},{5,10},{5,14},{5,15},{5,16},{6,10},{6,16},{6,17},{6,18},{7,11},{7,13},{8,13},{8,14},{9,16},{9,18},{10,17},{10,18},{11,14},{12,15}},
         "R???EA_E?KIGY?aWCc_wCPcAaG?co?"},
        {"quartic21", 21, 4, {{0,9},{0,11},{0,13},{0,14},{1,9},{1,13},{1,18},{1,20},{2,10},{2,12},{2,14},{2,15},{3,10},{3,13},{3,15},{3,16},{4,11},{4,12},{4,19},{4,20},{5,11},{5,17},{5,18},{5,20},{6,12},{6,17},{6,19},{6,20},{7,14},{7,15},{7,16},{7,19},{8,14},{8,16},{8,18},{8,19},{9,16},{9,17},{10,15},{10,18},{11,13},{12,17}},
         "T??????o@_P_I_s@SK@aOC[?EQAHO?V?@M??"},
    };
    return seeds;
}

std::vector<SeedEntry> build_seeds() {
    std::vector<SeedEntry> out;
    for (const auto& raw : raw_seeds()) {
        SeedEntry entry{
            raw.name,
            Graph(raw.order, raw.edges),
            GraphClassTag::Nut,
            raw.order,
            raw.degree >= 0 ? std::optional<int>(raw.degree) : std::nullopt,
            raw.graph6,
        };
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace

const std::vector<SeedEntry>& all_seeds() {
    static const std::vector<SeedEntry> seeds = build_seeds();
    return seeds;
}

const SeedEntry& seed(std::string_view name) {
    for (const auto& entry : all_seeds())
        if (entry.name == name) return entry;
    throw std::invalid_argument("unknown seed name: " + std::string(name));
}

}  // namespace nutkit
