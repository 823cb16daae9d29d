// Builds witnesses for the rows that resist direct search: the four rows
// reached by gluing a genus-one seed, then the degree-42 row assembled by
// stacking a degree-6 cover on top of a degree-7 one.

#include <cstdio>

#include "hurwitz/compose.hpp"
#include "hurwitz/cover_ops.hpp"

using namespace hurwitz;

int main() {
    struct Row {
        std::array<int, 3> triple;
        long degree;
    };
    const Row glued_rows[] = {{{2, 6, 6}, 6}, {{3, 3, 6}, 6}, {{2, 4, 8}, 8}, {{2, 3, 12}, 12}};

    std::puts("rows reached by gluing the two halves of the last slot:");
    for (const auto& row : glued_rows) {
        auto sig = OrbifoldSignature::make(0, {row.triple[0], row.triple[1], row.triple[2]});
        auto witness = witness_by_gluing(sig, row.degree);
        if (!witness) {
            std::printf("  %s d=%ld: no witness\n", sig.str().c_str(), row.degree);
            continue;
        }
        std::printf("  %s d=%ld: genus %d, types (", sig.str().c_str(), row.degree,
                    witness->genus());
        for (std::size_t i = 0; i < witness->slots.size(); ++i)
            std::printf("%s%s", i ? " ; " : "", profile_str(witness->slots[i].cycle_type()).c_str());
        std::puts(")");
    }

    std::puts("\nthe degree-42 row, stacked as 6 x 7:");
    SearchSpec outer_spec;
    outer_spec.degree = 7;
    outer_spec.partitions = {{2, 2, 1, 1, 1}, {3, 3, 1}, {7}};
    SearchOptions one;
    one.limit = 1;
    auto base = search_covers(outer_spec, one);
    Constellation outer = base.witnesses.front();
    outer.slots.push_back(Perm::identity(7));

    InnerRequirements req;
    req.inner_degree = 6;
    req.cycle_classes.resize(4);
    for (const auto& cycle : outer.slots[0].cycles(true))
        req.cycle_classes[0].push_back(cycle.size() == 1 ? std::vector<int>{2, 2, 2}
                                                         : std::vector<int>{1, 1, 1, 1, 1, 1});
    for (const auto& cycle : outer.slots[1].cycles(true))
        req.cycle_classes[1].push_back(cycle.size() == 1 ? std::vector<int>{3, 3}
                                                         : std::vector<int>{1, 1, 1, 1, 1, 1});
    req.roaming_slot = 3;
    req.roaming_class = {2, 1, 1, 1, 1};

    auto res = solve_compositions(outer, req, one);
    const Constellation& w = res.witnesses.front();
    std::printf("  degree %ld, genus %d\n", w.degree, w.genus());
    std::printf("%s", w.str().c_str());
    return 0;
}
