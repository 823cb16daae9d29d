#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/classify.hpp"
#include "hurwitz/constellation.hpp"
#include "hurwitz/perm.hpp"
#include "hurwitz/search.hpp"

namespace hurwitz {

// Appends a simple branch point whose transposition glues the two cycles of
// `slot` through points a and b. The slot picks up the factor (a b) on the
// right; the appended slot is that transposition pushed through the suffix
// product, so the total monodromy stays the identity. Cycle count of the
// slot drops by one and the cover genus rises by one.
//
// a and b in the same cycle would cut it in two instead; that is a different
// operation, so it is rejected.
inline Constellation merge_cycles(const Constellation& c, int slot, int a, int b) {
    int d = static_cast<int>(c.degree);
    if (slot < 0 || slot >= static_cast<int>(c.slots.size()))
        throw std::invalid_argument("slot index out of range");
    if (a < 0 || a >= d || b < 0 || b >= d || a == b)
        throw std::invalid_argument("need two distinct points");

    const Perm& s = c.slots[static_cast<std::size_t>(slot)];
    int y = s[a];
    bool same = false;
    while (y != a) {
        if (y == b) {
            same = true;
            break;
        }
        y = s[y];
    }
    if (same)
        throw std::invalid_argument("points lie in the same cycle; gluing needs two cycles");

    Perm t = Perm::from_cycles(d, {{a, b}});
    Constellation out = c;
    out.slots[static_cast<std::size_t>(slot)] = s * t;

    Perm suffix = Perm::identity(d);
    for (std::size_t i = static_cast<std::size_t>(slot) + 1; i < c.slots.size(); ++i)
        suffix = suffix * c.slots[i];
    out.slots.push_back(suffix.inverse() * t * suffix);
    if (!out.labels.empty()) {
        out.labels[static_cast<std::size_t>(slot)] =
            profile_str(out.slots[static_cast<std::size_t>(slot)].cycle_type());
        out.labels.push_back("free");
    }
    return out;
}

// Branch data of a genus-one cover that reaches the given admissible row by
// gluing the two equal cycles of its final slot. Only some rows admit one:
// those whose last profile entry is a single full cycle that splits in half.
inline std::optional<std::pair<SearchSpec, int>> doubling_seed(const OrbifoldSignature& sig,
                                                               long degree) {
    struct Entry {
        std::array<int, 3> triple;
        long d;
        std::vector<std::vector<int>> parts;
    };
    static const std::vector<Entry> table = {
        {{2, 6, 6}, 6, {{2, 2, 2}, {6}, {3, 3}}},
        {{3, 3, 6}, 6, {{3, 3}, {3, 3}, {3, 3}}},
        {{2, 4, 8}, 8, {{2, 2, 2, 2}, {4, 4}, {4, 4}}},
        {{2, 3, 12}, 12, {{2, 2, 2, 2, 2, 2}, {3, 3, 3, 3}, {6, 6}}},
    };
    for (const auto& en : table) {
        OrbifoldSignature s =
            OrbifoldSignature::make(0, {en.triple[0], en.triple[1], en.triple[2]});
        if (!(sig.canonical() == s) || degree != en.d) continue;
        SearchSpec seed;
        seed.degree = en.d;
        seed.partitions = en.parts;
        seed.labels.clear();
        for (const auto& p : en.parts) seed.labels.push_back(profile_str(p));
        return std::make_pair(seed, static_cast<int>(en.parts.size()) - 1);
    }
    return std::nullopt;
}

// Runs the seed search and performs the gluing; the result realizes the
// row's branch data with one free simple branch point.
inline std::optional<Constellation> witness_by_gluing(const OrbifoldSignature& sig, long degree,
                                                      const SearchOptions& opt = {}) {
    auto seed = doubling_seed(sig, degree);
    if (!seed) return std::nullopt;
    SearchOptions o = opt;
    if (o.limit == 0) o.limit = 1;
    auto res = search_covers(seed->first, o);
    if (res.witnesses.empty()) return std::nullopt;
    const Constellation& base = res.witnesses.front();
    const Perm& target = base.slots[static_cast<std::size_t>(seed->second)];
    auto cycles = target.cycles(false);
    if (cycles.size() < 2) return std::nullopt;
    Constellation glued = merge_cycles(base, seed->second, cycles[0][0], cycles[1][0]);
    glued.validate();
    return glued;
}

}  // namespace hurwitz
