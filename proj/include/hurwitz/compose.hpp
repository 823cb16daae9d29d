#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/constellation.hpp"
#include "hurwitz/perm.hpp"
#include "hurwitz/search.hpp"

namespace hurwitz {

// Stacks a second cover on top of `outer`. Sheet pairs (x, z) are numbered
// x*e + z; slot i sends (x, z) to (outer_i(x), u[i][x](z)). u[i][x] is the
// inner motion picked up when the i-th loop is traced starting on outer
// sheet x.
//
// The composite closes iff, for every sheet x, the inner motions collected
// while x is dragged once around all slots multiply to the identity. That
// is checked here; transitivity is the caller's concern.
inline Constellation compose_covers(const Constellation& outer, long inner_degree,
                                    const std::vector<std::vector<Perm>>& u) {
    if (outer.base_genus != 0)
        throw std::invalid_argument("composition over a base with handles is not supported");
    int m = static_cast<int>(outer.degree);
    int e = static_cast<int>(inner_degree);
    std::size_t n = outer.slots.size();
    if (e < 1) throw std::invalid_argument("inner degree must be positive");
    if (u.size() != n) throw std::invalid_argument("need one inner family per slot");
    for (const auto& fam : u) {
        if (static_cast<int>(fam.size()) != m)
            throw std::invalid_argument("need one inner permutation per outer sheet");
        for (const auto& p : fam)
            if (p.size() != e) throw std::invalid_argument("inner permutation degree mismatch");
    }

    for (int x = 0; x < m; ++x) {
        Perm w = Perm::identity(e);
        int sheet = x;
        for (std::size_t i = 0; i < n; ++i) {
            w = w * u[i][static_cast<std::size_t>(sheet)];
            sheet = outer.slots[i][sheet];
        }
        if (!(w == Perm::identity(e)))
            throw std::invalid_argument("inner data does not close up over sheet " +
                                        std::to_string(x + 1));
    }

    Constellation out;
    out.degree = static_cast<long>(m) * e;
    out.base_genus = 0;
    out.labels = outer.labels;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> img(static_cast<std::size_t>(m * e));
        for (int x = 0; x < m; ++x) {
            const Perm& inner = u[i][static_cast<std::size_t>(x)];
            int xx = outer.slots[i][x];
            for (int z = 0; z < e; ++z)
                img[static_cast<std::size_t>(x * e + z)] = xx * e + inner[z];
        }
        out.slots.push_back(Perm::from_images(img));
    }
    return out;
}

// Constraints for the top cover, phrased at the branch points of the middle
// curve: one cycle class per cycle of each outer slot (the motion around
// that point must land in the class), plus at most one "roaming" slot whose
// outer permutation is the identity and where exactly one sheet carries a
// prescribed nontrivial class while the rest stay unbranched. The roaming
// slot models an extra simple branch point whose position upstairs is not
// pinned down in advance.
struct InnerRequirements {
    long inner_degree = 0;
    // cycle_classes[i][c]: class for cycle c of slot i, in cycles(true)
    // order, each sorted descending. An empty list for a slot means every
    // cycle there is unbranched.
    std::vector<std::vector<std::vector<int>>> cycle_classes;
    int roaming_slot = -1;
    std::vector<int> roaming_class;
};

namespace detail {

inline bool trivial_class(const std::vector<int>& cls) {
    for (int v : cls)
        if (v != 1) return false;
    return true;
}

}  // namespace detail

// Enumerates covers of the base that factor through `outer` and branch as
// prescribed. One slot with unbranched requirements is solved for from the
// sheet relations instead of being enumerated; everything else walks cycle
// by cycle, with the last undetermined edge of each cycle drawn from the
// coset meeting the required class. Results are connected, canonical,
// deduplicated, sorted.
inline SearchResult solve_compositions(const Constellation& outer, const InnerRequirements& req,
                                       const SearchOptions& opt = {}) {
    SearchResult result;
    if (outer.base_genus != 0)
        throw std::invalid_argument("composition over a base with handles is not supported");
    outer.validate();
    int m = static_cast<int>(outer.degree);
    int e = static_cast<int>(req.inner_degree);
    int n = static_cast<int>(outer.slots.size());
    if (e < 1) throw std::invalid_argument("inner degree must be positive");
    if (req.cycle_classes.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("need one requirement list per slot");

    std::vector<std::vector<std::vector<int>>> cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        cyc[static_cast<std::size_t>(i)] = outer.slots[static_cast<std::size_t>(i)].cycles(true);

    // normalize requirements; validate shapes
    std::vector<std::vector<std::vector<int>>> want(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& given = req.cycle_classes[static_cast<std::size_t>(i)];
        auto& w = want[static_cast<std::size_t>(i)];
        if (given.empty()) {
            w.assign(cyc[static_cast<std::size_t>(i)].size(),
                     std::vector<int>(static_cast<std::size_t>(e), 1));
        } else if (given.size() == cyc[static_cast<std::size_t>(i)].size()) {
            w = given;
            for (auto& cls : w) {
                std::sort(cls.begin(), cls.end(), std::greater<int>());
                long s = 0;
                for (int v : cls) {
                    if (v < 1) throw std::invalid_argument("cycle class entries must be positive");
                    s += v;
                }
                if (s != e)
                    throw std::invalid_argument("cycle class must partition the inner degree");
            }
        } else {
            throw std::invalid_argument("requirement count does not match cycle count");
        }
    }

    std::vector<int> roam_class = req.roaming_class;
    if (req.roaming_slot >= 0) {
        if (req.roaming_slot != n - 1)
            throw std::invalid_argument("the roaming slot must be the last slot");
        if (!(outer.slots[static_cast<std::size_t>(req.roaming_slot)] == Perm::identity(m)))
            throw std::invalid_argument("the roaming slot must sit over an unbranched point");
        for (const auto& cls : want[static_cast<std::size_t>(req.roaming_slot)])
            if (!detail::trivial_class(cls))
                throw std::invalid_argument("roaming slot requirements must stay unbranched");
        std::sort(roam_class.begin(), roam_class.end(), std::greater<int>());
        long s = 0;
        for (int v : roam_class) s += v;
        if (s != e || detail::trivial_class(roam_class))
            throw std::invalid_argument("roaming class must be a nontrivial partition");
    }

    // pick the slot recovered from the sheet relations: the last one that is
    // branched downstairs but carries only unbranched requirements
    int derived = -1;
    for (int i = n - 1; i >= 0; --i) {
        if (i == req.roaming_slot) continue;
        if (outer.slots[static_cast<std::size_t>(i)] == Perm::identity(m)) continue;
        bool all_trivial = true;
        for (const auto& cls : want[static_cast<std::size_t>(i)])
            if (!detail::trivial_class(cls)) {
                all_trivial = false;
                break;
            }
        if (all_trivial) {
            derived = i;
            break;
        }
    }
    if (derived < 0)
        throw std::invalid_argument(
            "need one branched slot with unbranched requirements to solve for");

    // spanning tree over the enumerated slots only; reachability holds since
    // the derived slot is a word in the others
    std::vector<char> tree(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0);
    {
        std::vector<char> seen(static_cast<std::size_t>(m), 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int i = 0; i < n; ++i) {
                if (i == derived || i == req.roaming_slot) continue;
                int y = outer.slots[static_cast<std::size_t>(i)][x];
                if (y == x || seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = 1;
                tree[static_cast<std::size_t>(x * n + i)] = 1;
                queue.push_back(y);
            }
        }
        if (queue.size() != static_cast<std::size_t>(m))
            throw std::invalid_argument("outer cover is not connected");
    }

    // sheet relations: dragging sheet x once around all slots must give the
    // identity upstairs; record where the derived slot's edge sits
    struct Relation {
        std::vector<std::pair<int, int>> pre;   // (slot, sheet) before the derived edge
        std::vector<std::pair<int, int>> post;  // after it
        int derived_sheet = 0;
    };
    std::vector<Relation> rel(static_cast<std::size_t>(m));
    std::vector<int> rel_of_derived_sheet(static_cast<std::size_t>(m), -1);
    for (int x = 0; x < m; ++x) {
        int sheet = x;
        Relation& r = rel[static_cast<std::size_t>(x)];
        for (int i = 0; i < n; ++i) {
            if (i == derived)
                r.derived_sheet = sheet;
            else if (i < derived)
                r.pre.emplace_back(i, sheet);
            else
                r.post.emplace_back(i, sheet);
            sheet = outer.slots[static_cast<std::size_t>(i)][sheet];
        }
        rel_of_derived_sheet[static_cast<std::size_t>(r.derived_sheet)] = x;
    }

    // enumeration plan: per cycle of each enumerated slot, the free edges in
    // cycle order; the last one is drawn from prefix^-1 * class
    struct CyclePlan {
        int slot = 0;
        std::vector<int> free_sheets;
        const std::vector<int>* cls = nullptr;
    };
    std::vector<CyclePlan> plans;
    for (int i = 0; i < n; ++i) {
        if (i == derived || i == req.roaming_slot) continue;
        for (std::size_t c = 0; c < cyc[static_cast<std::size_t>(i)].size(); ++c) {
            const auto& cycle = cyc[static_cast<std::size_t>(i)][c];
            CyclePlan p;
            p.slot = i;
            p.cls = &want[static_cast<std::size_t>(i)][c];
            for (int sheet : cycle)
                if (!tree[static_cast<std::size_t>(sheet * n + i)]) p.free_sheets.push_back(sheet);
            if (p.free_sheets.empty()) {
                if (!detail::trivial_class(*p.cls)) {
                    result.status = SearchStatus::Infeasible;
                    result.message = "forced unbranched cycle contradicts its requirement";
                    result.exhaustive = true;
                    return result;
                }
                continue;
            }
            plans.push_back(std::move(p));
        }
    }

    std::map<std::vector<int>, std::vector<Perm>> class_pool;
    auto class_elems = [&](const std::vector<int>& cls) -> const std::vector<Perm>& {
        auto it = class_pool.find(cls);
        if (it == class_pool.end()) {
            std::vector<Perm> v;
            enumerate_class(e, cls, [&](const Perm& p) { v.push_back(p); });
            it = class_pool.emplace(cls, std::move(v)).first;
        }
        return it->second;
    };

    // budget: the full inner symmetric group on every free edge except the
    // last of each cycle, the required class on the last
    bool need_sym = false;
    {
        double est = 1.0;
        double fact = 1.0;
        for (int k = 2; k <= e; ++k) fact *= k;
        for (const auto& p : plans) {
            for (std::size_t j = 0; j + 1 < p.free_sheets.size(); ++j) est *= fact;
            est *= conjugacy_class_size(e, *p.cls).convert_to<double>();
            if (p.free_sheets.size() > 1) need_sym = true;
            if (est > 1e18) break;
        }
        if (!opt.force && est > static_cast<double>(opt.leaf_budget)) {
            result.status = SearchStatus::ResourceLimit;
            result.message =
                "estimated composition search space exceeds the leaf budget "
                "(use force to override)";
            return result;
        }
    }
    std::vector<Perm> sym;
    if (need_sym) sym = detail::all_perms(e);

    // u[i][x], filled in as the walk proceeds; untouched entries stay id
    std::vector<std::vector<Perm>> u(
        static_cast<std::size_t>(n),
        std::vector<Perm>(static_cast<std::size_t>(m), Perm::identity(e)));

    detail::WitnessPool pool;
    pool.limit = opt.limit;
    std::vector<Perm> derived_val(static_cast<std::size_t>(m), Perm::identity(e));
    bool stopped = false;

    auto emit = [&](int roam_sheet, const Perm& roam_perm) {
        for (int x = 0; x < m; ++x)
            u[static_cast<std::size_t>(derived)][static_cast<std::size_t>(x)] =
                derived_val[static_cast<std::size_t>(x)];
        if (roam_sheet >= 0)
            u[static_cast<std::size_t>(req.roaming_slot)][static_cast<std::size_t>(roam_sheet)] =
                roam_perm;
        Constellation comp = compose_covers(outer, e, u);
        if (roam_sheet >= 0)
            u[static_cast<std::size_t>(req.roaming_slot)][static_cast<std::size_t>(roam_sheet)] =
                Perm::identity(e);
        if (!comp.transitive()) return;
        if (pool.offer(comp)) throw detail::StopEnumeration{};
    };

    auto leaf = [&]() {
        // recover the derived slot assuming the roaming edge is trivial
        for (int x = 0; x < m; ++x) {
            const Relation& r = rel[static_cast<std::size_t>(x)];
            Perm p = Perm::identity(e);
            for (auto [s, sh] : r.pre)
                p = p * u[static_cast<std::size_t>(s)][static_cast<std::size_t>(sh)];
            Perm q = Perm::identity(e);
            for (auto [s, sh] : r.post)
                q = q * u[static_cast<std::size_t>(s)][static_cast<std::size_t>(sh)];
            derived_val[static_cast<std::size_t>(r.derived_sheet)] = p.inverse() * q.inverse();
        }
        const auto& dcycles = cyc[static_cast<std::size_t>(derived)];
        if (req.roaming_slot < 0) {
            for (const auto& cycle : dcycles) {
                Perm w = Perm::identity(e);
                for (int sheet : cycle) w = w * derived_val[static_cast<std::size_t>(sheet)];
                if (!(w == Perm::identity(e))) return;
            }
            emit(-1, Perm::identity(e));
            return;
        }
        // with a roaming edge, exactly one derived cycle may fail to close;
        // the failure pins down the roaming transformation
        int bad = -1;
        int bad_count = 0;
        for (std::size_t c = 0; c < dcycles.size(); ++c) {
            Perm w = Perm::identity(e);
            for (int sheet : dcycles[c]) w = w * derived_val[static_cast<std::size_t>(sheet)];
            if (!(w == Perm::identity(e))) {
                bad = static_cast<int>(c);
                ++bad_count;
            }
        }
        if (bad_count != 1) return;  // all closed means no roaming branch at all
        const auto& cycle = dcycles[static_cast<std::size_t>(bad)];
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            int sheet = cycle[j];
            int s = rel_of_derived_sheet[static_cast<std::size_t>(sheet)];
            // the roaming edge perturbs this entry on the left:
            // prefix * (delta * v_j) * v_{j+1} ... = id
            Perm prefix = Perm::identity(e);
            for (std::size_t t = 0; t < j; ++t)
                prefix = prefix * derived_val[static_cast<std::size_t>(cycle[t])];
            Perm rest = Perm::identity(e);
            for (std::size_t t = j; t < cycle.size(); ++t)
                rest = rest * derived_val[static_cast<std::size_t>(cycle[t])];
            Perm delta = prefix.inverse() * rest.inverse();
            if (delta == Perm::identity(e)) continue;
            const Relation& r = rel[static_cast<std::size_t>(s)];
            Perm p = Perm::identity(e);
            for (auto [sl, sh] : r.pre)
                p = p * u[static_cast<std::size_t>(sl)][static_cast<std::size_t>(sh)];
            Perm tau = p * delta.inverse() * p.inverse();
            if (tau.cycle_type() != roam_class) continue;
            Perm save = derived_val[static_cast<std::size_t>(sheet)];
            derived_val[static_cast<std::size_t>(sheet)] = delta * save;
            emit(s, tau);
            derived_val[static_cast<std::size_t>(sheet)] = save;
        }
    };

    std::function<void(std::size_t)> walk = [&](std::size_t pi) {
        if (pi == plans.size()) {
            leaf();
            return;
        }
        const CyclePlan& p = plans[pi];
        auto& fam = u[static_cast<std::size_t>(p.slot)];
        std::size_t k = p.free_sheets.size();
        // the cycle holonomy is the product of the free edges in cycle order
        // (forced edges are trivial); the last edge lands it in the class
        std::function<void(std::size_t, const Perm&)> fill = [&](std::size_t j, const Perm& acc) {
            if (j + 1 == k) {
                for (const Perm& w : class_elems(*p.cls)) {
                    fam[static_cast<std::size_t>(p.free_sheets[j])] = acc.inverse() * w;
                    walk(pi + 1);
                }
                fam[static_cast<std::size_t>(p.free_sheets[j])] = Perm::identity(e);
                return;
            }
            for (const Perm& g : sym) {
                fam[static_cast<std::size_t>(p.free_sheets[j])] = g;
                fill(j + 1, acc * g);
            }
            fam[static_cast<std::size_t>(p.free_sheets[j])] = Perm::identity(e);
        };
        fill(0, Perm::identity(e));
    };

    try {
        walk(0);
    } catch (const detail::StopEnumeration&) {
        stopped = true;
    }

    result.exhaustive = !stopped;
    result.witnesses.reserve(pool.classes.size());
    for (auto& [k, w] : pool.classes) result.witnesses.push_back(std::move(w));
    if (result.witnesses.empty()) {
        result.status = SearchStatus::Infeasible;
        result.message = "no composition satisfies the branching requirements";
    } else {
        result.status = SearchStatus::Ok;
        result.cover_genus = static_cast<int>(result.witnesses.front().genus());
    }
    return result;
}

}  // namespace hurwitz
