#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "hurwitz/constellation.hpp"
#include "hurwitz/perm.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class SearchStatus { Ok, Infeasible, ResourceLimit };

// One partition of the degree per branch point (parts in any order). The
// cover genus is forced by the data; the search finds the realizations.
struct SearchSpec {
    long degree = 0;
    int base_genus = 0;
    std::vector<std::vector<int>> partitions;
    std::vector<std::string> labels;  // optional names for reports
};

struct SearchOptions {
    long limit = 0;  // stop after this many classes; 0 = enumerate all
    int threads = 1;
    long max_degree = 12;           // refusal threshold without force
    bool force = false;             // ignore degree and budget guards
    long leaf_budget = 200000000;   // estimated leaves before refusing
    long filter_budget = 4000000;   // largest class filtered to orbit reps
    long handle_budget = 20000;     // largest (d!)^(2g) handle space
};

struct SearchResult {
    SearchStatus status = SearchStatus::Ok;
    bool exhaustive = false;  // true when every class is in `witnesses`
    int cover_genus = -1;
    std::vector<Constellation> witnesses;  // canonicalized, sorted
    std::string message;
    Int leaf_estimate = 0;
};

namespace detail {

struct StopEnumeration {};

// Invariant of the conjugation action by permutations fixing every pinned
// point: per cycle, the cyclic word of pinned ids and anonymous-run lengths
// (rotated to start at the smallest pinned id), plus the multiset of fully
// anonymous cycle lengths. Equal keys = conjugate by such a permutation.
inline std::vector<int> pattern_key(const Perm& p, const std::vector<char>& pinned) {
    constexpr int kSep = -1000000000;
    std::vector<std::vector<int>> mixed;
    std::vector<int> anon_lens;
    for (const auto& c : p.cycles(true)) {
        std::size_t start = 0;
        int smallest = -1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!pinned[static_cast<std::size_t>(c[i])]) continue;
            if (smallest < 0 || c[i] < smallest) {
                smallest = c[i];
                start = i;
            }
        }
        if (smallest < 0) {
            anon_lens.push_back(static_cast<int>(c.size()));
            continue;
        }
        std::vector<int> key;
        int run = 0;
        for (std::size_t k = 0; k < c.size(); ++k) {
            int x = c[(start + k) % c.size()];
            if (pinned[static_cast<std::size_t>(x)]) {
                if (run) {
                    key.push_back(-run);
                    run = 0;
                }
                key.push_back(x + 1);
            } else {
                ++run;
            }
        }
        if (run) key.push_back(-run);
        mixed.push_back(std::move(key));
    }
    std::sort(mixed.begin(), mixed.end());
    std::sort(anon_lens.begin(), anon_lens.end());
    std::vector<int> out;
    for (const auto& k : mixed) {
        out.insert(out.end(), k.begin(), k.end());
        out.push_back(kSep);
    }
    out.insert(out.end(), anon_lens.begin(), anon_lens.end());
    return out;
}

// One representative per orbit of the class under the pointwise stabilizer
// of the pinned set. Conjugating a solution tuple by such a permutation
// fixes the anchored slot, so restricting one enumerated slot to these
// representatives loses no conjugacy class.
inline std::vector<Perm> pattern_class_reps(int n, const std::vector<int>& type,
                                            const std::vector<char>& pinned) {
    std::set<std::vector<int>> seen;
    std::vector<Perm> reps;
    enumerate_class(n, type, [&](const Perm& p) {
        if (seen.insert(pattern_key(p, pinned)).second) reps.push_back(p);
    });
    return reps;
}

inline std::vector<Perm> all_perms(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

struct WitnessPool {
    std::map<std::vector<int>, Constellation> classes;
    long limit = 0;

    // returns true when the limit was just reached
    bool offer(const Constellation& c) {
        Constellation canon = c.canonicalized();
        std::vector<int> key;
        {
            // the canonical form of a canonicalized cover is its own tuple
            for (const auto& [a, b] : canon.handles) {
                key.insert(key.end(), a.images().begin(), a.images().end());
                key.insert(key.end(), b.images().begin(), b.images().end());
            }
            for (const auto& s : canon.slots)
                key.insert(key.end(), s.images().begin(), s.images().end());
        }
        classes.emplace(std::move(key), std::move(canon));
        return limit > 0 && static_cast<long>(classes.size()) >= limit;
    }
};

}  // namespace detail

// Enumerates connected covers with the given branch data up to simultaneous
// conjugation. One slot is pinned to its canonical class representative, the
// largest remaining class is recovered from the product relation, and the
// first enumerated slot is restricted to orbit representatives relative to
// the pinned slot's fixed points. Handle permutations (base genus >= 1) are
// enumerated exhaustively, which keeps those reductions valid.
inline SearchResult search_covers(const SearchSpec& spec, const SearchOptions& opt = {}) {
    if (spec.degree < 1) throw std::invalid_argument("degree must be positive");
    if (spec.base_genus < 0) throw std::invalid_argument("negative base genus");
    if (!spec.labels.empty() && spec.labels.size() != spec.partitions.size())
        throw std::invalid_argument("label count mismatch");
    const int d = static_cast<int>(spec.degree);
    const int n = static_cast<int>(spec.partitions.size());

    std::vector<std::vector<int>> types;
    long ram = 0;
    for (const auto& part : spec.partitions) {
        long sum = 0;
        for (int e : part) {
            if (e < 1) throw std::invalid_argument("partition parts must be positive");
            sum += e;
        }
        if (sum != d) throw std::invalid_argument("partition does not sum to the degree");
        std::vector<int> t = part;
        std::sort(t.rbegin(), t.rend());
        ram += d - static_cast<long>(t.size());
        types.push_back(std::move(t));
    }

    SearchResult res;
    long two_minus = static_cast<long>(d) * (2 - 2 * spec.base_genus) - ram;
    if (two_minus % 2 != 0) {
        res.status = SearchStatus::Infeasible;
        res.message = "total ramification is odd, no cover exists";
        return res;
    }
    if (two_minus > 2) {
        res.status = SearchStatus::Infeasible;
        res.message = "branch data forces negative cover genus";
        return res;
    }
    res.cover_genus = static_cast<int>((2 - two_minus) / 2);

    if (d > opt.max_degree && !opt.force) {
        res.status = SearchStatus::ResourceLimit;
        res.message = "degree exceeds the refusal threshold (use force to override)";
        return res;
    }

    detail::WitnessPool pool;
    pool.limit = opt.limit;

    if (d == 1) {
        Constellation c;
        c.degree = 1;
        c.base_genus = spec.base_genus;
        for (int i = 0; i < spec.base_genus; ++i)
            c.handles.emplace_back(Perm::identity(1), Perm::identity(1));
        c.slots.assign(static_cast<std::size_t>(n), Perm::identity(1));
        c.labels = spec.labels;
        pool.offer(c);
        res.exhaustive = true;
        res.witnesses.reserve(pool.classes.size());
        for (auto& [k, w] : pool.classes) res.witnesses.push_back(std::move(w));
        return res;
    }

    // handle space
    Int handle_space = 1;
    std::vector<Perm> sym;
    if (spec.base_genus > 0) {
        Int fact = 1;
        for (int i = 2; i <= d; ++i) fact *= i;
        for (int i = 0; i < 2 * spec.base_genus; ++i) handle_space *= fact;
        if (handle_space > opt.handle_budget && !opt.force) {
            res.status = SearchStatus::ResourceLimit;
            res.message = "handle enumeration too large (use force to override)";
            return res;
        }
        sym = detail::all_perms(d);
    }

    // slot roles: anchor the last slot, derive the largest remaining class
    int anchor_idx = n - 1, derived_idx = -1;
    std::vector<Int> sizes(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) sizes[static_cast<std::size_t>(i)] = conjugacy_class_size(d, types[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n - 1; ++i)
        if (derived_idx < 0 || sizes[static_cast<std::size_t>(i)] >= sizes[static_cast<std::size_t>(derived_idx)])
            derived_idx = i;
    std::vector<int> enumerated;
    for (int i = 0; i < n - 1; ++i)
        if (i != derived_idx) enumerated.push_back(i);

    Perm anchor;
    std::vector<char> pinned;
    std::vector<Perm> first_reps;
    bool first_pruned = false;
    if (n >= 2) {
        anchor = canonical_of_type(d, types[static_cast<std::size_t>(anchor_idx)]);
        pinned.assign(static_cast<std::size_t>(d), 0);
        for (int x = 0; x < d; ++x)
            if (anchor[x] != x) pinned[static_cast<std::size_t>(x)] = 1;
        if (!enumerated.empty()) {
            const auto& ftype = types[static_cast<std::size_t>(enumerated.front())];
            if (sizes[static_cast<std::size_t>(enumerated.front())] <= opt.filter_budget) {
                first_reps = detail::pattern_class_reps(d, ftype, pinned);
                first_pruned = true;
            }
        }
    }

    Int leaves = handle_space;
    for (std::size_t j = 0; j < enumerated.size(); ++j) {
        if (j == 0 && first_pruned)
            leaves *= static_cast<long>(first_reps.size());
        else
            leaves *= sizes[static_cast<std::size_t>(enumerated[j])];
    }
    res.leaf_estimate = leaves;
    if (leaves > opt.leaf_budget && !opt.force) {
        res.status = SearchStatus::ResourceLimit;
        res.message = "estimated search space " + leaves.str() +
                      " exceeds the leaf budget (use force to override)";
        return res;
    }

    bool stopped = false;

    // recursive slot enumeration for a fixed handle product; `sink` collects
    auto run_slots = [&](const Perm& hp, const std::vector<std::pair<Perm, Perm>>& handles,
                         detail::WitnessPool& sink, std::size_t rep_lo, std::size_t rep_hi) {
        std::vector<Perm> slots(static_cast<std::size_t>(n), Perm::identity(d));
        if (n >= 2) slots[static_cast<std::size_t>(anchor_idx)] = anchor;

        auto finish = [&]() {
            int k = (n >= 2) ? derived_idx : 0;
            if (n >= 1) {
                Perm prefix = hp;
                for (int i = 0; i < k; ++i) prefix = prefix * slots[static_cast<std::size_t>(i)];
                Perm suffix = Perm::identity(d);
                for (int i = k + 1; i < n; ++i)
                    suffix = suffix * slots[static_cast<std::size_t>(i)];
                Perm derived = prefix.inverse() * suffix.inverse();
                if (derived.cycle_type() != types[static_cast<std::size_t>(k)]) return;
                slots[static_cast<std::size_t>(k)] = derived;
            } else if (!hp.is_identity()) {
                return;
            }
            Constellation c;
            c.degree = d;
            c.base_genus = spec.base_genus;
            c.handles = handles;
            c.slots = slots;
            c.labels = spec.labels;
            if (!c.transitive()) return;
            if (sink.offer(c)) throw detail::StopEnumeration{};
        };

        std::function<void(std::size_t)> walk = [&](std::size_t pos) {
            if (pos == enumerated.size()) {
                finish();
                return;
            }
            int idx = enumerated[pos];
            if (pos == 0 && first_pruned) {
                for (std::size_t r = rep_lo; r < rep_hi; ++r) {
                    slots[static_cast<std::size_t>(idx)] = first_reps[r];
                    walk(pos + 1);
                }
                return;
            }
            enumerate_class(d, types[static_cast<std::size_t>(idx)], [&](const Perm& p) {
                slots[static_cast<std::size_t>(idx)] = p;
                walk(pos + 1);
            });
        };
        walk(0);
    };

    auto run_handles = [&](detail::WitnessPool& sink, std::size_t rep_lo, std::size_t rep_hi) {
        if (spec.base_genus == 0) {
            run_slots(Perm::identity(d), {}, sink, rep_lo, rep_hi);
            return;
        }
        std::vector<std::size_t> odo(static_cast<std::size_t>(2 * spec.base_genus), 0);
        while (true) {
            std::vector<std::pair<Perm, Perm>> handles;
            Perm hp = Perm::identity(d);
            for (int i = 0; i < spec.base_genus; ++i) {
                const Perm& a = sym[odo[static_cast<std::size_t>(2 * i)]];
                const Perm& b = sym[odo[static_cast<std::size_t>(2 * i + 1)]];
                handles.emplace_back(a, b);
                hp = hp * (a * b * a.inverse() * b.inverse());
            }
            run_slots(hp, handles, sink, rep_lo, rep_hi);
            std::size_t j = 0;
            for (; j < odo.size(); ++j) {
                if (++odo[j] < sym.size()) break;
                odo[j] = 0;
            }
            if (j == odo.size()) break;
        }
    };

    bool parallel = opt.threads > 1 && opt.limit == 0 && spec.base_genus == 0 &&
                    first_pruned && first_reps.size() >= 2;
    if (parallel) {
        int nt = std::min<int>(opt.threads, static_cast<int>(first_reps.size()));
        std::vector<detail::WitnessPool> pools(static_cast<std::size_t>(nt));
        std::vector<std::thread> workers;
        std::size_t chunk = (first_reps.size() + static_cast<std::size_t>(nt) - 1) /
                            static_cast<std::size_t>(nt);
        for (int t = 0; t < nt; ++t) {
            std::size_t lo = static_cast<std::size_t>(t) * chunk;
            std::size_t hi = std::min(first_reps.size(), lo + chunk);
            workers.emplace_back([&, t, lo, hi]() {
                run_handles(pools[static_cast<std::size_t>(t)], lo, hi);
            });
        }
        for (auto& w : workers) w.join();
        for (auto& p : pools)
            for (auto& [k, c] : p.classes) pool.classes.emplace(k, std::move(c));
    } else {
        try {
            run_handles(pool, 0, first_pruned ? first_reps.size() : 0);
        } catch (const detail::StopEnumeration&) {
            stopped = true;
        }
    }

    res.exhaustive = !stopped;
    res.witnesses.reserve(pool.classes.size());
    for (auto& [k, w] : pool.classes) res.witnesses.push_back(std::move(w));
    if (res.witnesses.empty() && res.exhaustive)
        res.message = "exhaustive enumeration found no connected cover";
    return res;
}

}  // namespace hurwitz
