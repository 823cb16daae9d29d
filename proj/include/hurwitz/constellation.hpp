#pragma once

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

// Monodromy presentation of a degree-d branched cover of a genus-g surface:
// handle pairs (A_i, B_i) and one slot permutation per branch point, subject
// to  prod_i [A_i, B_i] * prod_j slot_j = id  with [A,B] = A*B*A^-1*B^-1,
// the whole tuple acting transitively on sheets. Labels name the slots in
// reports ("2,2,2" or "free").
struct Constellation {
    long degree = 0;
    int base_genus = 0;
    std::vector<std::pair<Perm, Perm>> handles;
    std::vector<Perm> slots;
    std::vector<std::string> labels;

    Perm total_product() const {
        Perm prod = Perm::identity(static_cast<int>(degree));
        for (const auto& [a, b] : handles) prod = prod * (a * b * a.inverse() * b.inverse());
        for (const auto& s : slots) prod = prod * s;
        return prod;
    }

    bool transitive() const {
        int d = static_cast<int>(degree);
        if (d == 0) return false;
        std::vector<char> seen(static_cast<std::size_t>(d), 0);
        std::deque<int> queue{0};
        seen[0] = 1;
        int found = 1;
        auto visit = [&](int y) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++found;
                queue.push_back(y);
            }
        };
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (const auto& [a, b] : handles) {
                visit(a[x]);
                visit(b[x]);
            }
            for (const auto& s : slots) visit(s[x]);
        }
        return found == d;
    }

    // throws with a reason when the tuple is not a connected cover
    void validate() const {
        if (degree < 1) throw std::invalid_argument("degree must be positive");
        int d = static_cast<int>(degree);
        for (const auto& [a, b] : handles)
            if (a.size() != d || b.size() != d)
                throw std::invalid_argument("handle permutation degree mismatch");
        for (const auto& s : slots)
            if (s.size() != d) throw std::invalid_argument("slot permutation degree mismatch");
        if (static_cast<int>(handles.size()) != base_genus)
            throw std::invalid_argument("handle count must equal the base genus");
        if (!labels.empty() && labels.size() != slots.size())
            throw std::invalid_argument("label count mismatch");
        if (!total_product().is_identity())
            throw std::invalid_argument("monodromy product is not the identity");
        if (!transitive()) throw std::invalid_argument("cover is not connected");
    }

    // Riemann-Hurwitz: 2 - 2g~ = d(2 - 2g) - sum over slots of (d - #cycles)
    int genus() const {
        long ram = 0;
        for (const auto& s : slots) ram += s.defect();
        long two_minus = degree * (2 - 2 * base_genus) - ram;
        if (two_minus % 2 != 0 || two_minus > 2)
            throw std::domain_error("branch data is not a surface cover");
        return static_cast<int>((2 - two_minus) / 2);
    }

    // Sheet-relabeling invariant: the lexicographically least image tuple
    // over all BFS relabelings (one per starting sheet, generators scanned
    // in fixed order). Two constellations are simultaneously conjugate iff
    // their canonical forms agree.
    std::vector<int> canonical_form() const {
        std::vector<int> best, best_label;
        scan_labelings(best, best_label);
        return best;
    }

    // The same cover relabeled so that its image tuple IS the canonical form;
    // output of searches, so runs print identically regardless of the order
    // in which witnesses were found.
    Constellation canonicalized() const {
        std::vector<int> best, best_label;
        scan_labelings(best, best_label);
        Perm s = Perm::from_images(best_label);
        Constellation c = *this;
        for (auto& [a, b] : c.handles) {
            a = a.conjugate_by(s);
            b = b.conjugate_by(s);
        }
        for (auto& sl : c.slots) sl = sl.conjugate_by(s);
        return c;
    }

    std::string str() const {
        std::string s = "degree " + std::to_string(degree) + ", base genus " +
                        std::to_string(base_genus) + "\n";
        for (std::size_t i = 0; i < handles.size(); ++i)
            s += "  handle " + std::to_string(i + 1) + ": A=" + handles[i].first.str() +
                 " B=" + handles[i].second.str() + "\n";
        for (std::size_t i = 0; i < slots.size(); ++i) {
            s += "  slot " + std::to_string(i + 1);
            if (i < labels.size() && !labels[i].empty()) s += " [" + labels[i] + "]";
            s += ": " + slots[i].str() + "\n";
        }
        return s;
    }

  private:
    void scan_labelings(std::vector<int>& best, std::vector<int>& best_label) const {
        int d = static_cast<int>(degree);
        std::vector<const Perm*> gens;
        for (const auto& [a, b] : handles) {
            gens.push_back(&a);
            gens.push_back(&b);
        }
        for (const auto& s : slots) gens.push_back(&s);

        std::vector<int> label(static_cast<std::size_t>(d));
        std::vector<int> order(static_cast<std::size_t>(d));
        for (int root = 0; root < d; ++root) {
            std::fill(label.begin(), label.end(), -1);
            label[static_cast<std::size_t>(root)] = 0;
            order[0] = root;
            int next = 1;
            for (int i = 0; i < next; ++i) {
                int x = order[static_cast<std::size_t>(i)];
                for (const Perm* g : gens) {
                    int y = (*g)[x];
                    if (label[static_cast<std::size_t>(y)] < 0) {
                        label[static_cast<std::size_t>(y)] = next;
                        order[static_cast<std::size_t>(next)] = y;
                        ++next;
                    }
                }
            }
            if (next != d) throw std::domain_error("canonical form requires a connected cover");
            std::vector<int> tuple;
            tuple.reserve(gens.size() * static_cast<std::size_t>(d));
            for (const Perm* g : gens)
                for (int i = 0; i < d; ++i)
                    tuple.push_back(label[static_cast<std::size_t>(
                        (*g)[order[static_cast<std::size_t>(i)]])]);
            if (best.empty() || tuple < best) {
                best = std::move(tuple);
                best_label = label;
            }
        }
    }
};

}  // namespace hurwitz
