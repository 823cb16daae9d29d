#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Permutation of {0..n-1}. Products compose left first: (a*b)[x] = b[a[x]],
// i.e. a*b means "apply a, then b". Sheet monodromy around an oriented loop
// concatenates in travel order under this convention.
class Perm {
  public:
    Perm() = default;
    explicit Perm(int n) : img_(static_cast<std::size_t>(n)) {
        std::iota(img_.begin(), img_.end(), 0);
    }

    static Perm identity(int n) { return Perm(n); }

    static Perm from_images(std::vector<int> images) {
        std::vector<char> seen(images.size(), 0);
        for (int v : images) {
            if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("not a permutation");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        Perm p;
        p.img_ = std::move(images);
        return p;
    }

    // cycles on 0-based points; omitted points are fixed
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        Perm p(n);
        std::vector<char> touched(static_cast<std::size_t>(n), 0);
        for (const auto& c : cycles) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                int from = c[i], to = c[(i + 1) % c.size()];
                if (from < 0 || from >= n) throw std::invalid_argument("cycle point out of range");
                if (touched[static_cast<std::size_t>(from)])
                    throw std::invalid_argument("overlapping cycles");
                touched[static_cast<std::size_t>(from)] = 1;
                p.img_[static_cast<std::size_t>(from)] = to;
            }
        }
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator[](int x) const { return img_[static_cast<std::size_t>(x)]; }

    bool is_identity() const {
        for (int x = 0; x < size(); ++x)
            if (img_[static_cast<std::size_t>(x)] != x) return false;
        return true;
    }

    friend Perm operator*(const Perm& a, const Perm& b) {
        if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
        Perm r;
        r.img_.resize(a.img_.size());
        for (int x = 0; x < a.size(); ++x)
            r.img_[static_cast<std::size_t>(x)] = b[a[x]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (int x = 0; x < size(); ++x) r.img_[static_cast<std::size_t>((*this)[x])] = x;
        return r;
    }

    // s^{-1} * a * s: maps s[x] -> s[a[x]], so cycles get relabeled through s
    Perm conjugate_by(const Perm& s) const {
        if (s.size() != size()) throw std::invalid_argument("size mismatch");
        Perm r;
        r.img_.resize(img_.size());
        for (int x = 0; x < size(); ++x)
            r.img_[static_cast<std::size_t>(s[x])] = s[(*this)[x]];
        return r;
    }

    // each cycle starts at its smallest point; cycles ordered by that point
    std::vector<std::vector<int>> cycles(bool include_fixed = false) const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(img_.size(), 0);
        for (int x = 0; x < size(); ++x) {
            if (seen[static_cast<std::size_t>(x)]) continue;
            std::vector<int> c;
            int y = x;
            do {
                seen[static_cast<std::size_t>(y)] = 1;
                c.push_back(y);
                y = (*this)[y];
            } while (y != x);
            if (c.size() > 1 || include_fixed) out.push_back(std::move(c));
        }
        return out;
    }

    // partition of n, descending, fixed points included
    std::vector<int> cycle_type() const {
        std::vector<int> t;
        for (const auto& c : cycles(true)) t.push_back(static_cast<int>(c.size()));
        std::sort(t.rbegin(), t.rend());
        return t;
    }

    int num_cycles() const {
        int k = 0;
        std::vector<char> seen(img_.size(), 0);
        for (int x = 0; x < size(); ++x) {
            if (seen[static_cast<std::size_t>(x)]) continue;
            ++k;
            int y = x;
            do {
                seen[static_cast<std::size_t>(y)] = 1;
                y = (*this)[y];
            } while (y != x);
        }
        return k;
    }

    // ramification weight sum (e-1) over cycles = n - #cycles
    int defect() const { return size() - num_cycles(); }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    const std::vector<int>& images() const { return img_; }

    std::string str() const {
        auto cs = cycles(false);
        if (cs.empty()) return "()";
        std::string s;
        for (const auto& c : cs) {
            s += "(";
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) s += " ";
                s += std::to_string(c[i] + 1);  // printed 1-based
            }
            s += ")";
        }
        return s;
    }

  private:
    std::vector<int> img_;
};

// Class representative: fixed points first, then cycles by ascending length,
// each on a consecutive block of points.
inline Perm canonical_of_type(int n, std::vector<int> type) {
    std::sort(type.begin(), type.end());
    long total = 0;
    for (int t : type) {
        if (t < 1) throw std::invalid_argument("cycle lengths must be positive");
        total += t;
    }
    if (total != n) throw std::invalid_argument("type does not partition the degree");
    std::vector<std::vector<int>> cs;
    int next = 0;
    for (int t : type) {
        std::vector<int> c(static_cast<std::size_t>(t));
        std::iota(c.begin(), c.end(), next);
        next += t;
        if (t > 1) cs.push_back(std::move(c));
    }
    return Perm::from_cycles(n, cs);
}

// |conjugacy class| = n! / prod_len(len^mult * mult!)
inline Int conjugacy_class_size(int n, const std::vector<int>& type) {
    Int num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    std::vector<int> t = type;
    std::sort(t.begin(), t.end());
    long total = 0;
    Int den = 1;
    std::size_t i = 0;
    while (i < t.size()) {
        std::size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        Int mult_fact = 1;
        for (std::size_t k = 2; k <= j - i; ++k) mult_fact *= static_cast<long>(k);
        Int len_pow = 1;
        for (std::size_t k = 0; k < j - i; ++k) len_pow *= t[i];
        den *= mult_fact * len_pow;
        for (std::size_t k = i; k < j; ++k) total += t[k];
        i = j;
    }
    if (total != n) throw std::invalid_argument("type does not partition the degree");
    return num / den;
}

namespace detail {

inline void enumerate_class_rec(int n, std::vector<int>& remaining, std::vector<int>& img,
                                std::vector<char>& used,
                                const std::function<void(const Perm&)>& f) {
    int start = -1;
    for (int x = 0; x < n; ++x)
        if (!used[static_cast<std::size_t>(x)]) {
            start = x;
            break;
        }
    if (start < 0) {
        f(Perm::from_images(img));
        return;
    }
    used[static_cast<std::size_t>(start)] = 1;
    int prev_len = -1;
    for (std::size_t li = 0; li < remaining.size(); ++li) {
        int len = remaining[li];
        if (len == prev_len) continue;  // cycle through start: one length choice suffices
        prev_len = len;
        remaining.erase(remaining.begin() + static_cast<long>(li));
        // ordered choice of the len-1 remaining cycle points
        std::vector<int> cyc{start};
        std::function<void()> extend = [&]() {
            if (static_cast<int>(cyc.size()) == len) {
                for (std::size_t i = 0; i < cyc.size(); ++i)
                    img[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
                enumerate_class_rec(n, remaining, img, used, f);
                return;
            }
            for (int x = start + 1; x < n; ++x) {
                if (used[static_cast<std::size_t>(x)]) continue;
                used[static_cast<std::size_t>(x)] = 1;
                cyc.push_back(x);
                extend();
                cyc.pop_back();
                used[static_cast<std::size_t>(x)] = 0;
            }
        };
        extend();
        remaining.insert(remaining.begin() + static_cast<long>(li), len);
    }
    used[static_cast<std::size_t>(start)] = 0;
}

}  // namespace detail

// Calls f once per permutation of {0..n-1} with the given cycle type, in a
// fixed deterministic order.
inline void enumerate_class(int n, std::vector<int> type,
                            const std::function<void(const Perm&)>& f) {
    std::sort(type.begin(), type.end(), std::greater<int>());
    long total = 0;
    for (int t : type) {
        if (t < 1) throw std::invalid_argument("cycle lengths must be positive");
        total += t;
    }
    if (total != n) throw std::invalid_argument("type does not partition the degree");
    std::vector<int> img(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    detail::enumerate_class_rec(n, type, img, used, f);
}

}  // namespace hurwitz
