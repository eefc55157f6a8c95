// Test-side oracles, deliberately independent of the library's search and
// bound implementations: plain recursive maximizers over explicit candidate
// lists with counting-only pruning.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "mcwc/core.hpp"

namespace oracle {

/// Maximum subset of `items` that is pairwise `compatible`, by plain
/// branch-and-bound over item indices (prune on remaining count only).
inline int max_pairwise_set(int count, const std::function<bool(int, int)>& compatible) {
    std::vector<std::vector<char>> ok(count, std::vector<char>(count, 0));
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) ok[a][b] = a != b && compatible(a, b);
    int best = 0;
    {
        // greedy incumbent so the count prune bites early
        std::vector<int> g;
        for (int v = 0; v < count; ++v) {
            bool fits = true;
            for (int u : g)
                if (!ok[u][v]) {
                    fits = false;
                    break;
                }
            if (fits) g.push_back(v);
        }
        best = static_cast<int>(g.size()) - 1;  // strictly-improving search re-finds it
        if (best < 0) best = 0;
    }
    std::vector<int> chosen;
    std::vector<int> live(count);
    for (int i = 0; i < count; ++i) live[i] = i;
    auto rec = [&](auto&& self, const std::vector<int>& cand) -> void {
        if (static_cast<int>(chosen.size()) > best) best = static_cast<int>(chosen.size());
        if (static_cast<int>(chosen.size() + cand.size()) <= best) return;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (static_cast<int>(chosen.size() + cand.size() - i) <= best) break;
            int v = cand[i];
            std::vector<int> next;
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (ok[v][cand[j]]) next.push_back(cand[j]);
            chosen.push_back(v);
            self(self, next);
            chosen.pop_back();
        }
    };
    rec(rec, live);
    return best;
}

/// Exhaustive maximum size of an MCWC(shape): enumerate all conforming
/// words, then maximize a pairwise distance-compatible set.
inline int max_code_size(const mcwc::Shape& sh) {
    std::vector<mcwc::Codeword> words;
    std::vector<std::vector<int>> cur(sh.parts());
    auto rec = [&](auto&& self, int part) -> void {
        if (part == sh.parts()) {
            words.push_back(mcwc::Codeword::from_supports(sh.lengths(), cur));
            return;
        }
        std::vector<int> universe(sh.lengths()[part]);
        std::iota(universe.begin(), universe.end(), 0);
        for (const auto& s : mcwc::detail::subsets_of(universe, sh.weights()[part])) {
            cur[part] = s;
            self(self, part + 1);
        }
    };
    rec(rec, 0);
    return max_pairwise_set(static_cast<int>(words.size()), [&](int a, int b) {
        return mcwc::distance(words[a], words[b]) >= sh.distance();
    });
}

/// Exhaustive packing number D(n,k,t): maximum set of k-subsets of an
/// n-set such that no t-subset lies in two of them.
inline int packing_number(int n, int k, int t) {
    std::vector<int> universe(n);
    std::iota(universe.begin(), universe.end(), 0);
    auto blocks = mcwc::detail::subsets_of(universe, k);
    auto share_t = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
        return static_cast<int>(inter.size()) >= t;
    };
    return max_pairwise_set(static_cast<int>(blocks.size()),
                            [&](int a, int b) { return !share_t(blocks[a], blocks[b]); });
}

}  // namespace oracle
