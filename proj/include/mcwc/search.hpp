// search.hpp -- exact small-instance engines.  max_code_search finds a
// maximum code as a maximum clique of the distance-compatibility graph
// (branch and bound over bitsets with greedy-coloring bounds); the first
// clique vertex is forced to the canonical minimal word, which is sound
// because part-internal coordinate permutations act transitively on the
// candidate words.  search_disjoint_packings peels optimal 2-(n,3,1)
// packings with backtracking across levels.

#pragma once

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "bounds.hpp"
#include "core.hpp"
#include "designs.hpp"

namespace mcwc {

struct SearchBudget {
    std::uint64_t node_limit = 0;   // 0 = unlimited
    double wall_seconds = 600.0;    // <= 0 = unlimited
    int workers = 1;
    std::uint64_t seed = 0;         // perturbs the greedy incumbent only
    std::size_t candidate_cap = 100000;

    void check() const {
        if (node_limit == 0 && wall_seconds <= 0)
            throw std::invalid_argument("SearchBudget: at least one limit must be finite");
        if (workers < 1) throw std::invalid_argument("SearchBudget: workers >= 1");
    }
};

enum class SearchStatus { ProvedOptimal, LowerBoundOnly, ExhaustedBudget };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::ProvedOptimal: return "proved-optimal";
        case SearchStatus::LowerBoundOnly: return "lower-bound-only";
        case SearchStatus::ExhaustedBudget: return "exhausted-budget";
    }
    return "?";
}

struct SearchOutcome {
    Code best;
    SearchStatus status;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Fixed-capacity bitset over V vertices.
struct VSet {
    std::vector<std::uint64_t> bits;
    explicit VSet(std::size_t v = 0) : bits((v + 63) / 64, 0) {}
    void set(std::size_t i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
    bool empty() const {
        for (auto b : bits)
            if (b) return false;
        return true;
    }
    int first() const {
        for (std::size_t k = 0; k < bits.size(); ++k)
            if (bits[k]) return static_cast<int>(k * 64 + std::countr_zero(bits[k]));
        return -1;
    }
    void and_with(const VSet& o) {
        for (std::size_t k = 0; k < bits.size(); ++k) bits[k] &= o.bits[k];
    }
    void and_not(const VSet& o) {
        for (std::size_t k = 0; k < bits.size(); ++k) bits[k] &= ~o.bits[k];
    }
};

inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Enumerates all codewords matching the shape's weight profile, in
/// lexicographic per-part-support order; the first word is the canonical one.
inline std::vector<std::vector<std::vector<int>>> candidate_supports(const Shape& sh) {
    std::vector<std::vector<std::vector<int>>> per_part(sh.parts());
    for (int i = 0; i < sh.parts(); ++i) {
        std::vector<int> universe(sh.lengths()[i]);
        std::iota(universe.begin(), universe.end(), 0);
        per_part[i] = subsets_of(universe, sh.weights()[i]);
    }
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur(sh.parts());
    auto rec = [&](auto&& self, int part) -> void {
        if (part == sh.parts()) {
            out.push_back(cur);
            return;
        }
        for (const auto& s : per_part[part]) {
            cur[part] = s;
            self(self, part + 1);
        }
    };
    rec(rec, 0);
    return out;
}

class CliqueEngine {
  public:
    CliqueEngine(std::vector<VSet> adj, const SearchBudget& budget)
        : adj_(std::move(adj)),
          v_(adj_.size()),
          best_size_(0),
          nodes_(0),
          stop_(false),
          node_limit_(budget.node_limit),
          deadline_(budget.wall_seconds > 0
                        ? std::chrono::steady_clock::now() +
                              std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(budget.wall_seconds))
                        : std::chrono::steady_clock::time_point::max()) {}

    /// Maximum clique inside the subgraph induced by `sub`, seeded with an
    /// incumbent of the given size.  Returns true when fully exhausted.
    bool run(const VSet& sub, const std::vector<int>& incumbent, int workers) {
        best_size_.store(static_cast<int>(incumbent.size()));
        {
            std::lock_guard<std::mutex> lk(witness_mutex_);
            best_witness_ = incumbent;
        }
        std::vector<int> order;
        std::vector<int> colors;
        color_sort(sub, order, colors);
        std::atomic<std::size_t> next{0};
        const std::size_t tasks = order.size();
        auto worker = [&] {
            std::vector<int> r;
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks || stop_.load(std::memory_order_relaxed)) break;
                const std::size_t idx = tasks - 1 - i;  // largest color bound first
                const int v = order[idx];
                if (1 + colors[idx] <= best_size_.load(std::memory_order_relaxed)) continue;
                VSet p = sub;
                for (std::size_t j = idx; j < tasks; ++j) p.reset(order[j]);
                p.and_with(adj_[v]);
                r.assign(1, v);
                expand(p, r);
                r.clear();
            }
        };
        if (workers <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        return !stop_.load();
    }

    int best_size() const { return best_size_.load(); }
    std::vector<int> best_witness() {
        std::lock_guard<std::mutex> lk(witness_mutex_);
        return best_witness_;
    }
    std::uint64_t nodes() const { return nodes_.load(); }

  private:
    void note_node() {
        std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if ((n & 0x3ff) == 0) {
            if (node_limit_ && n > node_limit_) stop_.store(true, std::memory_order_relaxed);
            if (std::chrono::steady_clock::now() > deadline_)
                stop_.store(true, std::memory_order_relaxed);
        }
    }

    void color_sort(const VSet& p, std::vector<int>& order, std::vector<int>& colors) const {
        order.clear();
        colors.clear();
        VSet uncolored = p;
        int c = 0;
        while (!uncolored.empty()) {
            ++c;
            VSet q = uncolored;
            while (!q.empty()) {
                int v = q.first();
                order.push_back(v);
                colors.push_back(c);
                uncolored.reset(v);
                q.reset(v);
                q.and_not(adj_[v]);
            }
        }
    }

    void maybe_update(const std::vector<int>& r) {
        int sz = static_cast<int>(r.size());
        int cur = best_size_.load();
        while (sz > cur && !best_size_.compare_exchange_weak(cur, sz)) {
        }
        if (sz > cur) {
            std::lock_guard<std::mutex> lk(witness_mutex_);
            if (static_cast<int>(best_witness_.size()) < sz) best_witness_ = r;
        }
    }

    void expand(VSet& p, std::vector<int>& r) {
        note_node();
        if (stop_.load(std::memory_order_relaxed)) return;
        if (p.empty()) {
            maybe_update(r);
            return;
        }
        std::vector<int> order;
        std::vector<int> colors;
        color_sort(p, order, colors);
        for (std::size_t i = order.size(); i-- > 0;) {
            const int v = order[i];
            if (static_cast<int>(r.size()) + colors[i] <= best_size_.load(std::memory_order_relaxed))
                return;
            VSet p2 = p;
            p2.and_with(adj_[v]);
            r.push_back(v);
            if (p2.empty())
                maybe_update(r);
            else
                expand(p2, r);
            r.pop_back();
            p.reset(v);
            if (stop_.load(std::memory_order_relaxed)) return;
        }
    }

    std::vector<VSet> adj_;
    std::size_t v_;
    std::atomic<int> best_size_;
    std::vector<int> best_witness_;
    std::mutex witness_mutex_;
    std::atomic<std::uint64_t> nodes_;
    std::atomic<bool> stop_;
    std::uint64_t node_limit_;
    std::chrono::steady_clock::time_point deadline_;
};

}  // namespace detail

/// Finds a maximum MCWC(shape) as a maximum clique in the graph on all
/// weight-conforming words with edges at distance >= d.
inline SearchOutcome max_code_search(const Shape& shape, const SearchBudget& budget) {
    budget.check();
    Int total = 1;
    for (int i = 0; i < shape.parts(); ++i)
        total *= binomial(shape.lengths()[i], shape.weights()[i]);
    if (total > Int(budget.candidate_cap))
        throw std::runtime_error("max_code_search: candidate words exceed the cap (" +
                                 total.str() + " > " + std::to_string(budget.candidate_cap) + ")");
    auto sups = detail::candidate_supports(shape);
    const std::size_t v = sups.size();
    std::vector<Codeword> words;
    words.reserve(v);
    for (const auto& s : sups) words.push_back(Codeword::from_supports(shape.lengths(), s));

    std::vector<detail::VSet> adj(v, detail::VSet(v));
    for (std::size_t a = 0; a < v; ++a) {
        auto ca = words[a].chunks();
        for (std::size_t b = a + 1; b < v; ++b)
            if (raw_distance(ca, words[b].chunks()) >= shape.distance()) {
                adj[a].set(b);
                adj[b].set(a);
            }
    }

    // Some maximum clique contains word 0 (coordinate permutations are
    // distance-preserving and transitive on candidates), so search N(0).
    std::vector<int> incumbent{0};
    {
        std::uint64_t st = budget.seed;
        std::vector<int> perm(v);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = v; i > 1; --i)
            std::swap(perm[i - 1], perm[detail::splitmix64(st) % i]);
        for (int cand : perm) {
            if (cand == 0) continue;
            bool ok = true;
            for (int x : incumbent)
                if (!adj[x].test(cand)) {
                    ok = false;
                    break;
                }
            if (ok) incumbent.push_back(cand);
        }
    }

    detail::VSet sub(v);
    for (std::size_t b = 0; b < v; ++b)
        if (adj[0].test(b)) sub.set(b);
    std::vector<int> seed_clique(incumbent.begin() + 1, incumbent.end());

    detail::CliqueEngine engine(std::move(adj), budget);
    bool complete = engine.run(sub, seed_clique, budget.workers);

    std::vector<Codeword> chosen{words[0]};
    for (int idx : engine.best_witness()) chosen.push_back(words[idx]);
    Code best(shape, std::move(chosen));
    if (!verify_mcwc(best).passed())
        throw std::logic_error("max_code_search: witness failed verification");
    SearchOutcome out{std::move(best),
                      complete ? SearchStatus::ProvedOptimal : SearchStatus::LowerBoundOnly,
                      engine.nodes()};
    return out;
}

// ---------------------------------------------------------------------------
// Disjoint packing families
// ---------------------------------------------------------------------------

namespace detail {

using PairMask = unsigned __int128;  // C(13,2) = 78 pair bits

inline int first_zero_bit(PairMask m) {
    std::uint64_t lo = static_cast<std::uint64_t>(~m);
    if (lo) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(~m >> 64));
}

struct TripleCtx {
    int n;
    std::vector<Triple> triples;      // lex order
    std::vector<PairMask> pairmask;   // 3 bits set among C(n,2)
    std::vector<std::array<int, 3>> pairidx;

    explicit TripleCtx(int n_) : n(n_) {
        std::vector<std::vector<int>> pidx(n, std::vector<int>(n, -1));
        int pc = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pidx[a][b] = pc++;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    triples.push_back({a, b, c});
                    pairidx.push_back({pidx[a][b], pidx[a][c], pidx[b][c]});
                    PairMask m = 0;
                    for (int q : pairidx.back()) m |= PairMask{1} << q;
                    pairmask.push_back(m);
                }
    }
};

struct PackingSearch {
    const TripleCtx& ctx;
    std::uint64_t node_limit;
    std::chrono::steady_clock::time_point deadline;
    std::uint64_t nodes = 0;

    bool out_of_budget() {
        ++nodes;
        if (node_limit && nodes > node_limit) return true;
        return (nodes & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline;
    }

    /// Enumerates packings of exactly `target` triples drawn from `avail`
    /// (lex-ordered indices); calls sink for each, stops when sink returns
    /// true.  Throws on budget exhaustion.
    template <class Sink>
    bool enumerate(const std::vector<int>& avail, int target, Sink&& sink) {
        std::vector<int> chosen;
        std::vector<char> in_avail(ctx.triples.size(), 0);
        for (int t : avail) in_avail[t] = 1;
        // pure exact-cover regime: a packing of target triples covering every
        // pair exactly once; branch on the smallest uncovered pair
        const bool steiner = 3 * target == ctx.n * (ctx.n - 1) / 2;
        std::vector<std::vector<int>> by_pair(ctx.n * (ctx.n - 1) / 2);
        if (steiner)
            for (int t : avail)
                for (int q : ctx.pairidx[t]) by_pair[q].push_back(t);
        PairMask used = 0;

        auto rec_steiner = [&](auto&& self) -> bool {
            if (out_of_budget()) throw std::runtime_error("search_disjoint_packings: budget exhausted");
            if (static_cast<int>(chosen.size()) == target) return sink(chosen);
            int q = first_zero_bit(used);  // smallest uncovered pair index
            for (int t : by_pair[q]) {
                if (!in_avail[t] || (used & ctx.pairmask[t])) continue;
                used |= ctx.pairmask[t];
                chosen.push_back(t);
                if (self(self)) return true;
                chosen.pop_back();
                used &= ~ctx.pairmask[t];
            }
            return false;
        };
        auto rec_general = [&](auto&& self, std::size_t from) -> bool {
            if (out_of_budget()) throw std::runtime_error("search_disjoint_packings: budget exhausted");
            if (static_cast<int>(chosen.size()) == target) return sink(chosen);
            for (std::size_t i = from; i < avail.size(); ++i) {
                if (avail.size() - i < static_cast<std::size_t>(target) - chosen.size()) break;
                int t = avail[i];
                if (used & ctx.pairmask[t]) continue;
                used |= ctx.pairmask[t];
                chosen.push_back(t);
                if (self(self, i + 1)) return true;
                chosen.pop_back();
                used &= ~ctx.pairmask[t];
            }
            return false;
        };
        if (steiner) return rec_steiner(rec_steiner);
        return rec_general(rec_general, 0);
    }
};

}  // namespace detail

/// Backtracking search for `count` pairwise disjoint optimal 2-(n,3,1)
/// packings; when count = M(n)+1 is feasible (n = 4,5 mod 6, n >= 10) the
/// final packing is the leftover of a full partition.
inline TriplePackingFamily search_disjoint_packings(int n, int count, const SearchBudget& budget) {
    budget.check();
    if (n < 3 || n > 13)
        throw std::invalid_argument("search_disjoint_packings: supported range is 3 <= n <= 13");
    if (count < 1) throw std::invalid_argument("search_disjoint_packings: count >= 1");
    const int M = max_disjoint_optimal_packings(n);
    const int extra = (n >= 10 && (n % 6 == 4 || n % 6 == 5)) ? 1 : 0;
    if (count > M + extra)
        throw std::invalid_argument("search_disjoint_packings: infeasible count " +
                                    std::to_string(count) + " (max " + std::to_string(M + extra) +
                                    " for n=" + std::to_string(n) + ")");
    const bool want_leftover = count == M + extra && extra == 1;
    const int optimal_levels = want_leftover ? M : count;
    const int target = static_cast<int>(packing_number_3_2(n).value);

    detail::TripleCtx ctx(n);
    detail::PackingSearch ps{
        ctx, budget.node_limit,
        budget.wall_seconds > 0
            ? std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.wall_seconds))
            : std::chrono::steady_clock::time_point::max()};

    std::vector<std::vector<int>> levels;
    std::vector<char> taken(ctx.triples.size(), 0);

    auto rec = [&](auto&& self, int level) -> bool {
        if (level == optimal_levels) {
            if (!want_leftover) return true;
            detail::PairMask used = 0;
            std::vector<int> rest;
            for (std::size_t t = 0; t < ctx.triples.size(); ++t) {
                if (taken[t]) continue;
                if (used & ctx.pairmask[t]) return false;  // leftover is not a packing
                used |= ctx.pairmask[t];
                rest.push_back(static_cast<int>(t));
            }
            levels.push_back(std::move(rest));
            return true;
        }
        std::vector<int> avail;
        for (std::size_t t = 0; t < ctx.triples.size(); ++t)
            if (!taken[t]) avail.push_back(static_cast<int>(t));
        return ps.enumerate(avail, target, [&](const std::vector<int>& chosen) {
            for (int t : chosen) taken[t] = 1;
            levels.push_back(chosen);
            if (self(self, level + 1)) return true;
            levels.pop_back();
            for (int t : chosen) taken[t] = 0;
            return false;
        });
    };
    if (!rec(rec, 0))
        throw std::runtime_error("search_disjoint_packings: exhausted search space without success");

    TriplePackingFamily fam;
    fam.n = n;
    fam.optimal_count = optimal_levels;
    for (const auto& lev : levels) {
        std::vector<Triple> P;
        for (int t : lev) P.push_back(ctx.triples[t]);
        fam.packings.push_back(std::move(P));
    }
    fam.validate();
    return fam;
}

}  // namespace mcwc
