// core.hpp -- partitioned binary codewords, Hamming machinery and the
// code <-> generalized-packing equivalence.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcwc {

/// Parameter vector of an MCWC instance: part lengths n_i, part weights w_i
/// and an even minimum distance d.  Derived quantities (delta, W, t) are
/// always recomputed from the stored fields.
class Shape {
  public:
    Shape(std::vector<int> lengths, std::vector<int> weights, int distance)
        : lengths_(std::move(lengths)), weights_(std::move(weights)), distance_(distance) {
        if (lengths_.empty()) throw std::invalid_argument("Shape: need at least one part");
        if (weights_.size() != lengths_.size())
            throw std::invalid_argument("Shape: lengths/weights size mismatch");
        for (std::size_t i = 0; i < lengths_.size(); ++i) {
            if (lengths_[i] <= 0) throw std::invalid_argument("Shape: part length must be positive");
            if (weights_[i] < 0 || weights_[i] > lengths_[i])
                throw std::invalid_argument("Shape: need 0 <= w_i <= n_i");
        }
        if (distance_ <= 0 || distance_ % 2 != 0)
            throw std::invalid_argument("Shape: distance must be even and positive");
    }

    static Shape uniform(int m, int n, int d, int w) {
        return Shape(std::vector<int>(m, n), std::vector<int>(m, w), d);
    }

    int parts() const { return static_cast<int>(lengths_.size()); }
    const std::vector<int>& lengths() const { return lengths_; }
    const std::vector<int>& weights() const { return weights_; }
    int distance() const { return distance_; }

    int delta() const { return distance_ / 2; }
    int total_weight() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }
    int total_length() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0); }
    /// Packing strength t = W - delta + 1 (may be <= 0 for spread-out codes).
    int strength() const { return total_weight() - delta() + 1; }

    bool is_uniform() const {
        return std::all_of(lengths_.begin(), lengths_.end(),
                           [&](int n) { return n == lengths_[0]; }) &&
               std::all_of(weights_.begin(), weights_.end(),
                           [&](int w) { return w == weights_[0]; });
    }

    bool operator==(const Shape&) const = default;

  private:
    std::vector<int> lengths_;
    std::vector<int> weights_;
    int distance_;
};

/// A partitioned binary word.  Bits are packed 64 per chunk, most significant
/// bit first, so that chunk-wise integer comparison coincides with
/// lexicographic comparison of the canonical 0/1 serialization.
class Codeword {
  public:
    Codeword(std::vector<int> part_lengths, const std::string& bits)
        : profile_(std::move(part_lengths)) {
        const int n = total_length();
        if (static_cast<int>(bits.size()) != n)
            throw std::invalid_argument("Codeword: bit string length does not match profile");
        chunks_.assign((n + 63) / 64, 0);
        for (int p = 0; p < n; ++p) {
            if (bits[p] == '1')
                set(p);
            else if (bits[p] != '0')
                throw std::invalid_argument("Codeword: serialization must be over {0,1}");
        }
    }

    static Codeword zeros(std::vector<int> part_lengths) {
        Codeword w;
        w.profile_ = std::move(part_lengths);
        w.chunks_.assign((w.total_length() + 63) / 64, 0);
        return w;
    }

    /// Build from per-part support sets (0-based positions within each part).
    static Codeword from_supports(const std::vector<int>& part_lengths,
                                  const std::vector<std::vector<int>>& supports) {
        if (supports.size() != part_lengths.size())
            throw std::invalid_argument("Codeword: one support per part required");
        Codeword w = zeros(part_lengths);
        int off = 0;
        for (std::size_t i = 0; i < part_lengths.size(); ++i) {
            for (int x : supports[i]) {
                if (x < 0 || x >= part_lengths[i])
                    throw std::invalid_argument("Codeword: support element out of range");
                w.set(off + x);
            }
            off += part_lengths[i];
        }
        return w;
    }

    const std::vector<int>& profile() const { return profile_; }
    int total_length() const { return std::accumulate(profile_.begin(), profile_.end(), 0); }

    bool get(int pos) const { return (chunks_[pos >> 6] >> (63 - (pos & 63))) & 1u; }
    void set(int pos) { chunks_[pos >> 6] |= std::uint64_t{1} << (63 - (pos & 63)); }

    std::span<const std::uint64_t> chunks() const { return chunks_; }

    int weight() const {
        int s = 0;
        for (auto c : chunks_) s += std::popcount(c);
        return s;
    }

    int part_weight(int part) const {
        int off = 0;
        for (int i = 0; i < part; ++i) off += profile_[i];
        int s = 0;
        for (int p = off; p < off + profile_[part]; ++p) s += get(p);
        return s;
    }

    std::string serialize() const {
        std::string s(total_length(), '0');
        for (int p = 0; p < total_length(); ++p)
            if (get(p)) s[p] = '1';
        return s;
    }

    std::vector<std::vector<int>> supports() const {
        std::vector<std::vector<int>> out(profile_.size());
        int off = 0;
        for (std::size_t i = 0; i < profile_.size(); ++i) {
            for (int x = 0; x < profile_[i]; ++x)
                if (get(off + x)) out[i].push_back(x);
            off += profile_[i];
        }
        return out;
    }

    bool operator==(const Codeword& o) const {
        return profile_ == o.profile_ && chunks_ == o.chunks_;
    }

    /// Lexicographic on the serialization; only meaningful for equal profiles.
    bool operator<(const Codeword& o) const { return chunks_ < o.chunks_; }

  private:
    Codeword() = default;
    std::vector<int> profile_;
    std::vector<std::uint64_t> chunks_;
};

/// Hamming distance between chunk spans of equal layout.
inline int raw_distance(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::popcount(a[i] ^ b[i]);
    return s;
}

inline int distance(const Codeword& u, const Codeword& v) {
    if (u.profile() != v.profile())
        throw std::invalid_argument("distance: codewords have different part-length profiles");
    return raw_distance(u.chunks(), v.chunks());
}

/// A set of codewords sharing one Shape, stored sorted and duplicate-free so
/// that code equality is structural.
class Code {
  public:
    explicit Code(Shape shape) : shape_(std::move(shape)) {}

    Code(Shape shape, std::vector<Codeword> words) : shape_(std::move(shape)) {
        for (auto& w : words) check_profile(w);
        words_ = std::move(words);
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    }

    const Shape& shape() const { return shape_; }
    const std::vector<Codeword>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }

    void insert(Codeword w) {
        check_profile(w);
        auto it = std::lower_bound(words_.begin(), words_.end(), w);
        if (it == words_.end() || !(*it == w)) words_.insert(it, std::move(w));
    }

    bool operator==(const Code& o) const { return shape_ == o.shape_ && words_ == o.words_; }

  private:
    void check_profile(const Codeword& w) const {
        if (w.profile() != shape_.lengths())
            throw std::invalid_argument("Code: codeword profile does not match shape");
    }
    Shape shape_;
    std::vector<Codeword> words_;
};

/// One block of a generalized packing: an m-tuple of sorted subsets.
struct GeneralizedBlock {
    std::vector<std::vector<int>> parts;

    void normalize() {
        for (auto& p : parts) std::sort(p.begin(), p.end());
    }
    bool operator==(const GeneralizedBlock&) const = default;
    bool operator<(const GeneralizedBlock& o) const { return parts < o.parts; }
};

/// A t-(n,k,lambda) generalized packing instance.
struct PackingInstance {
    std::vector<int> lengths;      // n_i
    std::vector<int> block_sizes;  // k_i
    int strength = 0;              // t
    int lambda = 1;
    std::vector<GeneralizedBlock> blocks;

    int total_block_size() const {
        return std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
    }
};

struct VerificationReport {
    std::vector<bool> weight_ok;                        // per part
    int observed_min_distance = 0;                      // = claimed when vacuous
    std::optional<std::pair<int, int>> violating_pair;  // word/block indices
    std::optional<bool> column_weight_ok;               // 2D checks only
    std::string witness;                                // human-readable detail

    bool passed() const {
        bool w = std::all_of(weight_ok.begin(), weight_ok.end(), [](bool b) { return b; });
        return w && !violating_pair.has_value() && column_weight_ok.value_or(true);
    }
};

/// Checks every word has weight w_i in part i and that all pairwise Hamming
/// distances reach shape.distance().  Violations are reported, never thrown.
inline VerificationReport verify_mcwc(const Code& code) {
    const Shape& sh = code.shape();
    const int m = sh.parts();
    VerificationReport rep;
    rep.weight_ok.assign(m, true);
    for (std::size_t k = 0; k < code.size(); ++k) {
        const Codeword& w = code.words()[k];
        for (int i = 0; i < m; ++i) {
            if (w.part_weight(i) != sh.weights()[i]) {
                rep.weight_ok[i] = false;
                if (rep.witness.empty())
                    rep.witness = "word " + std::to_string(k) + " has wrong weight in part " +
                                  std::to_string(i);
            }
        }
    }
    rep.observed_min_distance = sh.distance();  // vacuous for |C| <= 1
    const auto& ws = code.words();
    for (std::size_t a = 0; a < ws.size(); ++a) {
        auto ca = ws[a].chunks();
        for (std::size_t b = a + 1; b < ws.size(); ++b) {
            int d = raw_distance(ca, ws[b].chunks());
            if (d < rep.observed_min_distance) {
                rep.observed_min_distance = d;
                rep.violating_pair = {static_cast<int>(a), static_cast<int>(b)};
            }
        }
    }
    if (rep.violating_pair && rep.witness.empty())
        rep.witness = "words " + std::to_string(rep.violating_pair->first) + " and " +
                      std::to_string(rep.violating_pair->second) + " are at distance " +
                      std::to_string(rep.observed_min_distance);
    return rep;
}

/// verify_mcwc plus the constant-column-weight check of the matrix view.
inline VerificationReport verify_2d(const Code& code, int column_weight) {
    const Shape& sh = code.shape();
    const int m = sh.parts();
    const int n = sh.lengths()[0];
    for (int i = 1; i < m; ++i)
        if (sh.lengths()[i] != n)
            throw std::invalid_argument("verify_2d: parts have unequal lengths, no matrix view");
    VerificationReport rep = verify_mcwc(code);
    rep.column_weight_ok = true;
    for (std::size_t k = 0; k < code.size(); ++k) {
        const Codeword& w = code.words()[k];
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int i = 0; i < m; ++i) s += w.get(i * n + j);
            if (s != column_weight) {
                rep.column_weight_ok = false;
                if (rep.witness.empty())
                    rep.witness = "word " + std::to_string(k) + " column " + std::to_string(j) +
                                  " has weight " + std::to_string(s);
            }
        }
    }
    return rep;
}

/// Support map of Prop-3 direction code -> packing: block i = supp(word i),
/// strength t = W - delta + 1, lambda = 1.
inline PackingInstance code_to_blocks(const Code& code) {
    VerificationReport rep = verify_mcwc(code);
    if (!rep.passed())
        throw std::invalid_argument("code_to_blocks: input fails verification (" + rep.witness + ")");
    const Shape& sh = code.shape();
    PackingInstance p;
    p.lengths = sh.lengths();
    p.block_sizes = sh.weights();
    p.strength = sh.strength();
    p.lambda = 1;
    p.blocks.reserve(code.size());
    for (const auto& w : code.words()) p.blocks.push_back(GeneralizedBlock{w.supports()});
    return p;
}

/// Inverse direction: indicator words of the blocks, d = 2*(W - t + 1).
inline Code blocks_to_code(const PackingInstance& p, int d) {
    if (p.lambda != 1) throw std::invalid_argument("blocks_to_code: requires lambda = 1");
    const int W = p.total_block_size();
    if (p.strength != W - d / 2 + 1)
        throw std::invalid_argument("blocks_to_code: strength does not match t = W - d/2 + 1");
    Code code(Shape(p.lengths, p.block_sizes, d));
    for (const auto& b : p.blocks)
        code.insert(Codeword::from_supports(p.lengths, b.parts));
    return code;
}

namespace detail {

/// All (k,t)-admissible integer tuples: 0 <= t_i <= k_i, sum t_i = t.
inline std::vector<std::vector<int>> admissible_tuples(const std::vector<int>& caps, int t) {
    std::vector<std::vector<int>> out;
    if (t < 0) return out;
    std::vector<int> cur(caps.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == caps.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        int rest = 0;
        for (std::size_t j = i + 1; j < caps.size(); ++j) rest += caps[j];
        for (int v = std::max(0, left - rest); v <= std::min(caps[i], left); ++v) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
        cur[i] = 0;
    };
    rec(rec, 0, t);
    return out;
}

inline void subsets_rec(const std::vector<int>& set, int k, std::size_t from,
                        std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i + (k - cur.size()) <= set.size() + 0u; ++i) {
        cur.push_back(set[i]);
        subsets_rec(set, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> subsets_of(const std::vector<int>& set, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (k <= static_cast<int>(set.size())) subsets_rec(set, k, 0, cur, out);
    return out;
}

}  // namespace detail

/// Scans every admissible tuple covered by some block and confirms that none
/// is contained in more than lambda blocks.
inline VerificationReport verify_generalized_packing(const PackingInstance& p) {
    VerificationReport rep;
    rep.weight_ok.assign(p.lengths.size(), true);
    rep.observed_min_distance = 0;
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) {
        const auto& b = p.blocks[bi];
        if (b.parts.size() != p.lengths.size()) {
            rep.weight_ok.assign(p.lengths.size(), false);
            rep.witness = "block " + std::to_string(bi) + " has wrong number of parts";
            return rep;
        }
        for (std::size_t i = 0; i < b.parts.size(); ++i) {
            bool ok = static_cast<int>(b.parts[i].size()) == p.block_sizes[i];
            for (int x : b.parts[i])
                if (x < 0 || x >= p.lengths[i]) ok = false;
            if (!ok) {
                rep.weight_ok[i] = false;
                if (rep.witness.empty())
                    rep.witness = "block " + std::to_string(bi) + " malformed in part " +
                                  std::to_string(i);
            }
        }
    }
    const auto tuples = detail::admissible_tuples(p.block_sizes, p.strength);
    // multiplicity count per admissible set-tuple, with the first block index seen
    std::map<std::vector<std::vector<int>>, std::pair<int, int>> seen;
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) {
        GeneralizedBlock b = p.blocks[bi];
        b.normalize();
        for (const auto& tt : tuples) {
            std::vector<std::vector<std::vector<int>>> per_part;
            per_part.reserve(tt.size());
            for (std::size_t i = 0; i < tt.size(); ++i)
                per_part.push_back(detail::subsets_of(b.parts[i], tt[i]));
            std::vector<std::vector<int>> tuple(tt.size());
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i == tt.size()) {
                    auto& entry = seen[tuple];
                    if (entry.first == 0) entry.second = static_cast<int>(bi);
                    if (++entry.first > p.lambda && !rep.violating_pair) {
                        rep.violating_pair = {entry.second, static_cast<int>(bi)};
                        std::string s = "admissible tuple (";
                        for (std::size_t q = 0; q < tuple.size(); ++q) {
                            if (q) s += " | ";
                            for (std::size_t r = 0; r < tuple[q].size(); ++r) {
                                if (r) s += ' ';
                                s += std::to_string(tuple[q][r]);
                            }
                        }
                        s += ") exceeds multiplicity " + std::to_string(p.lambda);
                        rep.witness = s;
                    }
                    return;
                }
                for (const auto& sub : per_part[i]) {
                    tuple[i] = sub;
                    self(self, i + 1);
                }
            };
            rec(rec, 0);
        }
    }
    return rep;
}

}  // namespace mcwc
