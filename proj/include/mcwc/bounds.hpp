// bounds.hpp -- closed-form code-size values, Johnson-type recursive bounds,
// packing numbers, the 2D array bounds and the asymptotic limit constant.
// All arithmetic is exact; floors are applied exactly where the formulas
// place them.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace mcwc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int floor_rat(const Rat& q) {
    Int num = boost::multiprecision::numerator(q);
    Int den = boost::multiprecision::denominator(q);  // always > 0
    Int d = num / den;
    if (num < 0 && d * den != num) --d;
    return d;
}

enum class BoundMethod {
    TrivialSpread,     // d > 2W
    TrivialFullWeight, // d = 2W
    TrivialDistance2,  // d = 2
    Johnson,           // recursive reduction
    IteratedUniform,   // nested-floor uniform bound
    AdmissibleProduct, // per-admissible-tuple counting bound
    PackingNumber43,
    PackingNumber32,
    K4Case1,
    K4Case2,
    K4Case3,
    K4Case4,
    K4Case5,
    Lemma2D,
    Improved2D,
};

inline std::string to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::TrivialSpread: return "trivial";
        case BoundMethod::TrivialFullWeight: return "trivial";
        case BoundMethod::TrivialDistance2: return "trivial";
        case BoundMethod::Johnson: return "johnson";
        case BoundMethod::IteratedUniform: return "eq1";
        case BoundMethod::AdmissibleProduct: return "product-upb";
        case BoundMethod::PackingNumber43: return "packing-4-3";
        case BoundMethod::PackingNumber32: return "packing-3-2";
        case BoundMethod::K4Case1: return "k4-case1";
        case BoundMethod::K4Case2: return "k4-case2";
        case BoundMethod::K4Case3: return "k4-case3";
        case BoundMethod::K4Case4: return "k4-case4";
        case BoundMethod::K4Case5: return "k4-case5";
        case BoundMethod::Lemma2D: return "lemma-2d";
        case BoundMethod::Improved2D: return "improved-2d";
    }
    return "?";
}

struct BoundResult {
    Int value;
    BoundMethod method;
    bool exact;  // true only where the formula is proved tight
};

/// Tuple of m non-negative integers t_i <= w_i with sum t.
struct AdmissibleTuple {
    std::vector<int> t;
};

inline std::vector<AdmissibleTuple> admissible_integer_tuples(const std::vector<int>& caps, int t) {
    std::vector<AdmissibleTuple> out;
    for (auto& v : detail::admissible_tuples(caps, t)) out.push_back(AdmissibleTuple{std::move(v)});
    return out;
}

/// Exact values of the three degenerate regimes: d > 2W, d = 2W, d = 2.
/// For d = 2W parts with w_i = 0 are excluded from the minimum.
inline std::optional<BoundResult> trivial_exact(const Shape& shape) {
    const int W = shape.total_weight();
    const int d = shape.distance();
    if (d > 2 * W) return BoundResult{1, BoundMethod::TrivialSpread, true};
    if (d == 2 * W) {
        bool any = false;
        Int best = 0;
        for (int i = 0; i < shape.parts(); ++i) {
            if (shape.weights()[i] == 0) continue;
            Int v = shape.lengths()[i] / shape.weights()[i];
            if (!any || v < best) best = v;
            any = true;
        }
        if (!any) return BoundResult{1, BoundMethod::TrivialSpread, true};  // W = 0, d = 0 impossible; defensive
        return BoundResult{best, BoundMethod::TrivialFullWeight, true};
    }
    if (d == 2) {
        Int prod = 1;
        for (int i = 0; i < shape.parts(); ++i)
            prod *= binomial(shape.lengths()[i], shape.weights()[i]);
        return BoundResult{prod, BoundMethod::TrivialDistance2, true};
    }
    return std::nullopt;
}

namespace detail {

struct ShapeKey {
    std::vector<std::pair<int, int>> parts;  // sorted (n_i, w_i)
    int d;
    bool operator<(const ShapeKey& o) const { return std::tie(parts, d) < std::tie(o.parts, o.d); }
};

inline ShapeKey key_of(const Shape& s) {
    ShapeKey k;
    for (int i = 0; i < s.parts(); ++i) k.parts.emplace_back(s.lengths()[i], s.weights()[i]);
    std::sort(k.parts.begin(), k.parts.end());
    k.d = s.distance();
    return k;
}

inline Int johnson_value(const Shape& shape, std::map<ShapeKey, Int>& memo) {
    if (auto t = trivial_exact(shape)) return t->value;
    ShapeKey key = key_of(shape);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::optional<Int> best;  // every reduction lowers W, so the recursion is acyclic
    const auto& n = shape.lengths();
    const auto& w = shape.weights();
    for (int i = 0; i < shape.parts(); ++i) {
        if (w[i] < 1 || n[i] < 1) continue;
        auto n2 = n;
        auto w2 = w;
        --n2[i];
        --w2[i];
        if (n2[i] == 0) continue;  // part vanishes; the d>=2W trivial case fires first anyway
        Int sub = johnson_value(Shape(n2, w2, shape.distance()), memo);
        Int cand = (Int(n[i]) * sub) / w[i];
        if (!best || cand < *best) best = cand;
    }
    if (shape.is_uniform() && w[0] >= 1 && n[0] >= 2) {
        const int m = shape.parts();
        Int sub = johnson_value(Shape::uniform(m, n[0] - 1, shape.distance(), w[0] - 1), memo);
        Int num = 1, den = 1;
        for (int i = 0; i < m; ++i) {
            num *= n[0];
            den *= w[0];
        }
        Int cand = (num * sub) / den;
        if (!best || cand < *best) best = cand;
    }
    // w == 0 everywhere is caught by trivial_exact, so a branch always applies
    Int result = best.value_or(Int(1));
    memo[key] = result;
    return result;
}

}  // namespace detail

/// Memoized minimization over all single-part reductions (and the uniform
/// all-parts reduction) down to bases resolved by trivial_exact.
inline BoundResult johnson_recursive(const Shape& shape) {
    if (auto t = trivial_exact(shape)) return *t;
    std::map<detail::ShapeKey, Int> memo;
    return BoundResult{detail::johnson_value(shape, memo), BoundMethod::Johnson, false};
}

/// Nested-floor iterated bound for uniform shapes:
///   floor(n^m/w^m .. floor((n-s)^r/(w-s)^r) ..)
/// with s the smallest integer making r = m(w-s)-delta+1 < m.
inline BoundResult iterated_uniform_bound(int m, int n, int d, int w) {
    const int delta = d / 2;
    int s = 0;
    while (m * (w - s) - delta + 1 >= m) ++s;
    const int r = m * (w - s) - delta + 1;
    // r <= 0 means the innermost reduced code is trivial (at most one word);
    // the outer floor levels still apply.
    Int acc = 1;
    if (r > 0) {
        Int num = 1, den = 1;
        for (int j = 0; j < r; ++j) {
            num *= n - s;
            den *= w - s;
        }
        acc = num / den;
    }
    for (int level = s - 1; level >= 0; --level) {
        Int num = acc, den = 1;
        for (int j = 0; j < m; ++j) {
            num *= n - level;
            den *= w - level;
        }
        acc = num / den;
    }
    return BoundResult{acc, BoundMethod::IteratedUniform, false};
}

/// min over (w,t)-admissible tuples of floor(prod C(n_i,t_i)/C(w_i,t_i)).
inline BoundResult admissible_product_bound(const std::vector<int>& lengths,
                                            const std::vector<int>& weights, int t) {
    auto tuples = detail::admissible_tuples(weights, t);
    if (tuples.empty())
        throw std::invalid_argument("admissible_product_bound: no admissible tuple (need 0 <= t <= W)");
    std::optional<Int> best;
    for (const auto& tt : tuples) {
        Rat prod = 1;
        for (std::size_t i = 0; i < tt.size(); ++i)
            prod *= Rat(binomial(lengths[i], tt[i]), binomial(weights[i], tt[i]));
        Int v = floor_rat(prod);
        if (!best || v < *best) best = v;
    }
    return BoundResult{*best, BoundMethod::AdmissibleProduct, false};
}

/// Exact D(n,4,3): nested floors, minus one in the n = 0 (mod 6) branch.
inline BoundResult packing_number_4_3(int n) {
    if (n < 4) return BoundResult{0, BoundMethod::PackingNumber43, true};
    Int inner = (n - 2) / 2;
    Int mid = (Int(n - 1) * inner) / 3;
    Int outer = (Int(n) * mid) / 4;
    if (n % 6 == 0) outer -= 1;
    return BoundResult{outer, BoundMethod::PackingNumber43, true};
}

/// Exact D(n,3,2) = floor(n/3 * floor((n-1)/2)), minus one when n = 5 (mod 6).
inline BoundResult packing_number_3_2(int n) {
    if (n < 3) return BoundResult{0, BoundMethod::PackingNumber32, true};
    Int v = (Int(n) * ((n - 1) / 2)) / 3;
    if (n % 6 == 5) v -= 1;
    return BoundResult{v, BoundMethod::PackingNumber32, true};
}

/// Exact generalized packing numbers D(n,k,3) for total block size k = 4,
/// by composition of k over the parts.
inline BoundResult k4_packing_number(std::vector<int> lengths, std::vector<int> composition) {
    if (lengths.size() != composition.size())
        throw std::invalid_argument("k4_packing_number: lengths/composition size mismatch");
    int k = 0;
    for (int c : composition) k += c;
    if (k != 4) throw std::invalid_argument("k4_packing_number: composition must sum to 4");
    for (std::size_t i = 0; i < lengths.size(); ++i)
        if (composition[i] < 1 || lengths[i] < composition[i])
            throw std::invalid_argument("k4_packing_number: need 1 <= k_i <= n_i");

    if (composition == std::vector<int>{4}) {
        auto b = packing_number_4_3(lengths[0]);
        return BoundResult{b.value, BoundMethod::K4Case1, true};
    }
    if (composition == std::vector<int>{3, 1}) {
        const int n1 = lengths[0], n2 = lengths[1];
        Int v;
        if (n1 == 6) {
            v = n2 <= 4 ? Int(4) * n2 : (n2 == 5 ? Int(18) : Int(20));
        } else if (n1 == 7) {
            if (n2 <= 2) v = Int(7) * n2;
            else if (n2 <= 4) v = Int(6) * n2 + 2;
            else if (n2 == 5) v = 31;
            else v = 35;
        } else {
            Int by_packings = Int(n2) * packing_number_3_2(n1).value;
            Int all = binomial(n1, 3);
            v = std::min(all, by_packings);
        }
        return BoundResult{v, BoundMethod::K4Case2, true};
    }
    if (composition == std::vector<int>{2, 2}) {
        int n1 = std::min(lengths[0], lengths[1]);
        int n2 = std::max(lengths[0], lengths[1]);
        Int v = Int(n1) * (n1 - 1) / 2 * (n2 / 2);
        return BoundResult{v, BoundMethod::K4Case3, true};
    }
    if (composition == std::vector<int>{2, 1, 1}) {
        int n1 = lengths[0];
        int n2 = std::min(lengths[1], lengths[2]);
        int n3 = std::max(lengths[1], lengths[2]);
        Int v = std::min(Int(n1) * (n1 - 1) * n2 / 2, Int(n1 / 2) * n2 * n3);
        return BoundResult{v, BoundMethod::K4Case4, true};
    }
    if (composition == std::vector<int>{1, 1, 1, 1}) {
        std::sort(lengths.begin(), lengths.end());
        Int v = Int(lengths[0]) * lengths[1] * lengths[2];
        return BoundResult{v, BoundMethod::K4Case5, true};
    }
    throw std::invalid_argument("k4_packing_number: unsupported composition");
}

/// Array-counting bound M <= n(nl - lambda) / (sum w_i^2 - n lambda),
/// applicable only when the denominator is positive.
inline std::optional<BoundResult> bound_2d(int /*m*/, int n, const std::vector<int>& weights,
                                           int l, int lambda) {
    Int sumsq = 0;
    for (int w : weights) sumsq += Int(w) * w;
    Int den = sumsq - Int(n) * lambda;
    if (den <= 0) return std::nullopt;
    Int num = Int(n) * (Int(n) * l - lambda);
    return BoundResult{num / den, BoundMethod::Lemma2D, false};
}

/// Largest M with lambda*M*(M-1) >= n(m f^2 + 2 r f + r) - M n l, where
/// f = floor(Ml/m), r = Ml - mf.  Unbounded (no finite M fails) when
/// m*lambda >= n*l^2; absent in that case.
inline std::optional<BoundResult> improved_bound_2d(int m, int n, const std::vector<int>& /*weights*/,
                                                    int l, int lambda) {
    if (Int(m) * lambda >= Int(n) * l * l) return std::nullopt;
    Int best = 0;
    for (Int M = 1;; ++M) {
        Int f = M * l / m;
        Int r = M * l - m * f;
        Int lhs = Int(lambda) * M * (M - 1);
        Int rhs = Int(n) * (m * f * f + 2 * r * f + r) - M * n * l;
        if (lhs >= rhs)
            best = M;
        else if (M > best + m + n)  // inequality is eventually monotone; small slack
            break;
    }
    return BoundResult{best, BoundMethod::Improved2D, false};
}

/// Asymptotic limit of T(n,d,w)/v^t for n_i = c_i v:  C / prod w_i!  with
/// C = min over (w,t)-admissible tuples of prod c_i^{t_i} (w_i - t_i)!.
inline Rat asymptotic_limit(const std::vector<int>& weights, const std::vector<int>& proportions,
                            int d) {
    if (weights.size() != proportions.size())
        throw std::invalid_argument("asymptotic_limit: weights/proportions size mismatch");
    for (int c : proportions)
        if (c < 1) throw std::invalid_argument("asymptotic_limit: proportions must be >= 1");
    int W = 0;
    for (int w : weights) W += w;
    const int t = W - d / 2 + 1;
    auto tuples = detail::admissible_tuples(weights, t);
    if (tuples.empty()) throw std::invalid_argument("asymptotic_limit: no admissible tuple");
    std::optional<Int> C;
    for (const auto& tt : tuples) {
        Int v = 1;
        for (std::size_t i = 0; i < tt.size(); ++i) {
            for (int j = 0; j < tt[i]; ++j) v *= proportions[i];
            v *= factorial(weights[i] - tt[i]);
        }
        if (!C || v < *C) C = v;
    }
    Int den = 1;
    for (int w : weights) den *= factorial(w);
    return Rat(*C, den);
}

/// Uniform-shape corollary form 1/(w^m (w-1)^m ... (w-s+1)^m (w-s)^r).
inline Rat asymptotic_limit_corollary(int m, int w, int d) {
    const int delta = d / 2;
    int s = 0;
    while (m * (w - s) - delta + 1 >= m) ++s;
    const int r = m * (w - s) - delta + 1;
    Int den = 1;
    for (int level = 0; level < s; ++level)
        for (int j = 0; j < m; ++j) den *= w - level;
    for (int j = 0; j < r; ++j) den *= w - s;
    return Rat(1, den);
}

}  // namespace mcwc
