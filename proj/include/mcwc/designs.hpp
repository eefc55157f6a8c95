// designs.hpp -- combinatorial substrates: (near-)1-factorizations, Latin
// rectangles, families of pairwise disjoint triple packings and
// alpha-resolvable designs.  Every object re-verifies its own invariants on
// construction.  Points are 0-based.

#pragma once

#include <array>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include "bounds.hpp"
#include "bundled.hpp"
#include "core.hpp"

namespace mcwc {

using Edge = std::pair<int, int>;
using Triple = std::array<int, 3>;

/// A (near-)1-factorization of K_n: gamma(n) pairwise disjoint matchings of
/// size floor(n/2) whose union is the whole edge set.
struct FactorSet {
    int n = 0;
    std::vector<std::vector<Edge>> factors;

    void validate() const {
        const int gamma = n % 2 == 0 ? n - 1 : n;
        if (n == 1 && factors.empty()) return;  // K_1 has no edges
        if (static_cast<int>(factors.size()) != gamma)
            throw std::invalid_argument("FactorSet: expected gamma(n) factors");
        std::set<Edge> all;
        for (const auto& f : factors) {
            if (static_cast<int>(f.size()) != n / 2)
                throw std::invalid_argument("FactorSet: factor has wrong size");
            std::vector<int> deg(n, 0);
            for (auto [a, b] : f) {
                if (a < 0 || b < 0 || a >= n || b >= n || a >= b)
                    throw std::invalid_argument("FactorSet: malformed edge");
                if (!all.insert({a, b}).second)
                    throw std::invalid_argument("FactorSet: edge repeated across factors");
                ++deg[a];
                ++deg[b];
            }
            int missed = 0;
            for (int v : deg) {
                if (v > 1) throw std::invalid_argument("FactorSet: point covered twice in a factor");
                if (v == 0) ++missed;
            }
            if (missed != n % 2)
                throw std::invalid_argument("FactorSet: factor misses the wrong number of points");
        }
        if (static_cast<int>(all.size()) != n * (n - 1) / 2)
            throw std::invalid_argument("FactorSet: union is not all of E(K_n)");
    }
};

/// Round-robin ("circle method") 1-factorization of K_n, n even.
inline FactorSet one_factorization(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("one_factorization: n must be even, n >= 2");
    FactorSet fs;
    fs.n = n;
    const int h = n - 1;
    for (int i = 0; i < h; ++i) {
        std::vector<Edge> f;
        f.emplace_back(std::min(i, n - 1), std::max(i, n - 1));
        for (int j = 1; j <= n / 2 - 1; ++j) {
            int a = (i + j) % h;
            int b = (i - j % h + h) % h;
            f.emplace_back(std::min(a, b), std::max(a, b));
        }
        fs.factors.push_back(std::move(f));
    }
    fs.validate();
    return fs;
}

/// Cyclic near-1-factorization of K_n, n odd; factor i misses point i.
inline FactorSet near_one_factorization(int n) {
    if (n < 1 || n % 2 != 1)
        throw std::invalid_argument("near_one_factorization: n must be odd, n >= 1");
    FactorSet fs;
    fs.n = n;
    if (n == 1) return fs;
    for (int i = 0; i < n; ++i) {
        std::vector<Edge> f;
        for (int j = 1; j <= (n - 1) / 2; ++j) {
            int a = (i + j) % n;
            int b = (i - j % n + n) % n;
            f.emplace_back(std::min(a, b), std::max(a, b));
        }
        fs.factors.push_back(std::move(f));
    }
    fs.validate();
    return fs;
}

struct LatinRectangle {
    int rows = 0, cols = 0;
    std::vector<std::vector<int>> cells;

    void validate() const {
        if (static_cast<int>(cells.size()) != rows)
            throw std::invalid_argument("LatinRectangle: wrong row count");
        for (const auto& row : cells) {
            if (static_cast<int>(row.size()) != cols)
                throw std::invalid_argument("LatinRectangle: wrong column count");
            std::vector<bool> seen(cols, false);
            for (int x : row) {
                if (x < 0 || x >= cols || seen[x])
                    throw std::invalid_argument("LatinRectangle: row is not a permutation range");
                seen[x] = true;
            }
        }
        for (int j = 0; j < cols; ++j) {
            std::vector<bool> seen(cols, false);
            for (int i = 0; i < rows; ++i) {
                int x = cells[i][j];
                if (seen[x]) throw std::invalid_argument("LatinRectangle: symbol repeated in column");
                seen[x] = true;
            }
        }
    }
};

/// First r rows of the cyclic Latin square L[i][j] = (i + j) mod n.
inline LatinRectangle latin_rectangle(int r, int n) {
    if (r < 1 || r > n) throw std::invalid_argument("latin_rectangle: need 1 <= r <= n");
    LatinRectangle lr;
    lr.rows = r;
    lr.cols = n;
    lr.cells.assign(r, std::vector<int>(n));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) lr.cells[i][j] = (i + j) % n;
    lr.validate();
    return lr;
}

/// Ordered family of pairwise disjoint 2-(n,3,1) packings; the first
/// optimal_count packings have the maximum size D(n,3,2).
struct TriplePackingFamily {
    int n = 0;
    std::vector<std::vector<Triple>> packings;
    int optimal_count = 0;

    void validate() const {
        const Int opt = packing_number_3_2(n).value;
        std::set<Triple> all;
        std::size_t prev = std::size_t(-1);
        for (std::size_t pi = 0; pi < packings.size(); ++pi) {
            const auto& P = packings[pi];
            if (P.size() > prev)
                throw std::invalid_argument("TriplePackingFamily: packing sizes increase");
            prev = P.size();
            std::set<Edge> pairs;
            for (const auto& T : P) {
                if (!(0 <= T[0] && T[0] < T[1] && T[1] < T[2] && T[2] < n))
                    throw std::invalid_argument("TriplePackingFamily: malformed triple");
                if (!all.insert(T).second)
                    throw std::invalid_argument("TriplePackingFamily: triple in two packings");
                for (auto [a, b] : {Edge{T[0], T[1]}, Edge{T[0], T[2]}, Edge{T[1], T[2]}})
                    if (!pairs.insert({a, b}).second)
                        throw std::invalid_argument("TriplePackingFamily: pair covered twice");
            }
            if (static_cast<int>(pi) < optimal_count && Int(P.size()) != opt)
                throw std::invalid_argument("TriplePackingFamily: leading packing not optimal");
        }
        if (optimal_count > static_cast<int>(packings.size()))
            throw std::invalid_argument("TriplePackingFamily: optimal_count out of range");
    }

    bool partitions_all_triples() const {
        std::size_t total = 0;
        for (const auto& P : packings) total += P.size();
        return Int(total) == binomial(n, 3);
    }
};

/// An alpha-resolvable BIBD(M,k,lambda): r classes of b = alpha*M/k blocks,
/// each class covering every point exactly alpha times, every pair in
/// exactly lambda blocks overall.
struct ResolvableDesign {
    int points = 0;  // M
    int block_size = 0;
    int lambda = 0;
    int alpha = 0;
    std::vector<std::vector<std::vector<int>>> classes;

    int class_count() const { return static_cast<int>(classes.size()); }
    int blocks_per_class() const { return alpha * points / block_size; }

    void validate() const {
        std::map<Edge, int> paircnt;
        for (const auto& cls : classes) {
            if (static_cast<int>(cls.size()) != blocks_per_class())
                throw std::invalid_argument("ResolvableDesign: wrong class size");
            std::vector<int> deg(points, 0);
            for (const auto& b : cls) {
                if (static_cast<int>(b.size()) != block_size)
                    throw std::invalid_argument("ResolvableDesign: wrong block size");
                for (std::size_t i = 0; i < b.size(); ++i) {
                    if (b[i] < 0 || b[i] >= points)
                        throw std::invalid_argument("ResolvableDesign: point out of range");
                    ++deg[b[i]];
                    for (std::size_t j = i + 1; j < b.size(); ++j)
                        ++paircnt[{std::min(b[i], b[j]), std::max(b[i], b[j])}];
                }
            }
            for (int v : deg)
                if (v != alpha)
                    throw std::invalid_argument("ResolvableDesign: class is not alpha-parallel");
        }
        for (int a = 0; a < points; ++a)
            for (int b = a + 1; b < points; ++b)
                if (paircnt[{a, b}] != lambda)
                    throw std::invalid_argument("ResolvableDesign: pair multiplicity differs from lambda");
    }
};

// ---------------------------------------------------------------------------
// Design file format (DESIGN v1) parsing
// ---------------------------------------------------------------------------

using Design = std::variant<FactorSet, TriplePackingFamily, ResolvableDesign>;

namespace detail {

inline std::vector<int> parse_ints(const std::string& line, int lineno) {
    std::istringstream iss(line);
    std::vector<int> out;
    int x;
    while (iss >> x) out.push_back(x);
    if (!iss.eof())
        throw std::runtime_error("design parse error at line " + std::to_string(lineno) +
                                 ": expected integers");
    return out;
}

inline std::map<std::string, std::string> parse_kv(const std::string& header) {
    std::map<std::string, std::string> kv;
    std::istringstream iss(header);
    std::string tok;
    while (iss >> tok) {
        auto eq = tok.find('=');
        if (eq != std::string::npos) kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

}  // namespace detail

/// Parses the DESIGN v1 text format.  The returned object has already passed
/// its type invariants.
inline Design parse_design(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++lineno;
            if (!out.empty() && out.back() == '\r') out.pop_back();
            if (out.empty() || out[0] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next(line) || line.rfind("DESIGN v1 ", 0) != 0)
        throw std::runtime_error("design parse error at line " + std::to_string(lineno) +
                                 ": missing 'DESIGN v1' header");
    auto kv = detail::parse_kv(line.substr(9));
    const std::string type = kv.count("type") ? kv["type"] : "";
    const int n = kv.count("n") ? std::stoi(kv["n"]) : 0;
    auto params = detail::parse_kv([&] {
        std::string p = kv.count("params") ? kv["params"] : "";
        for (auto& c : p)
            if (c == ',') c = ' ';
        return p;
    }());

    std::vector<std::vector<std::vector<int>>> stanzas;
    while (next(line)) {
        if (line == "class" || line == "packing" || line == "factor") {
            stanzas.emplace_back();
            continue;
        }
        if (stanzas.empty())
            throw std::runtime_error("design parse error at line " + std::to_string(lineno) +
                                     ": block outside a stanza");
        stanzas.back().push_back(detail::parse_ints(line, lineno));
    }

    if (type == "factorset") {
        FactorSet fs;
        fs.n = n;
        for (auto& st : stanzas) {
            std::vector<Edge> f;
            for (auto& e : st) {
                if (e.size() != 2) throw std::runtime_error("design parse error: edge needs 2 points");
                f.emplace_back(std::min(e[0], e[1]), std::max(e[0], e[1]));
            }
            fs.factors.push_back(std::move(f));
        }
        fs.validate();
        return fs;
    }
    if (type == "triples") {
        TriplePackingFamily tf;
        tf.n = n;
        tf.optimal_count = params.count("optimal_count") ? std::stoi(params["optimal_count"]) : 0;
        for (auto& st : stanzas) {
            std::vector<Triple> P;
            for (auto& t : st) {
                if (t.size() != 3) throw std::runtime_error("design parse error: triple needs 3 points");
                Triple tr{t[0], t[1], t[2]};
                std::sort(tr.begin(), tr.end());
                P.push_back(tr);
            }
            tf.packings.push_back(std::move(P));
        }
        tf.validate();
        return tf;
    }
    if (type == "resolvable") {
        ResolvableDesign rd;
        rd.points = n;
        rd.block_size = params.count("k") ? std::stoi(params["k"]) : 0;
        rd.lambda = params.count("lambda") ? std::stoi(params["lambda"]) : 0;
        rd.alpha = params.count("alpha") ? std::stoi(params["alpha"]) : 0;
        rd.classes = std::move(stanzas);
        rd.validate();
        return rd;
    }
    throw std::runtime_error("design parse error: unknown type '" + type + "'");
}

inline Design import_design(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("import_design: cannot open " + path);
    return parse_design(in);
}

inline std::string format_design(const TriplePackingFamily& tf) {
    std::ostringstream os;
    os << "DESIGN v1 type=triples n=" << tf.n << " params=optimal_count=" << tf.optimal_count
       << "\n";
    for (const auto& P : tf.packings) {
        os << "packing\n";
        for (const auto& T : P) os << T[0] << ' ' << T[1] << ' ' << T[2] << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Bundled data access
// ---------------------------------------------------------------------------

namespace detail {

inline TriplePackingFamily parse_triples_string(const char* text) {
    std::istringstream is(text);
    return std::get<TriplePackingFamily>(parse_design(is));
}

/// The n=6 family is derived from the n=7 family: drop every block through
/// the deleted point and relabel the remaining points downward.
inline TriplePackingFamily delete_point(const TriplePackingFamily& tf, int gone) {
    TriplePackingFamily out;
    out.n = tf.n - 1;
    for (const auto& P : tf.packings) {
        std::vector<Triple> Q;
        for (const auto& T : P) {
            if (T[0] == gone || T[1] == gone || T[2] == gone) continue;
            Triple s;
            for (int i = 0; i < 3; ++i) s[i] = T[i] > gone ? T[i] - 1 : T[i];
            Q.push_back(s);
        }
        out.packings.push_back(std::move(Q));
    }
    std::stable_sort(out.packings.begin(), out.packings.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    const Int opt = packing_number_3_2(out.n).value;
    out.optimal_count = 0;
    for (const auto& P : out.packings)
        if (Int(P.size()) == opt) ++out.optimal_count;
    out.validate();
    return out;
}

inline std::optional<std::string> designs_override_dir(const std::optional<std::string>& dir) {
    if (dir) return dir;
    if (const char* env = std::getenv("MCWC_DESIGNS_DIR")) return std::string(env);
    return std::nullopt;
}

}  // namespace detail

/// Maximum number of pairwise disjoint optimal 2-(n,3,1) packings.
inline int max_disjoint_optimal_packings(int n) {
    switch (n) {
        case 3: return 1;
        case 4: return 4;
        case 5: return 5;
        case 6: return 4;
        case 7: return 2;
        default:
            if (n < 3) return 0;
            return n % 2 == 1 ? n - 2 : n - 1;
    }
}

/// The disjoint-packing family used by the block constructions.  Families
/// come from bundled data for 5 <= n <= 13 (n=6 derived from n=7); n=3,4 are
/// trivial.  An override directory (argument or MCWC_DESIGNS_DIR) may supply
/// a file triples_<n>.design instead.
inline TriplePackingFamily disjoint_triple_packings(
    int n, const std::optional<std::string>& designs_dir = std::nullopt) {
    if (n < 3) throw std::invalid_argument("disjoint_triple_packings: need n >= 3");
    if (auto dir = detail::designs_override_dir(designs_dir)) {
        std::string path = *dir + "/triples_" + std::to_string(n) + ".design";
        if (std::ifstream probe(path); probe) {
            auto d = import_design(path);
            if (auto* tf = std::get_if<TriplePackingFamily>(&d); tf && tf->n == n) return *tf;
            throw std::runtime_error("disjoint_triple_packings: " + path +
                                     " does not hold a triples family for n=" + std::to_string(n));
        }
    }
    TriplePackingFamily tf;
    switch (n) {
        case 3:
            tf.n = 3;
            tf.packings = {{Triple{0, 1, 2}}};
            tf.optimal_count = 1;
            break;
        case 4:
            tf.n = 4;
            tf.packings = {{Triple{0, 1, 2}}, {Triple{0, 1, 3}}, {Triple{0, 2, 3}}, {Triple{1, 2, 3}}};
            tf.optimal_count = 4;
            break;
        case 5: return detail::parse_triples_string(bundled::triples_5);
        case 6: return detail::delete_point(detail::parse_triples_string(bundled::triples_7), 1);
        case 7: return detail::parse_triples_string(bundled::triples_7);
        case 8: return detail::parse_triples_string(bundled::triples_8);
        case 9: return detail::parse_triples_string(bundled::triples_9);
        case 10: return detail::parse_triples_string(bundled::triples_10);
        case 11: return detail::parse_triples_string(bundled::triples_11);
        case 12: return detail::parse_triples_string(bundled::triples_12);
        case 13: return detail::parse_triples_string(bundled::triples_13);
        default:
            throw std::runtime_error(
                "disjoint_triple_packings: no bundled family for n=" + std::to_string(n) +
                " (bundled range is n <= 13; supply one via --designs-dir or run the search)");
    }
    tf.validate();
    return tf;
}

// ---------------------------------------------------------------------------
// alpha-resolvable BIBDs
// ---------------------------------------------------------------------------

namespace detail {

/// Hamiltonian decomposition of K_M for odd M (Walecki): the 2-parallel
/// classes of a 2-resolvable BIBD(M,2,1).
inline std::vector<std::vector<std::vector<int>>> walecki_cycles(int M) {
    const int k2 = M - 1;  // even
    std::vector<std::vector<std::vector<int>>> classes;
    for (int i = 0; i < k2 / 2; ++i) {
        // zigzag sequence: inf, 0, 1, 2k-1, 2, 2k-2, ... , k   (+ i on Z_2k)
        std::vector<int> seq;
        seq.push_back(M - 1);
        seq.push_back(i % k2);
        for (int j = 1; j <= k2 / 2; ++j) {
            seq.push_back((j + i) % k2);
            if (j < k2 / 2) seq.push_back((k2 - j + i) % k2);
        }
        std::vector<std::vector<int>> cls;
        for (std::size_t a = 0; a < seq.size(); ++a) {
            int u = seq[a], v = seq[(a + 1) % seq.size()];
            cls.push_back({std::min(u, v), std::max(u, v)});
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace detail

/// alpha-resolvable BIBD(M,k,lambda).  Generated families: k=2, lambda=1
/// with alpha=1 (even M, a 1-factorization) or alpha=2 (odd M, Hamiltonian
/// cycles).  The resolvable BIBD(9,3,1) ships bundled.  Anything else is
/// reported unavailable after the necessary conditions are checked.
inline ResolvableDesign alpha_resolvable_bibd(int M, int k, int lambda, int alpha,
                                              const std::optional<std::string>& designs_dir =
                                                  std::nullopt) {
    if (M < 2 || k < 2 || lambda < 1 || alpha < 1)
        throw std::invalid_argument("alpha_resolvable_bibd: malformed parameters");
    if ((std::int64_t(lambda) * (M - 1)) % (std::int64_t(alpha) * (k - 1)) != 0)
        throw std::invalid_argument(
            "alpha_resolvable_bibd: necessary condition lambda(M-1) = 0 mod alpha(k-1) fails");
    if ((std::int64_t(lambda) * M * (M - 1)) % (std::int64_t(k) * (k - 1)) != 0)
        throw std::invalid_argument(
            "alpha_resolvable_bibd: necessary condition lambda M(M-1) = 0 mod k(k-1) fails");
    if ((std::int64_t(alpha) * M) % k != 0)
        throw std::invalid_argument(
            "alpha_resolvable_bibd: necessary condition alpha M = 0 mod k fails");
    if (M == 10 && k == 4 && lambda == 2 && alpha == 2)
        throw std::invalid_argument("alpha_resolvable_bibd: (10,4,2,2) is a known exception");
    if (k == 3 && alpha == 1 && M == 6 && lambda % 4 == 2)
        throw std::invalid_argument("alpha_resolvable_bibd: (6,3,lambda,1) with lambda = 2 mod 4 is a known exception");

    if (auto dir = detail::designs_override_dir(designs_dir)) {
        std::string path = *dir + "/resolvable_" + std::to_string(M) + "_" + std::to_string(k) +
                           "_" + std::to_string(lambda) + "_" + std::to_string(alpha) + ".design";
        if (std::ifstream probe(path); probe) {
            auto d = import_design(path);
            if (auto* rd = std::get_if<ResolvableDesign>(&d)) return *rd;
        }
    }

    ResolvableDesign rd;
    rd.points = M;
    rd.block_size = k;
    rd.lambda = lambda;
    rd.alpha = alpha;
    if (k == 2 && lambda == 1 && alpha == 1 && M % 2 == 0) {
        FactorSet fs = one_factorization(M);
        for (const auto& f : fs.factors) {
            std::vector<std::vector<int>> cls;
            for (auto [a, b] : f) cls.push_back({a, b});
            rd.classes.push_back(std::move(cls));
        }
    } else if (k == 2 && lambda == 1 && alpha == 2 && M % 2 == 1) {
        rd.classes = detail::walecki_cycles(M);
    } else if (M == 9 && k == 3 && lambda == 1 && alpha == 1) {
        std::istringstream is(bundled::resolvable_9_3_1);
        return std::get<ResolvableDesign>(parse_design(is));
    } else {
        throw std::runtime_error("alpha_resolvable_bibd: parameters (" + std::to_string(M) + "," +
                                 std::to_string(k) + "," + std::to_string(lambda) + "," +
                                 std::to_string(alpha) +
                                 ") not served by a generator or bundled data");
    }
    rd.validate();
    return rd;
}

}  // namespace mcwc
