// constructions.hpp -- the constructive families: constant-sum codes, the
// product construction, optimal d=4 families for w=2 and w=3, the five k=4
// generalized-packing cases, and the 2D constructions through doubly
// resolvable packings.  Every emitted object is re-verified before return.

#pragma once

#include "bounds.hpp"
#include "core.hpp"
#include "designs.hpp"

namespace mcwc {

struct ConstructionCertificate {
    std::size_t size = 0;
    int distance = 0;
    bool optimal = false;
    std::string bound_method;        // bound met, or citation when search-certified
    std::optional<Int> bound_value;  // value of that bound
    std::string provenance;          // which construction produced the object
};

struct ConstructedCode {
    Code code;
    ConstructionCertificate certificate;
};

struct ConstructedPacking {
    PackingInstance packing;
    ConstructionCertificate certificate;
};

namespace detail {

inline void must_pass(const VerificationReport& rep, const std::string& who) {
    if (!rep.passed())
        throw std::logic_error(who + ": emitted object failed verification (" + rep.witness + ")");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Product-style MCWC constructions
// ---------------------------------------------------------------------------

/// MCWC(m,n,4,1) of size n^{m-1}: row i is the indicator of a symbol s_i
/// with sum s_i = 0 (mod n).
inline Code constant_sum_mcwc(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("constant_sum_mcwc: need m,n >= 1");
    std::vector<int> lengths(m, n);
    Code code(Shape(lengths, std::vector<int>(m, 1), 4));
    std::vector<int> sym(m, 0);
    auto rec = [&](auto&& self, int part, int acc) -> void {
        if (part == m - 1) {
            sym[part] = (n - acc % n) % n;
            std::vector<std::vector<int>> sup(m);
            for (int i = 0; i < m; ++i) sup[i] = {sym[i]};
            code.insert(Codeword::from_supports(lengths, sup));
            return;
        }
        for (int s = 0; s < n; ++s) {
            sym[part] = s;
            self(self, part + 1, acc + s);
        }
    };
    rec(rec, 0, 0);
    detail::must_pass(verify_mcwc(code), "constant_sum_mcwc");
    return code;
}

/// Concatenation product: inner constant-weight codes over one part, indexed
/// by an outer weight-1 code.  Claimed distance min(d3*d2/2, d1).
inline ConstructedCode product_construction(const std::vector<Code>& inner, const Code& outer,
                                            int d1, int d2) {
    if (inner.empty()) throw std::invalid_argument("product_construction: no inner codes");
    const int n = inner[0].shape().lengths()[0];
    const int w = inner[0].shape().weights()[0];
    for (const auto& c : inner) {
        if (c.shape().parts() != 1 || c.shape().lengths()[0] != n || c.shape().weights()[0] != w)
            throw std::invalid_argument("product_construction: inner codes must share one (n,w) part");
        Code chk(Shape({n}, {w}, d1), c.words());
        if (!verify_mcwc(chk).passed())
            throw std::invalid_argument("product_construction: an inner code misses distance d1");
    }
    {
        Code uni(Shape({n}, {w}, d2));
        for (const auto& c : inner)
            for (const auto& word : c.words()) uni.insert(word);
        if (!verify_mcwc(uni).passed())
            throw std::invalid_argument("product_construction: inner union misses distance d2");
    }
    const Shape& osh = outer.shape();
    const int m = osh.parts();
    const int s = osh.lengths()[0];
    for (int i = 0; i < m; ++i)
        if (osh.lengths()[i] != s || osh.weights()[i] != 1)
            throw std::invalid_argument("product_construction: outer must be an MCWC(m,s,d3,1)");
    if (!verify_mcwc(outer).passed())
        throw std::invalid_argument("product_construction: outer code fails verification");

    const int d3 = osh.distance();
    const int claimed = std::min(d3 * d2 / 2, d1);
    std::vector<int> lengths(m, n);
    std::vector<Codeword> words;
    std::vector<std::vector<int>> sup(m);
    for (const auto& u : outer.words()) {
        auto usup = u.supports();
        auto rec = [&](auto&& self, int part) -> void {
            if (part == m) {
                words.push_back(Codeword::from_supports(lengths, sup));
                return;
            }
            const int j = usup[part][0];  // symbol j selects inner code j
            if (j >= static_cast<int>(inner.size()))
                throw std::invalid_argument(
                    "product_construction: outer uses a symbol with no inner code");
            const Code& ci = inner[j];
            for (const auto& v : ci.words()) {
                sup[part] = v.supports()[0];
                self(self, part + 1);
            }
        };
        rec(rec, 0);
    }
    Code code(Shape(lengths, std::vector<int>(m, w), claimed), std::move(words));
    detail::must_pass(verify_mcwc(code), "product_construction");
    ConstructionCertificate cert;
    cert.size = code.size();
    cert.distance = claimed;
    cert.provenance = "product";
    return {std::move(code), cert};
}

/// Optimal MCWC(m,n,4,2) of size C(n,2)^{m-1} * floor(n/2), built from the
/// (near-)1-factorization of K_n and a constant-sum outer code.
inline ConstructedCode mcwc_w2_d4(int m, int n) {
    if (m < 1 || n < 2) throw std::invalid_argument("mcwc_w2_d4: need m >= 1, n >= 2");
    FactorSet fs = n % 2 == 0 ? one_factorization(n) : near_one_factorization(n);
    std::vector<Code> inner;
    for (const auto& f : fs.factors) {
        Code c(Shape({n}, {2}, 4));
        for (auto [a, b] : f) c.insert(Codeword::from_supports({n}, {{a, b}}));
        inner.push_back(std::move(c));
    }
    Code outer = constant_sum_mcwc(m, static_cast<int>(inner.size()));
    ConstructedCode out = product_construction(inner, outer, 4, 2);
    Int bound = 1;
    for (int i = 0; i < m - 1; ++i) bound *= binomial(n, 2);
    bound *= n / 2;
    if (Int(out.code.size()) != bound)
        throw std::logic_error("mcwc_w2_d4: size does not meet the w=2 bound");
    out.certificate.optimal = true;
    out.certificate.bound_method = "sw-bound(w=2)";
    out.certificate.bound_value = bound;
    out.certificate.provenance = "w2d4";
    return out;
}

/// MCWC(m,n,4,3) from disjoint triple packings.  Optimal (and exact) for
/// n = 0,1,2,3 (mod 6), n not 6 or 7; for n = 4,5 (mod 6), n >= 10, only the
/// guaranteed lower bound is claimed.
inline ConstructedCode mcwc_w3_d4(int m, int n,
                                  const std::optional<std::string>& designs_dir = std::nullopt) {
    if (m < 1 || n < 4) throw std::invalid_argument("mcwc_w3_d4: need m >= 1, n >= 4");
    const int mod = n % 6;
    const bool optimal_branch = (mod == 0 || mod == 1 || mod == 2 || mod == 3);
    if (optimal_branch && (n == 6 || n == 7))
        throw std::invalid_argument("mcwc_w3_d4: n = 6 and n = 7 are unsupported (no full partition into optimal packings)");
    if (!optimal_branch && n < 10)
        throw std::invalid_argument("mcwc_w3_d4: lower-bound branch needs n >= 10");

    TriplePackingFamily fam = disjoint_triple_packings(n, designs_dir);
    const int s = max_disjoint_optimal_packings(n);
    if (fam.optimal_count < s)
        throw std::runtime_error("mcwc_w3_d4: packing family for n=" + std::to_string(n) +
                                 " has too few optimal packings");
    std::vector<Code> inner;
    for (int i = 0; i < s; ++i) {
        Code c(Shape({n}, {3}, 4));
        for (const auto& T : fam.packings[i])
            c.insert(Codeword::from_supports({n}, {{T[0], T[1], T[2]}}));
        inner.push_back(std::move(c));
    }
    Code outer = constant_sum_mcwc(m, s);
    ConstructedCode out = product_construction(inner, outer, 4, 2);
    out.certificate.provenance = "w3d4";
    if (optimal_branch) {
        Int bound = 1;
        for (int i = 0; i < m - 1; ++i) bound *= binomial(n, 3);
        bound *= Int(n) * ((n - 1) / 2) / 3;
        if (Int(out.code.size()) != bound)
            throw std::logic_error("mcwc_w3_d4: size does not meet the w=3 bound");
        out.certificate.optimal = true;
        out.certificate.bound_method = "sw-bound(w=3)";
        out.certificate.bound_value = bound;
    } else {
        out.certificate.optimal = false;
        out.certificate.bound_method = "lower-bound-only";
    }
    return out;
}

// ---------------------------------------------------------------------------
// k = 4 generalized packings (Cases 2-5)
// ---------------------------------------------------------------------------

inline ConstructedPacking construct_k4_packing(
    const std::vector<int>& lengths, const std::vector<int>& composition,
    const std::optional<std::string>& designs_dir = std::nullopt) {
    if (composition == std::vector<int>{4})
        throw std::invalid_argument(
            "construct_k4_packing: composition (4) is a plain 3-(n,4,1) packing; use the search "
            "engine or imported data");
    BoundResult target = k4_packing_number(lengths, composition);  // also validates arguments
    PackingInstance p;
    p.lengths = lengths;
    p.block_sizes = composition;
    p.strength = 3;
    p.lambda = 1;
    std::string provenance;

    if (composition == std::vector<int>{3, 1}) {
        const int n1 = lengths[0], n2 = lengths[1];
        TriplePackingFamily fam = disjoint_triple_packings(n1, designs_dir);
        const int j = std::min<int>(n2, static_cast<int>(fam.packings.size()));
        for (int i = 0; i < j; ++i)
            for (const auto& T : fam.packings[i])
                p.blocks.push_back(GeneralizedBlock{{{T[0], T[1], T[2]}, {i}}});
        provenance = "k4-case2";
    } else if (composition == std::vector<int>{2, 2}) {
        const int n1 = lengths[0], n2 = lengths[1];
        FactorSet f1 = n1 % 2 == 0 ? one_factorization(n1) : near_one_factorization(n1);
        FactorSet f2 = n2 % 2 == 0 ? one_factorization(n2) : near_one_factorization(n2);
        const std::size_t g = std::min(f1.factors.size(), f2.factors.size());
        for (std::size_t i = 0; i < g; ++i)
            for (auto [a, b] : f1.factors[i])
                for (auto [c, d] : f2.factors[i])
                    p.blocks.push_back(GeneralizedBlock{{{a, b}, {c, d}}});
        provenance = "k4-case3";
    } else if (composition == std::vector<int>{2, 1, 1}) {
        const int n1 = lengths[0];
        int rpart = 1, cpart = 2;  // rows indexed by the smaller singleton part
        if (lengths[1] > lengths[2]) std::swap(rpart, cpart);
        const int nr = lengths[rpart], nc = lengths[cpart];
        LatinRectangle lr = latin_rectangle(nr, nc);
        FactorSet f1 = n1 % 2 == 0 ? one_factorization(n1) : near_one_factorization(n1);
        const int smax = std::min<int>(static_cast<int>(f1.factors.size()), nc);
        for (int i = 0; i < nr; ++i)
            for (int jcol = 0; jcol < nc; ++jcol) {
                const int x = lr.cells[i][jcol];
                if (x >= smax) continue;
                for (auto [a, b] : f1.factors[x]) {
                    GeneralizedBlock blk;
                    blk.parts.resize(3);
                    blk.parts[0] = {a, b};
                    blk.parts[rpart] = {i};
                    blk.parts[cpart] = {jcol};
                    p.blocks.push_back(std::move(blk));
                }
            }
        provenance = "k4-case4";
    } else if (composition == std::vector<int>{1, 1, 1, 1}) {
        std::array<int, 4> order{0, 1, 2, 3};
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return lengths[a] != lengths[b] ? lengths[a] < lengths[b] : a < b;
        });
        const int n4 = lengths[order[3]];
        for (int s1 = 0; s1 < lengths[order[0]]; ++s1)
            for (int s2 = 0; s2 < lengths[order[1]]; ++s2)
                for (int s3 = 0; s3 < lengths[order[2]]; ++s3) {
                    const int s4 = ((-(s1 + s2 + s3)) % n4 + n4) % n4;
                    GeneralizedBlock blk;
                    blk.parts.resize(4);
                    blk.parts[order[0]] = {s1};
                    blk.parts[order[1]] = {s2};
                    blk.parts[order[2]] = {s3};
                    blk.parts[order[3]] = {s4};
                    p.blocks.push_back(std::move(blk));
                }
        provenance = "k4-case5";
    }

    std::sort(p.blocks.begin(), p.blocks.end());
    detail::must_pass(verify_generalized_packing(p), "construct_k4_packing");
    if (Int(p.blocks.size()) != target.value)
        throw std::logic_error("construct_k4_packing: block count misses the packing number");
    ConstructionCertificate cert;
    cert.size = p.blocks.size();
    cert.distance = 4;  // as an MCWC: t = 3, W = 4
    cert.optimal = true;
    const int n1 = lengths[0];
    const bool search_certified = composition == std::vector<int>{3, 1} &&
                                  ((n1 == 6 || n1 == 7) && lengths[1] == 5);
    cert.bound_method = search_certified ? "exhaustive-search" : to_string(target.method);
    cert.bound_value = target.value;
    cert.provenance = provenance;
    return {std::move(p), cert};
}

// ---------------------------------------------------------------------------
// Two-dimensional codes and doubly resolvable packings
// ---------------------------------------------------------------------------

/// An m x n array of optional blocks over {0..points-1}: rows are
/// w_i-parallel, columns l-parallel, every pair in at most lambda blocks.
struct DrpArray {
    int rows = 0, cols = 0;
    int points = 0;
    std::vector<int> row_weights;
    int col_weight = 0;
    int lambda = 0;
    std::vector<std::vector<std::vector<int>>> cells;

    int total_weight() const {
        return std::accumulate(row_weights.begin(), row_weights.end(), 0);
    }
    int distance() const { return 2 * (total_weight() - lambda); }

    void validate() const {
        if (static_cast<int>(cells.size()) != rows)
            throw std::invalid_argument("DrpArray: wrong row count");
        if (static_cast<int>(row_weights.size()) != rows)
            throw std::invalid_argument("DrpArray: one row weight per row required");
        std::map<Edge, int> paircnt;
        for (int i = 0; i < rows; ++i) {
            if (static_cast<int>(cells[i].size()) != cols)
                throw std::invalid_argument("DrpArray: wrong column count");
            std::vector<int> deg(points, 0);
            for (const auto& cell : cells[i])
                for (std::size_t a = 0; a < cell.size(); ++a) {
                    if (cell[a] < 0 || cell[a] >= points)
                        throw std::invalid_argument("DrpArray: point out of range");
                    if (a > 0 && cell[a] == cell[a - 1])
                        throw std::invalid_argument("DrpArray: repeated point in a cell");
                    ++deg[cell[a]];
                    for (std::size_t b = a + 1; b < cell.size(); ++b)
                        ++paircnt[{std::min(cell[a], cell[b]), std::max(cell[a], cell[b])}];
                }
            for (int v : deg)
                if (v != row_weights[i])
                    throw std::invalid_argument("DrpArray: row is not w_i-parallel");
        }
        for (int j = 0; j < cols; ++j) {
            std::vector<int> deg(points, 0);
            for (int i = 0; i < rows; ++i)
                for (int x : cells[i][j]) ++deg[x];
            for (int v : deg)
                if (v != col_weight)
                    throw std::invalid_argument("DrpArray: column is not l-parallel");
        }
        for (const auto& [pr, c] : paircnt)
            if (c > lambda)
                throw std::invalid_argument("DrpArray: pair multiplicity exceeds lambda");
    }
};

/// One codeword per point x: bit (i,j) set iff x lies in cell (i,j).
inline Code code_from_drp(const DrpArray& d) {
    for (int w : d.row_weights)
        if (w < 1) throw std::invalid_argument("code_from_drp: zero row weight");
    d.validate();
    std::vector<int> lengths(d.rows, d.cols);
    Code code(Shape(lengths, d.row_weights, d.distance()));
    for (int x = 0; x < d.points; ++x) {
        Codeword w = Codeword::zeros(lengths);
        for (int i = 0; i < d.rows; ++i)
            for (int j = 0; j < d.cols; ++j)
                if (std::find(d.cells[i][j].begin(), d.cells[i][j].end(), x) != d.cells[i][j].end())
                    w.set(i * d.cols + j);
        code.insert(std::move(w));
    }
    if (code.size() != static_cast<std::size_t>(d.points))
        throw std::logic_error("code_from_drp: two points share an identical incidence pattern");
    detail::must_pass(verify_2d(code, d.col_weight), "code_from_drp");
    return code;
}

/// Inverse of code_from_drp; point x is the index of the x-th codeword in
/// canonical order.
inline DrpArray drp_from_code(const Code& c, int l) {
    VerificationReport rep = verify_2d(c, l);
    if (!rep.passed())
        throw std::invalid_argument("drp_from_code: input fails 2D verification (" + rep.witness + ")");
    const Shape& sh = c.shape();
    DrpArray d;
    d.rows = sh.parts();
    d.cols = sh.lengths()[0];
    d.points = static_cast<int>(c.size());
    d.row_weights = sh.weights();
    d.col_weight = l;
    d.lambda = sh.total_weight() - sh.delta();
    d.cells.assign(d.rows, std::vector<std::vector<int>>(d.cols));
    for (int x = 0; x < d.points; ++x) {
        const Codeword& w = c.words()[x];
        for (int i = 0; i < d.rows; ++i)
            for (int j = 0; j < d.cols; ++j)
                if (w.get(i * d.cols + j)) d.cells[i][j].push_back(x);
    }
    d.validate();
    return d;
}

struct ConstructedDrp {
    DrpArray array;
    Code code;
    ConstructionCertificate certificate;
};

/// A Latin square of order n as a DRP(n,0;1,1;n,n): n permutation matrices
/// at pairwise distance 2n.
inline ConstructedDrp latin_drp(int n) {
    if (n < 1) throw std::invalid_argument("latin_drp: need n >= 1");
    LatinRectangle sq = latin_rectangle(n, n);
    DrpArray d;
    d.rows = d.cols = d.points = n;
    d.row_weights.assign(n, 1);
    d.col_weight = 1;
    d.lambda = 0;
    d.cells.assign(n, std::vector<std::vector<int>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.cells[i][j] = {sq.cells[i][j]};
    Code code = code_from_drp(d);
    ConstructionCertificate cert;
    cert.size = code.size();
    cert.distance = 2 * n;
    cert.optimal = true;
    cert.bound_method = "trivial";
    cert.bound_value = Int(n);
    cert.provenance = "latin";
    return {std::move(d), std::move(code), cert};
}

struct DrpWithCertificate {
    DrpArray array;
    ConstructionCertificate certificate;
};

/// Construction from an alpha-resolvable BIBD(M,k,lambda) with r = s*t
/// classes: per class a b x b cyclic-shift array, tiled s x t, giving a
/// DRP(M, b*lambda; alpha*t, alpha*s; b*s, b*t) and hence a
/// 2DMCWC(bs, bt, 2b(alpha r - lambda), alpha t, alpha s) of size M.
inline DrpWithCertificate drp_from_alpha_resolvable(const ResolvableDesign& design, int s, int t) {
    const int r = design.class_count();
    if (s < 1 || t < 1 || s * t != r)
        throw std::invalid_argument("drp_from_alpha_resolvable: need s*t = class count");
    const int b = design.blocks_per_class();
    DrpArray d;
    d.rows = b * s;
    d.cols = b * t;
    d.points = design.points;
    d.row_weights.assign(b * s, design.alpha * t);
    d.col_weight = design.alpha * s;
    d.lambda = b * design.lambda;
    d.cells.assign(d.rows, std::vector<std::vector<int>>(d.cols));
    for (int ci = 0; ci < r; ++ci) {
        const int si = ci / t, ti = ci % t;
        for (int row = 0; row < b; ++row)
            for (int col = 0; col < b; ++col) {
                auto blk = design.classes[ci][((row - col) % b + b) % b];
                std::sort(blk.begin(), blk.end());
                d.cells[si * b + row][ti * b + col] = std::move(blk);
            }
    }
    d.validate();
    ConstructionCertificate cert;
    cert.size = design.points;
    cert.distance = 2 * b * (design.alpha * r - design.lambda);
    if (cert.distance != d.distance())
        throw std::logic_error("drp_from_alpha_resolvable: distance formulas disagree");
    cert.provenance = "alpha-drp";
    auto bd = bound_2d(d.rows, d.cols, d.row_weights, d.col_weight, d.lambda);
    if (bd && bd->value == Int(design.points)) {
        cert.optimal = true;
        cert.bound_method = to_string(bd->method);
        cert.bound_value = bd->value;
    }
    return {std::move(d), cert};
}

/// Tiles every codeword a times vertically and b times horizontally:
/// a 2DMCWC(am, bn, abd, b*w repeated a times, al) of the same size.
inline ConstructedCode concatenate(const Code& code, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("concatenate: need a,b >= 1");
    const Shape& sh = code.shape();
    const int m = sh.parts();
    const int n = sh.lengths()[0];
    if (code.size() == 0) throw std::invalid_argument("concatenate: empty code");
    int l = 0;
    for (int i = 0; i < m; ++i) l += code.words()[0].get(i * n);
    VerificationReport rep = verify_2d(code, l);
    if (!rep.passed())
        throw std::invalid_argument("concatenate: input fails 2D verification (" + rep.witness + ")");

    std::vector<int> lengths(a * m, b * n);
    std::vector<int> weights;
    for (int q = 0; q < a; ++q)
        for (int i = 0; i < m; ++i) weights.push_back(b * sh.weights()[i]);
    Code out(Shape(lengths, weights, a * b * sh.distance()));
    for (const auto& w : code.words()) {
        Codeword big = Codeword::zeros(lengths);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                if (!w.get(i * n + j)) continue;
                for (int q = 0; q < a; ++q)
                    for (int p = 0; p < b; ++p)
                        big.set((q * m + i) * (b * n) + p * n + j);
            }
        out.insert(std::move(big));
    }
    detail::must_pass(verify_2d(out, a * l), "concatenate");
    ConstructionCertificate cert;
    cert.size = out.size();
    cert.distance = a * b * sh.distance();
    cert.provenance = "concat";
    const int lambda = sh.total_weight() - sh.delta();
    auto direct = bound_2d(m, n, sh.weights(), l, lambda);
    auto improved = improved_bound_2d(m, n, sh.weights(), l, lambda);
    if ((direct && direct->value == Int(code.size())) ||
        (improved && improved->value == Int(code.size()))) {
        cert.optimal = true;
        cert.bound_method = direct && direct->value == Int(code.size())
                                ? to_string(BoundMethod::Lemma2D)
                                : to_string(BoundMethod::Improved2D);
        cert.bound_value = Int(code.size());
    }
    return {std::move(out), cert};
}

/// Bundled arrays of the small doubly resolvable packings.
namespace bundled_arrays {

inline DrpArray parse_array(const char* text, int points, const std::vector<int>& row_weights,
                            int col_weight, int lambda) {
    std::istringstream is(text);
    DrpArray d;
    d.points = points;
    d.row_weights = row_weights;
    d.col_weight = col_weight;
    d.lambda = lambda;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::vector<int>> row;
        std::string cell;
        while (ls >> cell) {
            std::vector<int> blk;
            if (cell != "-")
                for (char ch : cell) blk.push_back(ch - '0');
            std::sort(blk.begin(), blk.end());
            row.push_back(std::move(blk));
        }
        d.cells.push_back(std::move(row));
    }
    d.rows = static_cast<int>(d.cells.size());
    d.cols = d.rows ? static_cast<int>(d.cells[0].size()) : 0;
    d.validate();
    return d;
}

inline DrpArray drp_3x3() { return parse_array(bundled::drp_3x3, 3, std::vector<int>(3, 2), 2, 3); }
inline DrpArray drp_6x6() { return parse_array(bundled::drp_6x6, 4, std::vector<int>(6, 2), 2, 2); }
inline DrpArray drp_9x9() { return parse_array(bundled::drp_9x9, 6, std::vector<int>(9, 2), 2, 2); }

}  // namespace bundled_arrays

}  // namespace mcwc
