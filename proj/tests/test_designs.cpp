#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <set>

#include "mcwc/designs.hpp"

using namespace mcwc;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        path = "mcwc_test_design_" + std::to_string(rand()) + ".tmp";
        std::ofstream os(path);
        os << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("one_factorization") {
    CHECK_THROWS_AS(one_factorization(5), std::invalid_argument);
    SECTION("n = 2 is the single edge") {
        FactorSet fs = one_factorization(2);
        REQUIRE(fs.factors.size() == 1);
        CHECK(fs.factors[0] == std::vector<Edge>{{0, 1}});
    }
    SECTION("n = 4 gives the three perfect matchings") {
        FactorSet fs = one_factorization(4);
        REQUIRE(fs.factors.size() == 3);
        std::set<std::set<Edge>> got;
        for (auto& f : fs.factors) got.insert(std::set<Edge>(f.begin(), f.end()));
        std::set<std::set<Edge>> want{{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
        CHECK(got == want);
    }
    SECTION("invariants hold for larger n") {
        for (int n : {6, 8, 12}) CHECK_NOTHROW(one_factorization(n).validate());
    }
}

TEST_CASE("near_one_factorization") {
    CHECK_THROWS_AS(near_one_factorization(4), std::invalid_argument);
    SECTION("n = 3") {
        FactorSet fs = near_one_factorization(3);
        REQUIRE(fs.factors.size() == 3);
        CHECK(fs.factors[0] == std::vector<Edge>{{1, 2}});
        CHECK(fs.factors[1] == std::vector<Edge>{{0, 2}});
        CHECK(fs.factors[2] == std::vector<Edge>{{0, 1}});
    }
    SECTION("n = 1 has no factors") {
        CHECK(near_one_factorization(1).factors.empty());
    }
    SECTION("factor i misses exactly point i") {
        for (int n : {5, 7, 9, 13}) {
            FactorSet fs = near_one_factorization(n);
            fs.validate();
            for (int i = 0; i < n; ++i) {
                std::set<int> covered;
                for (auto [a, b] : fs.factors[i]) {
                    covered.insert(a);
                    covered.insert(b);
                }
                CHECK(covered.count(i) == 0);
                CHECK(static_cast<int>(covered.size()) == n - 1);
            }
        }
    }
}

TEST_CASE("latin_rectangle") {
    SECTION("single row") {
        LatinRectangle lr = latin_rectangle(1, 5);
        CHECK(lr.cells[0] == std::vector<int>{0, 1, 2, 3, 4});
    }
    SECTION("cyclic rule") {
        LatinRectangle lr = latin_rectangle(2, 3);
        CHECK(lr.cells[0] == std::vector<int>{0, 1, 2});
        CHECK(lr.cells[1] == std::vector<int>{1, 2, 0});
    }
    SECTION("full square") {
        for (int n : {1, 4, 7}) CHECK_NOTHROW(latin_rectangle(n, n).validate());
    }
    CHECK_THROWS_AS(latin_rectangle(5, 4), std::invalid_argument);
}

TEST_CASE("disjoint_triple_packings bundled families") {
    SECTION("n = 7: sizes 7,7,6,6,5,4 partitioning all 35 triples") {
        TriplePackingFamily tf = disjoint_triple_packings(7);
        std::vector<std::size_t> sizes;
        for (auto& P : tf.packings) sizes.push_back(P.size());
        CHECK(sizes == std::vector<std::size_t>{7, 7, 6, 6, 5, 4});
        CHECK(tf.optimal_count == 2);
        CHECK(tf.partitions_all_triples());
    }
    SECTION("n = 5: five packings of size 2 partitioning all 10 triples") {
        TriplePackingFamily tf = disjoint_triple_packings(5);
        CHECK(tf.packings.size() == 5);
        for (auto& P : tf.packings) CHECK(P.size() == 2);
        CHECK(tf.optimal_count == 5);
        CHECK(tf.partitions_all_triples());
    }
    SECTION("n = 6 is derived from n = 7 with sizes 4,4,4,4,2,2") {
        TriplePackingFamily tf = disjoint_triple_packings(6);
        std::vector<std::size_t> sizes;
        for (auto& P : tf.packings) sizes.push_back(P.size());
        CHECK(sizes == std::vector<std::size_t>{4, 4, 4, 4, 2, 2});
        CHECK(tf.optimal_count == 4);
        CHECK(tf.partitions_all_triples());
    }
    SECTION("n = 9: a large set of seven disjoint Steiner triple systems") {
        TriplePackingFamily tf = disjoint_triple_packings(9);
        CHECK(tf.packings.size() == 7);
        for (auto& P : tf.packings) CHECK(P.size() == 12);
        CHECK(tf.partitions_all_triples());
    }
    SECTION("whole bundled range validates and partitions") {
        for (int n = 3; n <= 13; ++n) {
            TriplePackingFamily tf = disjoint_triple_packings(n);
            CHECK_NOTHROW(tf.validate());
            CHECK(tf.partitions_all_triples());
            CHECK(tf.optimal_count >= max_disjoint_optimal_packings(n));
        }
    }
    SECTION("expected family shapes at n = 10..13") {
        CHECK(disjoint_triple_packings(10).packings.back().size() == 3);   // (n-1)/3
        CHECK(disjoint_triple_packings(11).packings.back().size() == 12);  // 4(n-2)/3
        CHECK(disjoint_triple_packings(12).packings.size() == 11);
        CHECK(disjoint_triple_packings(13).packings.size() == 11);
        for (auto& P : disjoint_triple_packings(13).packings) CHECK(P.size() == 26);
    }
    SECTION("out of range names the gap") {
        CHECK_THROWS_WITH(disjoint_triple_packings(20),
                          Catch::Matchers::ContainsSubstring("n=20") &&
                              Catch::Matchers::ContainsSubstring("n <= 13"));
    }
}

TEST_CASE("alpha_resolvable_bibd") {
    SECTION("(3,2,1,2) is the 2-parallel triangle") {
        ResolvableDesign rd = alpha_resolvable_bibd(3, 2, 1, 2);
        REQUIRE(rd.classes.size() == 1);
        std::set<std::vector<int>> blocks(rd.classes[0].begin(), rd.classes[0].end());
        CHECK(blocks == std::set<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
    }
    SECTION("(4,2,1,1) is the 1-factorization of K_4") {
        ResolvableDesign rd = alpha_resolvable_bibd(4, 2, 1, 1);
        CHECK(rd.classes.size() == 3);
        CHECK_NOTHROW(rd.validate());
    }
    SECTION("(10,4,2,2) is a known exception") {
        CHECK_THROWS_WITH(alpha_resolvable_bibd(10, 4, 2, 2),
                          Catch::Matchers::ContainsSubstring("exception"));
    }
    SECTION("violated congruence is named") {
        CHECK_THROWS_WITH(alpha_resolvable_bibd(8, 3, 1, 1),
                          Catch::Matchers::ContainsSubstring("lambda(M-1)"));
        CHECK_THROWS_WITH(alpha_resolvable_bibd(9, 2, 1, 1),
                          Catch::Matchers::ContainsSubstring("alpha M"));
    }
    SECTION("Hamiltonian-cycle classes for odd M") {
        for (int M : {5, 7, 9, 11, 13}) {
            ResolvableDesign rd = alpha_resolvable_bibd(M, 2, 1, 2);
            CHECK(rd.class_count() == (M - 1) / 2);
            CHECK_NOTHROW(rd.validate());
        }
    }
    SECTION("bundled resolvable BIBD(9,3,1)") {
        ResolvableDesign rd = alpha_resolvable_bibd(9, 3, 1, 1);
        CHECK(rd.class_count() == 4);
        CHECK(rd.blocks_per_class() == 3);
        CHECK_NOTHROW(rd.validate());
    }
    SECTION("unserved parameters are reported") {
        CHECK_THROWS_WITH(alpha_resolvable_bibd(9, 3, 3, 3),
                          Catch::Matchers::ContainsSubstring("not served"));
    }
}

TEST_CASE("import_design") {
    SECTION("bundled n = 7 family file round trips") {
        TempFile f(bundled::triples_7);
        Design d = import_design(f.path);
        auto* tf = std::get_if<TriplePackingFamily>(&d);
        REQUIRE(tf);
        CHECK(tf->n == 7);
        CHECK(tf->packings.size() == 6);
    }
    SECTION("malformed line reports its number") {
        TempFile f("DESIGN v1 type=triples n=5 params=optimal_count=0\npacking\n0 1 x\n");
        CHECK_THROWS_WITH(import_design(f.path), Catch::Matchers::ContainsSubstring("line 3"));
    }
    SECTION("a family sharing a triple is rejected with the witness") {
        TempFile f(
            "DESIGN v1 type=triples n=5 params=optimal_count=0\n"
            "packing\n0 1 2\npacking\n0 1 2\n");
        CHECK_THROWS_WITH(import_design(f.path),
                          Catch::Matchers::ContainsSubstring("triple in two packings"));
    }
    SECTION("factorset type") {
        TempFile f(
            "DESIGN v1 type=factorset n=4\n"
            "factor\n0 1\n2 3\nfactor\n0 2\n1 3\nfactor\n0 3\n1 2\n");
        Design d = import_design(f.path);
        CHECK(std::get_if<FactorSet>(&d));
    }
    SECTION("unknown type is rejected") {
        TempFile f("DESIGN v1 type=widget n=4\n");
        CHECK_THROWS_WITH(import_design(f.path), Catch::Matchers::ContainsSubstring("unknown type"));
    }
    SECTION("designs dir override is honored") {
        TriplePackingFamily tiny;
        tiny.n = 4;
        tiny.packings = {{Triple{0, 1, 2}}};
        tiny.optimal_count = 1;
        std::ofstream("triples_4.design") << format_design(tiny);
        TriplePackingFamily got = disjoint_triple_packings(4, std::string("."));
        CHECK(got.packings.size() == 1);
        std::remove("triples_4.design");
        CHECK(disjoint_triple_packings(4, std::string(".")).packings.size() == 4);
    }
}
