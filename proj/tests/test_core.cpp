#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mcwc/constructions.hpp"
#include "mcwc/core.hpp"

using namespace mcwc;

namespace {

Codeword cw(const std::vector<int>& profile, const std::string& bits) {
    return Codeword(profile, bits);
}

// The three matrices of the small doubly resolvable packing example.
Code example_3x3_code() {
    Shape sh(std::vector<int>{3, 3, 3}, std::vector<int>{2, 2, 2}, 6);
    Code c(sh);
    c.insert(cw({3, 3, 3}, "101110011"));
    c.insert(cw({3, 3, 3}, "110011101"));
    c.insert(cw({3, 3, 3}, "011101110"));
    return c;
}

}  // namespace

TEST_CASE("shape derived quantities") {
    Shape sh({7, 5}, {3, 1}, 4);
    CHECK(sh.total_weight() == 4);
    CHECK(sh.delta() == 2);
    CHECK(sh.strength() == 3);
    CHECK(sh.total_length() == 12);
    CHECK_FALSE(sh.is_uniform());
    CHECK_THROWS_AS(Shape({4}, {5}, 4), std::invalid_argument);
    CHECK_THROWS_AS(Shape({4}, {2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(Shape({4}, {2}, 0), std::invalid_argument);
}

TEST_CASE("codeword serialization round trip and supports") {
    Codeword w = cw({4, 3}, "1100010");
    CHECK(w.serialize() == "1100010");
    CHECK(w.part_weight(0) == 2);
    CHECK(w.part_weight(1) == 1);
    CHECK(w.supports() == std::vector<std::vector<int>>{{0, 1}, {1}});
    CHECK(Codeword::from_supports({4, 3}, {{0, 1}, {1}}) == w);
    CHECK_THROWS_AS(cw({4}, "12a0"), std::invalid_argument);
    CHECK_THROWS_AS(cw({4}, "110"), std::invalid_argument);
}

TEST_CASE("distance basics") {
    Codeword u = cw({4}, "1100");
    CHECK(distance(u, u) == 0);
    CHECK(distance(u, cw({4}, "0110")) == 2);
    // the first two matrices of the 3x3 example are at distance 6
    Code ex = example_3x3_code();
    CHECK(distance(cw({3, 3, 3}, "101110011"), cw({3, 3, 3}, "110011101")) == 6);
    CHECK_THROWS_AS(distance(u, cw({2, 2}, "1100")), std::invalid_argument);
}

TEST_CASE("distance is a metric on random triples") {
    std::mt19937 rng(12345);
    for (int it = 0; it < 200; ++it) {
        int parts = 1 + int(rng() % 3);
        std::vector<int> profile;
        int total = 0;
        for (int i = 0; i < parts; ++i) {
            profile.push_back(1 + int(rng() % 6));
            total += profile.back();
        }
        auto rand_word = [&] {
            std::string bits(total, '0');
            for (auto& ch : bits) ch = rng() % 2 ? '1' : '0';
            return cw(profile, bits);
        };
        Codeword a = rand_word(), b = rand_word(), c = rand_word();
        CHECK(distance(a, b) >= 0);
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c));
        CHECK((distance(a, b) == 0) == (a == b));
    }
}

TEST_CASE("verify_mcwc") {
    SECTION("the 3x3 example code passes") {
        VerificationReport rep = verify_mcwc(example_3x3_code());
        CHECK(rep.passed());
        CHECK(rep.observed_min_distance == 6);
    }
    SECTION("single codeword passes vacuously") {
        Shape sh({4}, {2}, 8);
        Code c(sh);
        c.insert(cw({4}, "1100"));
        CHECK(verify_mcwc(c).passed());
    }
    SECTION("distance violation is reported with a witness pair") {
        Shape sh({4, 4}, {2, 2}, 4);
        Code c(sh);
        c.insert(cw({4, 4}, "11001100"));
        c.insert(cw({4, 4}, "11001010"));
        VerificationReport rep = verify_mcwc(c);
        CHECK_FALSE(rep.passed());
        CHECK(rep.observed_min_distance == 2);
        REQUIRE(rep.violating_pair.has_value());
    }
    SECTION("weight violation is reported, not thrown") {
        Shape sh({4}, {2}, 2);
        Code c(sh);
        c.insert(cw({4}, "1110"));
        VerificationReport rep = verify_mcwc(c);
        CHECK_FALSE(rep.passed());
        CHECK_FALSE(rep.weight_ok[0]);
    }
}

TEST_CASE("verify_2d") {
    SECTION("3x3 example with l = 2") {
        CHECK(verify_2d(example_3x3_code(), 2).passed());
        CHECK_FALSE(verify_2d(example_3x3_code(), 3).passed());
    }
    SECTION("degenerate all-ones stack with l = m") {
        Shape sh({3, 3}, {3, 3}, 2);
        Code c(sh);
        c.insert(cw({3, 3}, "111111"));
        CHECK(verify_2d(c, 2).passed());
    }
    SECTION("non-uniform lengths have no matrix view") {
        Shape sh({3, 4}, {1, 1}, 2);
        Code c(sh);
        CHECK_THROWS_AS(verify_2d(c, 1), std::invalid_argument);
    }
    SECTION("6x6 bundled array decodes to 4 codewords at l = 2") {
        Code c = code_from_drp(bundled_arrays::drp_6x6());
        CHECK(c.size() == 4);
        CHECK(verify_2d(c, 2).passed());
    }
}

TEST_CASE("code_to_blocks / blocks_to_code") {
    SECTION("3x3 example maps to 3 blocks of three 2-subsets") {
        PackingInstance p = code_to_blocks(example_3x3_code());
        REQUIRE(p.blocks.size() == 3);
        CHECK(p.strength == 6 - 3 + 1);
        CHECK(p.lambda == 1);
        for (const auto& b : p.blocks) {
            REQUIRE(b.parts.size() == 3);
            for (const auto& s : b.parts) CHECK(s.size() == 2);
        }
        CHECK(verify_generalized_packing(p).passed());
        CHECK(blocks_to_code(p, 6) == example_3x3_code());
    }
    SECTION("empty code gives empty block list") {
        Code c(Shape({4}, {2}, 4));
        CHECK(code_to_blocks(c).blocks.empty());
    }
    SECTION("single block round trips to a single codeword") {
        PackingInstance p;
        p.lengths = {5, 4};
        p.block_sizes = {2, 1};
        p.strength = 3 - 2 + 1;  // W=3, d=4
        p.lambda = 1;
        p.blocks.push_back(GeneralizedBlock{{{1, 3}, {2}}});
        Code c = blocks_to_code(p, 4);
        REQUIRE(c.size() == 1);
        CHECK(c.words()[0].serialize() == "010100010");
        PackingInstance q = code_to_blocks(c);
        CHECK(q.blocks == p.blocks);
    }
    SECTION("strength mismatch is rejected") {
        PackingInstance p;
        p.lengths = {4};
        p.block_sizes = {2};
        p.strength = 2;
        p.lambda = 1;
        CHECK_THROWS_AS(blocks_to_code(p, 4), std::invalid_argument);  // t should be 1
    }
    SECTION("a size-12 optimal code maps to 12 admissible-clean blocks") {
        Code c = mcwc_w2_d4(2, 4).code;
        REQUIRE(c.size() == 12);
        PackingInstance p = code_to_blocks(c);
        CHECK(p.blocks.size() == 12);
        CHECK(verify_generalized_packing(p).passed());
    }
    SECTION("round trip through a case-5 packing gives an 8-word code at d=4") {
        PackingInstance p = construct_k4_packing({2, 2, 2, 2}, {1, 1, 1, 1}).packing;
        Code c = blocks_to_code(p, 4);
        CHECK(c.size() == 8);
        // oracle: direct pairwise distance scan
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b)
                CHECK(distance(c.words()[a], c.words()[b]) >= 4);
    }
}

TEST_CASE("verify_generalized_packing") {
    SECTION("case-5 construction on (2,3,4,5) passes a full admissible scan") {
        PackingInstance p = construct_k4_packing({2, 3, 4, 5}, {1, 1, 1, 1}).packing;
        CHECK(verify_generalized_packing(p).passed());
    }
    SECTION("one block alone passes") {
        PackingInstance p;
        p.lengths = {6, 3};
        p.block_sizes = {3, 1};
        p.strength = 3;
        p.lambda = 1;
        p.blocks.push_back(GeneralizedBlock{{{0, 2, 4}, {1}}});
        CHECK(verify_generalized_packing(p).passed());
    }
    SECTION("two identical blocks fail with a witness tuple") {
        PackingInstance p;
        p.lengths = {6, 3};
        p.block_sizes = {3, 1};
        p.strength = 3;
        p.lambda = 1;
        p.blocks.push_back(GeneralizedBlock{{{0, 2, 4}, {1}}});
        p.blocks.push_back(GeneralizedBlock{{{0, 2, 4}, {1}}});
        VerificationReport rep = verify_generalized_packing(p);
        CHECK_FALSE(rep.passed());
        REQUIRE(rep.violating_pair.has_value());
        CHECK(rep.violating_pair->first == 0);
        CHECK(rep.violating_pair->second == 1);
        CHECK_FALSE(rep.witness.empty());
    }
}

TEST_CASE("prop-3 equivalence on constructed codes") {
    // any verified MCWC yields a lambda=1 packing of strength W - delta + 1
    for (auto [m, n] : {std::pair{2, 3}, {2, 5}, {3, 4}}) {
        Code c = mcwc_w2_d4(m, n).code;
        PackingInstance p = code_to_blocks(c);
        CHECK(p.strength == c.shape().strength());
        CHECK(verify_generalized_packing(p).passed());
        CHECK(blocks_to_code(p, c.shape().distance()) == c);
    }
}

TEST_CASE("codes are sorted duplicate-free sets") {
    Shape sh({4}, {2}, 2);
    Code a(sh);
    a.insert(cw({4}, "1100"));
    a.insert(cw({4}, "0110"));
    a.insert(cw({4}, "1100"));
    CHECK(a.size() == 2);
    Code b(sh, {cw({4}, "0110"), cw({4}, "1100")});
    CHECK(a == b);
    CHECK(a.words()[0].serialize() < a.words()[1].serialize());
}
