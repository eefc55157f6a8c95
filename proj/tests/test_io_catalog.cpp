#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mcwc/catalog.hpp"
#include "mcwc/constructions.hpp"
#include "mcwc/io.hpp"

using namespace mcwc;

namespace {

struct Cleanup {
    std::vector<std::string> paths;
    ~Cleanup() {
        for (auto& p : paths) std::remove(p.c_str());
    }
    const char* add(const std::string& p) {
        paths.push_back(p);
        return paths.back().c_str();
    }
};

#ifdef MCWC_CLI_PATH
int run_cli(const std::string& args) {
    std::string cmd = std::string(MCWC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string run_cli_capture(const std::string& args) {
    std::string cmd = std::string(MCWC_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof buf, p)) out += buf;
    pclose(p);
    return out;
}
#endif

}  // namespace

TEST_CASE("code file round trip is bit-exact") {
    Cleanup gc;
    Code c = mcwc_w2_d4(2, 5).code;
    write_code_file(gc.add("t_roundtrip.mcwc"), c);
    Code back = read_code_file("t_roundtrip.mcwc");
    CHECK(back == c);
    // a second write is byte-identical
    std::ostringstream a, b;
    write_code(a, c);
    write_code(b, back);
    CHECK(a.str() == b.str());
}

TEST_CASE("packing file round trip") {
    Cleanup gc;
    PackingInstance p = construct_k4_packing({7, 5}, {3, 1}).packing;
    write_packing_file(gc.add("t_pack.gpack"), p);
    PackingInstance back = read_packing_file("t_pack.gpack");
    CHECK(back.blocks == p.blocks);
    CHECK(back.strength == p.strength);
    CHECK(back.lambda == p.lambda);
    CHECK(verify_generalized_packing(back).passed());
}

TEST_CASE("malformed code files are rejected with context") {
    Cleanup gc;
    {
        std::ofstream os(gc.add("t_bad.mcwc"));
        os << "MCWC v1\nm=1 lengths=4 weights=2 d=2\n11100\n";
    }
    CHECK_THROWS_WITH(read_code_file("t_bad.mcwc"), Catch::Matchers::ContainsSubstring(":3:"));
    {
        std::ofstream os(gc.add("t_bad2.mcwc"));
        os << "WRONG\n";
    }
    CHECK_THROWS_WITH(read_code_file("t_bad2.mcwc"),
                      Catch::Matchers::ContainsSubstring("MCWC v1"));
}

TEST_CASE("certificate sidecar round trips") {
    Cleanup gc;
    ConstructionCertificate cert = mcwc_w2_d4(2, 4).certificate;
    write_certificate_file(gc.add("t.cert"), cert);
    auto kv = read_certificate_file("t.cert");
    CHECK(kv["size"] == "12");
    CHECK(kv["optimal"] == "true");
    CHECK(kv["bound_value"] == "12");
}

TEST_CASE("catalog") {
    Cleanup gc;
    std::string path = "t_catalog.txt";
    gc.add(path);
    std::remove(path.c_str());
    Catalog cat(path);
    SECTION("builtin values answer without a ledger") {
        auto e = cat.lookup(Shape({7, 5}, {3, 1}, 4));
        REQUIRE(e);
        CHECK(e->value == 31);
        CHECK(e->exact);
        CHECK(e->provenance == "paper/search");
        auto t = cat.lookup(Shape({4}, {2}, 10));
        REQUIRE(t);
        CHECK(t->value == 1);
    }
    SECTION("recorded entries persist and exact ones are never weakened") {
        Shape sh({9, 9}, {4, 4}, 8);
        cat.record(sh, Int(100), false, "search");
        auto e = cat.lookup(sh);
        REQUIRE(e);
        CHECK(e->value == 100);
        CHECK_FALSE(e->exact);
        cat.record(sh, Int(120), true, "search");
        e = cat.lookup(sh);
        CHECK(e->value == 120);
        CHECK(e->exact);
        // smaller non-exact value may not displace the exact entry
        cat.record(sh, Int(90), false, "search");
        e = cat.lookup(sh);
        CHECK(e->value == 120);
        CHECK(e->exact);
        cat.compact();
        e = cat.lookup(sh);
        CHECK(e->value == 120);
        CHECK(e->exact);
        // part reordering hits the same canonical key
        CHECK(cat.lookup(Shape({9, 9}, {4, 4}, 8))->value == 120);
    }
    SECTION("canonical keys sort parts and record the permutation") {
        auto [k1, p1] = catalog_key(Shape({7, 5}, {3, 1}, 4));
        auto [k2, p2] = catalog_key(Shape({5, 7}, {1, 3}, 4));
        CHECK(k1 == k2);
        CHECK(p1 == "1,0");
        CHECK(p2 == "0,1");
    }
}

#ifdef MCWC_CLI_PATH

TEST_CASE("cli pipeline: construct, verify, export, bound, catalog") {
    Cleanup gc;
    gc.add("t_cli.mcwc");
    gc.add("t_cli.mcwc.cert");
    gc.add("t_cli.json");
    gc.add("t_cli_catalog.txt");
    SECTION("construct then verify passes, corrupted file fails with witness") {
        CHECK(run_cli("construct --family w2d4 --m 2 --n 4 --out t_cli.mcwc") == 0);
        std::string v = run_cli_capture("verify --in t_cli.mcwc");
        CHECK(v.find("ok size=12") != std::string::npos);
        // corrupt one word: flip two bits inside one part
        std::ifstream is("t_cli.mcwc");
        std::stringstream all;
        all << is.rdbuf();
        std::string content = all.str();
        auto pos = content.rfind("\n1");
        content[pos + 1] = content[pos + 1] == '1' ? '0' : '1';
        content[pos + 2] = content[pos + 2] == '1' ? '0' : '1';
        std::ofstream("t_cli.mcwc") << content;
        CHECK(run_cli("verify --in t_cli.mcwc") != 0);
        std::string bad = run_cli_capture("verify --in t_cli.mcwc");
        CHECK(bad.find("FAIL") != std::string::npos);
    }
    SECTION("bound output includes the eq1 value") {
        std::string out = run_cli_capture("bound --n 4,4 --w 2,2 --d 4");
        CHECK(out.find("eq1 12") != std::string::npos);
        CHECK(out.find("johnson 12") != std::string::npos);
    }
    SECTION("2d bound output") {
        std::string out = run_cli_capture("bound --n 3,3,3 --w 2,2,2 --d 6 --2d --l 2");
        CHECK(out.find("lemma-2d 3") != std::string::npos);
    }
    SECTION("trivial bound output") {
        std::string out = run_cli_capture("bound --n 4 --w 2 --d 10");
        CHECK(out.find("trivial 1 exact") != std::string::npos);
    }
    SECTION("catalog answers the exceptional case-2 value") {
        std::string out =
            run_cli_capture("catalog --n 7,5 --w 3,1 --d 4 --catalog-file t_cli_catalog.txt");
        CHECK(out.find("31 exact (paper/search)") != std::string::npos);
    }
    SECTION("export emits parseable JSON") {
        REQUIRE(run_cli("construct --family w2d4 --m 2 --n 4 --out t_cli.mcwc") == 0);
        REQUIRE(run_cli("export --in t_cli.mcwc --out t_cli.json") == 0);
        std::ifstream js("t_cli.json");
        std::string text((std::istreambuf_iterator<char>(js)), std::istreambuf_iterator<char>());
        CHECK(text.find("\"words\"") != std::string::npos);
        CHECK(text.find("\"shape\"") != std::string::npos);
        CHECK(text.find("\"certificate\"") != std::string::npos);
    }
    SECTION("search subcommand records proved-optimal results") {
        gc.add("t_cli_search.mcwc");
        gc.add("t_cli_search.mcwc.outcome");
        std::string out = run_cli_capture(
            "search --n 4,4 --w 2,2 --d 4 --workers 2 --out t_cli_search.mcwc "
            "--catalog-file t_cli_catalog.txt");
        CHECK(out.find("proved-optimal size=12") != std::string::npos);
        std::string cat =
            run_cli_capture("catalog --n 4,4 --w 2,2 --d 4 --catalog-file t_cli_catalog.txt");
        CHECK(cat.find("12 exact") != std::string::npos);
        CHECK(run_cli("verify --in t_cli_search.mcwc") == 0);
    }
    SECTION("malformed shape yields a usage error") {
        CHECK(run_cli("bound --n 4,x --w 2 --d 4") != 0);
        CHECK(run_cli("bound --n 4") != 0);
    }
}

#endif  // MCWC_CLI_PATH
