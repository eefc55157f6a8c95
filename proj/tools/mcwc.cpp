// mcwc -- command-line front door: bound queries, constructions,
// verification, exact search, the persistent catalog, and JSON export.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "mcwc/catalog.hpp"
#include "mcwc/constructions.hpp"
#include "mcwc/io.hpp"
#include "mcwc/search.hpp"

using nlohmann::json;

namespace {

mcwc::Shape shape_from(const std::string& n, const std::string& w, int d) {
    return mcwc::Shape(mcwc::detail::split_ints(n), mcwc::detail::split_ints(w), d);
}

void print_bounds(const mcwc::Shape& sh, bool two_d, int l) {
    using namespace mcwc;
    if (auto t = trivial_exact(sh))
        std::cout << to_string(t->method) << " " << t->value << " exact\n";
    BoundResult j = johnson_recursive(sh);
    std::cout << to_string(j.method) << " " << j.value << (j.exact ? " exact" : "") << "\n";
    if (sh.is_uniform()) {
        BoundResult e = iterated_uniform_bound(sh.parts(), sh.lengths()[0], sh.distance(),
                                               sh.weights()[0]);
        std::cout << to_string(e.method) << " " << e.value << "\n";
    }
    if (sh.strength() >= 0) {
        BoundResult p = admissible_product_bound(sh.lengths(), sh.weights(), sh.strength());
        std::cout << to_string(p.method) << " " << p.value << "\n";
    }
    if (two_d) {
        const int lambda = sh.total_weight() - sh.delta();
        if (auto b = bound_2d(sh.parts(), sh.lengths()[0], sh.weights(), l, lambda))
            std::cout << to_string(b->method) << " " << b->value << "\n";
        if (auto b = improved_bound_2d(sh.parts(), sh.lengths()[0], sh.weights(), l, lambda))
            std::cout << to_string(b->method) << " " << b->value << "\n";
    }
}

void emit_code(const std::string& out, const mcwc::Code& code,
               const mcwc::ConstructionCertificate& cert) {
    mcwc::write_code_file(out, code);
    mcwc::write_certificate_file(out + ".cert", cert);
    std::cout << "wrote " << out << " (size " << code.size() << ", d " << cert.distance
              << (cert.optimal ? ", optimal" : "") << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiply constant-weight code toolkit"};
    app.require_subcommand(1);

    std::string n_arg, w_arg, out = "out.mcwc", in, designs_dir, catalog_file = "mcwc_catalog.txt";
    int d = 4, l = 0;
    bool two_d = false;

    auto add_shape_flags = [&](CLI::App* cmd, bool need_l) {
        cmd->add_option("--n", n_arg, "comma list of part lengths")->required();
        cmd->add_option("--w", w_arg, "comma list of part weights")->required();
        cmd->add_option("--d", d, "minimum distance (even)")->required();
        cmd->add_flag("--2d", two_d, "treat as two-dimensional (matrix) code");
        if (need_l) cmd->add_option("--l", l, "column weight for 2D checks");
    };

    // bound ------------------------------------------------------------
    auto* cb = app.add_subcommand("bound", "print every applicable bound");
    add_shape_flags(cb, true);
    cb->callback([&] { print_bounds(shape_from(n_arg, w_arg, d), two_d, l); });

    // construct ----------------------------------------------------------
    auto* cc = app.add_subcommand("construct", "build a code or packing family");
    std::string family;
    int cm = 2, cn = 4, ca = 1, cb_copies = 1, cM = 0, ck = 2, clam = 1, calpha = 1, cs = 1, ct = 1;
    int d1 = 4, d2 = 2;
    std::vector<std::string> inner_files;
    std::string outer_file, comp_arg;
    cc->add_option("--family", family,
                   "one of w1d4,w2d4,w3d4,k4,latin,alpha-drp,product,concat")
        ->required();
    cc->add_option("--m", cm, "number of parts");
    cc->add_option("--n", n_arg, "length (or comma list for k4)");
    cc->add_option("--k", comp_arg, "k4 composition, e.g. 3,1");
    cc->add_option("--M", cM, "alpha-drp design points");
    cc->add_option("--block-size", ck, "alpha-drp block size k");
    cc->add_option("--lambda", clam, "alpha-drp index lambda");
    cc->add_option("--alpha", calpha, "alpha-drp class multiplicity");
    cc->add_option("--s", cs, "alpha-drp vertical tiles");
    cc->add_option("--t", ct, "alpha-drp horizontal tiles");
    cc->add_option("--a", ca, "concat vertical copies");
    cc->add_option("--b", cb_copies, "concat horizontal copies");
    cc->add_option("--d1", d1, "product inner distance");
    cc->add_option("--d2", d2, "product union distance");
    cc->add_option("--inner", inner_files, "product inner code files")->delimiter(',');
    cc->add_option("--outer", outer_file, "product outer code file");
    cc->add_option("--in", in, "input code file (concat)");
    cc->add_option("--designs-dir", designs_dir, "directory overriding bundled designs");
    cc->add_option("--out", out, "output file");
    cc->callback([&] {
        using namespace mcwc;
        std::optional<std::string> ddir =
            designs_dir.empty() ? std::nullopt : std::optional(designs_dir);
        if (family == "w1d4") {
            int nn = std::stoi(n_arg);
            Code code = constant_sum_mcwc(cm, nn);
            ConstructionCertificate cert;
            cert.size = code.size();
            cert.distance = 4;
            cert.optimal = true;
            cert.bound_method = "w1-bound";
            cert.bound_value = code.size();
            cert.provenance = "w1d4";
            emit_code(out, code, cert);
        } else if (family == "w2d4") {
            auto r = mcwc_w2_d4(cm, std::stoi(n_arg));
            emit_code(out, r.code, r.certificate);
        } else if (family == "w3d4") {
            auto r = mcwc_w3_d4(cm, std::stoi(n_arg), ddir);
            emit_code(out, r.code, r.certificate);
        } else if (family == "k4") {
            auto r = construct_k4_packing(detail::split_ints(n_arg), detail::split_ints(comp_arg),
                                          ddir);
            write_packing_file(out, r.packing);
            write_certificate_file(out + ".cert", r.certificate);
            std::cout << "wrote " << out << " (" << r.packing.blocks.size() << " blocks)\n";
        } else if (family == "latin") {
            auto r = latin_drp(std::stoi(n_arg));
            emit_code(out, r.code, r.certificate);
        } else if (family == "alpha-drp") {
            ResolvableDesign rd = alpha_resolvable_bibd(cM, ck, clam, calpha, ddir);
            auto r = drp_from_alpha_resolvable(rd, cs, ct);
            Code code = code_from_drp(r.array);
            emit_code(out, code, r.certificate);
        } else if (family == "product") {
            std::vector<Code> inners;
            for (const auto& f : inner_files) inners.push_back(read_code_file(f));
            Code outer = read_code_file(outer_file);
            auto r = product_construction(inners, outer, d1, d2);
            emit_code(out, r.code, r.certificate);
        } else if (family == "concat") {
            Code code = read_code_file(in);
            auto r = concatenate(code, ca, cb_copies);
            emit_code(out, r.code, r.certificate);
        } else {
            throw CLI::ValidationError("--family", "unknown family " + family);
        }
    });

    // verify -------------------------------------------------------------
    auto* cv = app.add_subcommand("verify", "re-verify a code file");
    cv->add_option("--in", in, "code file")->required();
    cv->add_flag("--2d", two_d, "also check constant column weight");
    cv->add_option("--l", l, "column weight for --2d");
    cv->callback([&] {
        mcwc::Code code = mcwc::read_code_file(in);
        mcwc::VerificationReport rep =
            two_d ? mcwc::verify_2d(code, l) : mcwc::verify_mcwc(code);
        if (rep.passed()) {
            std::cout << "ok size=" << code.size()
                      << " min_distance>=" << rep.observed_min_distance << "\n";
        } else {
            std::cout << "FAIL " << rep.witness << "\n";
            throw CLI::RuntimeError(1);
        }
    });

    // search -------------------------------------------------------------
    auto* csrch = app.add_subcommand("search", "exact maximum-code search");
    std::uint64_t budget_nodes = 0, seed = 0;
    double budget_secs = 600.0;
    int workers = 1;
    add_shape_flags(csrch, false);
    csrch->add_option("--budget-nodes", budget_nodes, "node limit (0 = unlimited)");
    csrch->add_option("--budget-secs", budget_secs, "wall-clock limit in seconds");
    csrch->add_option("--workers", workers, "worker threads");
    csrch->add_option("--seed", seed, "tie-breaking seed");
    csrch->add_option("--out", out, "output code file");
    csrch->add_option("--catalog-file", catalog_file, "catalog ledger path");
    csrch->callback([&] {
        using namespace mcwc;
        Shape sh = shape_from(n_arg, w_arg, d);
        SearchBudget budget;
        budget.node_limit = budget_nodes;
        budget.wall_seconds = budget_secs;
        budget.workers = workers;
        budget.seed = seed;
        SearchOutcome outc = max_code_search(sh, budget);
        write_code_file(out, outc.best);
        std::ofstream rec(out + ".outcome");
        rec << "status=" << to_string(outc.status) << "\nsize=" << outc.best.size()
            << "\nnodes=" << outc.nodes << "\n";
        std::cout << to_string(outc.status) << " size=" << outc.best.size()
                  << " nodes=" << outc.nodes << "\n";
        if (outc.status == SearchStatus::ProvedOptimal)
            Catalog(catalog_file).record(sh, Int(outc.best.size()), true, "search");
    });

    // catalog ------------------------------------------------------------
    auto* ccat = app.add_subcommand("catalog", "look up a shape in the catalog");
    add_shape_flags(ccat, false);
    ccat->add_option("--catalog-file", catalog_file, "catalog ledger path");
    bool compact = false;
    ccat->add_flag("--compact", compact, "compact the ledger");
    ccat->callback([&] {
        mcwc::Catalog cat(catalog_file);
        if (compact) {
            cat.compact();
            return;
        }
        auto e = cat.lookup(shape_from(n_arg, w_arg, d));
        if (!e) {
            std::cout << "unknown\n";
            throw CLI::RuntimeError(1);
        }
        std::cout << e->value << (e->exact ? " exact" : " lower-bound") << " (" << e->provenance
                  << ")\n";
    });

    // export -------------------------------------------------------------
    auto* cx = app.add_subcommand("export", "emit a code file as JSON");
    cx->add_option("--in", in, "code file")->required();
    cx->add_option("--out", out, "JSON output path")->required();
    cx->callback([&] {
        mcwc::Code code = mcwc::read_code_file(in);
        json j;
        j["shape"] = {{"lengths", code.shape().lengths()},
                      {"weights", code.shape().weights()},
                      {"d", code.shape().distance()}};
        j["words"] = json::array();
        for (const auto& w : code.words()) j["words"].push_back(w.serialize());
        std::string cert_path = in + ".cert";
        if (std::ifstream probe(cert_path); probe) {
            json jc;
            for (const auto& [k, v] : mcwc::read_certificate_file(cert_path)) jc[k] = v;
            j["certificate"] = jc;
        }
        std::ofstream os(out);
        if (!os) throw CLI::RuntimeError(1);
        os << j.dump(2) << "\n";
        std::cout << "wrote " << out << "\n";
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}
