#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ckdual/commands.hpp"

namespace {

ckdual::CommandOptions base_options(bool json) {
    ckdual::CommandOptions opts;
    opts.json = json;
    if (const char* env = std::getenv("CKDUAL_TORSION_BOUND")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) opts.iso.torsion_bound = v;
    }
    return opts;
}

int run(ckdual::CommandResult result) {
    std::cout << result.output;
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K-theory invariants, duality-diagram verification and isomorphism "
                 "decisions for Cuntz-Krieger Toeplitz extensions"};
    app.require_subcommand(1);

    std::string path, path_b, question;
    bool transpose = false, json = false;
    std::size_t size = 2, limit = 20;
    std::uint64_t seed = 1;

    auto* inv = app.add_subcommand("invariants", "print the six invariant groups with marks");
    inv->add_option("path", path, "matrix file, or - for stdin")->required();
    inv->add_flag("--transpose", transpose, "compute from the transposed input");
    inv->add_flag("--json", json, "emit a JSON report");

    auto* ver = app.add_subcommand("verify", "verify the duality diagrams for one matrix");
    ver->add_option("path", path, "matrix file, or - for stdin")->required();
    ver->add_flag("--json", json, "emit a JSON report");

    auto* iso = app.add_subcommand("iso", "decide an isomorphism question for two matrices");
    iso->add_option("pathA", path, "first matrix file")->required();
    iso->add_option("pathB", path_b, "second matrix file")->required();
    bool q_toeplitz = false, q_ck = false, q_extw = false;
    iso->add_flag("--toeplitz", q_toeplitz, "decide T_A ~ T_B");
    iso->add_flag("--ck", q_ck, "decide O_A ~ O_B");
    iso->add_flag("--extw", q_extw, "decide pointed Ext_w isomorphism");
    iso->add_flag("--json", json, "emit a JSON report");

    auto* paper = app.add_subcommand("paper-examples", "reproduce the worked example tables");
    paper->add_flag("--json", json, "emit a JSON report");

    auto* enu = app.add_subcommand("enumerate", "verify a corpus of matrices of one size");
    enu->add_option("--size", size, "matrix size (exhaustive when <= 3)")->required();
    enu->add_option("--limit", limit, "sample count / pair budget");
    enu->add_option("--seed", seed, "sampling seed");
    enu->add_flag("--json", json, "emit a JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        ckdual::CommandOptions opts = base_options(json);
        if (inv->parsed())
            return run(ckdual::cmd_invariants(ckdual::load_matrix_document(path), transpose, opts));
        if (ver->parsed())
            return run(ckdual::cmd_verify(ckdual::load_matrix_document(path), opts));
        if (iso->parsed()) {
            int picked = int(q_toeplitz) + int(q_ck) + int(q_extw);
            if (picked != 1) {
                std::cerr << "iso: exactly one of --toeplitz, --ck, --extw is required\n";
                return 2;
            }
            question = q_toeplitz ? "toeplitz" : (q_ck ? "ck" : "extw");
            return run(ckdual::cmd_iso(ckdual::load_matrix_document(path),
                                       ckdual::load_matrix_document(path_b), question, opts));
        }
        if (paper->parsed()) {
            bool corrupt = std::getenv("CKDUAL_CORRUPT_PAPER_TABLE") != nullptr;
            return run(ckdual::cmd_paper_examples(opts, corrupt));
        }
        if (enu->parsed()) return run(ckdual::cmd_enumerate(size, limit, seed, opts));
    } catch (const ckdual::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ckdual::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const ckdual::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
