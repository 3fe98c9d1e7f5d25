#include "ckdual/commands.hpp"

#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "ckdual/classify.hpp"
#include "ckdual/corpus.hpp"
#include "ckdual/diagrams.hpp"

namespace ckdual {

namespace {

using nlohmann::json;

std::string doc_label(const MatrixDocument& doc) {
    if (doc.name) return *doc.name;
    return doc.source;
}

json input_json(const MatrixDocument& doc) {
    json j{{"digest", doc.digest}, {"source", doc.source}};
    if (doc.name) j["name"] = *doc.name;
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Literal marked group over canonical coordinates: Z^r (+) Z/d_1 (+) ...
MarkedGroup literal_marked(std::size_t free_rank, const std::vector<long>& divisors,
                           const std::vector<std::vector<long>>& marks) {
    const std::size_t n = free_rank + divisors.size();
    IntMatrix rel(n, divisors.size());
    for (std::size_t i = 0; i < divisors.size(); ++i) rel(free_rank + i, i) = divisors[i];
    FgAbGroup g = cokernel(rel);
    std::vector<IntVector> reps;
    for (const auto& mk : marks) {
        IntVector v(n);
        for (std::size_t i = 0; i < mk.size(); ++i) v[i] = mk[i];
        reps.push_back(std::move(v));
    }
    return make_marked(g, std::move(reps));
}

}  // namespace

CommandResult cmd_invariants(const MatrixDocument& doc, bool transpose,
                             const CommandOptions& opts) {
    CKMatrix A = CKMatrix::validate(doc.matrix);
    if (transpose) A = A.transposed();
    CKInvariants inv = invariants(A);

    MarkedDisplay ext_w = canonical_marked_display(inv.ext_w);
    MarkedDisplay ext_s = canonical_marked_display(inv.ext_s);
    MarkedDisplay k0_t = canonical_marked_display(inv.k0_toeplitz);
    MarkedDisplay k1_t = canonical_marked_display(MarkedGroup{inv.k1_toeplitz, {}});
    MarkedDisplay k0_ck = canonical_marked_display(inv.k0_ck);
    MarkedDisplay k1_ck = canonical_marked_display(MarkedGroup{inv.k1_ck, {}});

    if (opts.json) {
        json results{{"ext_w", group_json(ext_w)},         {"ext_s", group_json(ext_s)},
                     {"k0_toeplitz", group_json(k0_t)},    {"k1_toeplitz", group_json(k1_t)},
                     {"k0_ck", group_json(k0_ck)},         {"k1_ck", group_json(k1_ck)}};
        json doc_out{{"command", "invariants"},
                     {"inputs", json::array({input_json(doc)})},
                     {"options", json{{"transpose", transpose}}},
                     {"pass", true},
                     {"results", std::move(results)}};
        return {0, dump(doc_out)};
    }

    std::ostringstream os;
    os << "invariants of O_{A^t} and T_{A^t} for input " << doc_label(doc) << " (N = "
       << A.size() << (transpose ? ", transposed input" : "") << ")\n";
    os << "  ext_w       " << ext_w.to_string() << "   mark [T_A]_w\n";
    os << "  ext_s       " << ext_s.to_string() << "   mark [T_A]_s\n";
    os << "  k0_toeplitz " << k0_t.to_string() << "   marks [e_0], [1_{N+1}]\n";
    os << "  k1_toeplitz " << k1_t.to_string() << "\n";
    os << "  k0_ck       " << k0_ck.to_string() << "   mark [1_N]\n";
    os << "  k1_ck       " << k1_ck.to_string() << "\n";
    return {0, os.str()};
}

CommandResult cmd_verify(const MatrixDocument& doc, const CommandOptions& opts) {
    CKMatrix A = CKMatrix::validate(doc.matrix);
    StrongDualityReport report = strong_duality_report(A);

    if (opts.json) {
        json doc_out{{"command", "verify"},
                     {"inputs", json::array({input_json(doc)})},
                     {"pass", report.pass},
                     {"results", strong_duality_json(report)}};
        return {report.pass ? 0 : 1, dump(doc_out)};
    }

    std::ostringstream os;
    os << "strong duality verification for " << doc_label(doc) << "\n";
    for (const auto& sub : report.sub_reports) {
        os << "  [" << (sub.pass ? "ok" : "FAIL") << "] " << sub.name << "\n";
        for (const auto& c : sub.exactness)
            if (!c.pass) os << "        failed: " << c.label << " (" << c.witness << ")\n";
        for (const auto& c : sub.squares)
            if (!c.pass) os << "        failed: " << c.label << " (" << c.witness << ")\n";
        for (const auto& c : sub.identities)
            if (!c.pass) os << "        failed: " << c.label << " (" << c.witness << ")\n";
    }
    for (const auto& c : report.identities)
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.label << "\n";
    os << (report.pass ? "PASS" : "FAIL") << "\n";
    return {report.pass ? 0 : 1, os.str()};
}

CommandResult cmd_iso(const MatrixDocument& a, const MatrixDocument& b, const std::string& question,
                      const CommandOptions& opts) {
    CKMatrix A = CKMatrix::validate(a.matrix);
    CKMatrix B = CKMatrix::validate(b.matrix);

    IsoVerdict verdict = [&] {
        if (question == "toeplitz") return toeplitz_iso(A, B, opts.iso);
        if (question == "ck") return ck_iso(A, B, opts.iso);
        if (question == "extw") return ext_w_pointed_iso(A, B, opts.iso);
        throw Error("unknown isomorphism question: " + question);
    }();

    int exit_code = verdict.decision.yes() ? 0 : (verdict.decision.no() ? 1 : 3);

    if (opts.json) {
        json j{{"command", "iso"},
               {"inputs", json::array({input_json(a), input_json(b)})},
               {"options", json{{"question", question}}},
               {"pass", verdict.decision.yes()},
               {"results",
                json{{"verdict", to_string(verdict.decision.verdict)},
                     {"reason", verdict.decision.reason},
                     {"criterion", verdict.criterion}}}};
        if (verdict.decision.witness)
            j["results"]["witness_matrix"] = matrix_json(verdict.decision.witness->matrix);
        return {exit_code, dump(j)};
    }

    std::ostringstream os;
    os << question << "(" << doc_label(a) << ", " << doc_label(b)
       << ") = " << to_string(verdict.decision.verdict) << "\n";
    os << "  " << verdict.decision.reason << "\n";
    return {exit_code, os.str()};
}

namespace {

struct PaperLine {
    std::string label;
    bool pass;
    std::string detail;
};

CKMatrix mk(std::size_t n, std::vector<long> entries) {
    return CKMatrix::validate(IntMatrix(n, n, std::move(entries)));
}

}  // namespace

CommandResult cmd_paper_examples(const CommandOptions& opts, bool corrupt_table) {
    const CKMatrix B = mk(2, {1, 1, 1, 1});
    const CKMatrix Bm = mk(4, {1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1});
    const CKMatrix F = mk(2, {1, 1, 1, 0});
    const CKMatrix C = mk(3, {1, 1, 1, 1, 1, 1, 1, 0, 1});
    const CKMatrix D = mk(3, {0, 1, 1, 1, 1, 1, 1, 0, 1});
    const CKMatrix A82 = mk(3, {1, 1, 1, 1, 1, 1, 1, 0, 0});
    const CKMatrix B82 = A82.transposed();

    // Expected triples exactly as printed in the source table.
    struct TripleRow {
        std::string label;
        const CKMatrix* m;
        MarkedGroup expected;
    };
    std::vector<TripleRow> triples;
    triples.push_back({"triple(B) ~ (Z; 1, 0)", &B, literal_marked(1, {}, {{1}, {0}})});
    triples.push_back({"triple(B-) ~ (Z; 1, -1)", &Bm, literal_marked(1, {}, {{1}, {-1}})});
    triples.push_back({"triple(F) ~ (Z; 1, -2)", &F,
                       literal_marked(1, {}, {{1}, {corrupt_table ? -3 : -2}})});
    triples.push_back({"triple(C) ~ (Z; 1, -1)", &C, literal_marked(1, {}, {{1}, {-1}})});
    triples.push_back({"triple(D) ~ (Z; 1, 0)", &D, literal_marked(1, {}, {{1}, {0}})});
    triples.push_back({"triple(A) ~ (Z; 2, -2)", &A82, literal_marked(1, {}, {{2}, {-2}})});
    triples.push_back({"triple(A^t) ~ (Z + Z/2; (1,0), (-1,1))", &B82,
                       literal_marked(1, {2}, {{1, 0}, {-1, 1}})});

    std::vector<PaperLine> lines;
    for (const auto& row : triples) {
        MarkedGroup computed = toeplitz_triple(*row.m);
        Decision d = pointed_iso_exists(computed, row.expected, opts.iso);
        lines.push_back({row.label, d.yes(),
                         "computed " + canonical_marked_display(computed).to_string()});
    }

    struct IsoRow {
        std::string label;
        IsoVerdict verdict;
        Verdict expected;
    };
    std::vector<IsoRow> isos;
    isos.push_back({"T_B ~ T_{D^t}: yes", toeplitz_iso(B, D.transposed(), opts.iso), Verdict::Yes});
    isos.push_back(
        {"T_{B-} ~ T_{C^t}: yes", toeplitz_iso(Bm, C.transposed(), opts.iso), Verdict::Yes});
    isos.push_back({"T_F ~ T_B: no", toeplitz_iso(F, B, opts.iso), Verdict::No});
    isos.push_back({"T_F ~ T_{B-}: no", toeplitz_iso(F, Bm, opts.iso), Verdict::No});
    isos.push_back({"T_F ~ T_{C^t}: no", toeplitz_iso(F, C.transposed(), opts.iso), Verdict::No});
    isos.push_back({"T_F ~ T_{D^t}: no", toeplitz_iso(F, D.transposed(), opts.iso), Verdict::No});

    const std::vector<std::pair<std::string, const CKMatrix*>> five = {
        {"B", &B}, {"B-", &Bm}, {"F", &F}, {"C", &C}, {"D", &D}};
    for (std::size_t i = 0; i < five.size(); ++i)
        for (std::size_t j = i + 1; j < five.size(); ++j)
            isos.push_back({"O_" + five[i].first + " ~ O_" + five[j].first + ": yes",
                            ck_iso(*five[i].second, *five[j].second, opts.iso), Verdict::Yes});

    isos.push_back({"T_A ~ T_{A^t} (asymmetric 3x3): no", toeplitz_iso(A82, B82, opts.iso), Verdict::No});
    isos.push_back({"O_A ~ O_{A^t} (asymmetric 3x3): no", ck_iso(A82, B82, opts.iso), Verdict::No});

    for (const auto& row : isos)
        lines.push_back({row.label, row.verdict.decision.verdict == row.expected,
                         "computed " + to_string(row.verdict.decision.verdict)});

    bool all_pass = true;
    for (const auto& l : lines) all_pass = all_pass && l.pass;

    if (opts.json) {
        json jlines = json::array();
        for (const auto& l : lines)
            jlines.push_back(json{{"label", l.label}, {"pass", l.pass}, {"detail", l.detail}});
        json j{{"command", "paper-examples"},
               {"inputs", json::array()},
               {"pass", all_pass},
               {"results", json{{"lines", std::move(jlines)}}}};
        return {all_pass ? 0 : 1, dump(j)};
    }

    std::ostringstream os;
    std::size_t mismatches = 0;
    for (const auto& l : lines) {
        if (!l.pass) ++mismatches;
        os << "  [" << (l.pass ? "ok" : "MISMATCH") << "] " << l.label
           << (l.pass ? "" : "  -- " + l.detail) << "\n";
    }
    os << (all_pass ? "PASS" : "FAIL") << ": " << mismatches << " of " << lines.size()
       << " lines mismatched\n";
    return {all_pass ? 0 : 1, os.str()};
}

CommandResult cmd_enumerate(std::size_t size, std::size_t limit, std::uint64_t seed,
                            const CommandOptions& opts) {
    if (size < 2) throw Error("enumerate: size must be at least 2");
    const bool exhaustive = size <= 3;
    std::vector<CKMatrix> corpus =
        exhaustive ? enumerate_ck_matrices(size) : sample_ck_matrices(size, limit, seed);

    std::vector<std::size_t> verify_failures;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (!strong_duality_report(corpus[i]).pass) verify_failures.push_back(i);

    std::mt19937_64 pair_rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::size_t pair_count = corpus.size() < 2 ? 0 : limit;
    std::vector<std::pair<std::size_t, std::size_t>> bad_pairs;
    for (std::size_t p = 0; p < pair_count; ++p) {
        std::size_t i = pair_rng() % corpus.size();
        std::size_t j = pair_rng() % corpus.size();
        if (!corollary_consistency(corpus[i], corpus[j], opts.iso)) bad_pairs.push_back({i, j});
    }

    const bool pass = verify_failures.empty() && bad_pairs.empty();

    if (opts.json) {
        json jfail = json::array();
        for (auto i : verify_failures) jfail.push_back(i);
        json jpairs = json::array();
        for (auto& [i, j] : bad_pairs) jpairs.push_back(json::array({i, j}));
        json j{{"command", "enumerate"},
               {"inputs", json::array()},
               {"options", json{{"size", size}, {"limit", limit}, {"seed", seed},
                                {"exhaustive", exhaustive}}},
               {"pass", pass},
               {"results", json{{"matrix_count", corpus.size()},
                                {"verify_failures", std::move(jfail)},
                                {"pairs_checked", pair_count},
                                {"consistency_failures", std::move(jpairs)}}}};
        return {pass ? 0 : 1, dump(j)};
    }

    std::ostringstream os;
    os << (exhaustive ? "exhaustive" : "sampled") << " corpus of size-" << size
       << " matrices: " << corpus.size() << " matrices\n";
    os << "  verified: " << (corpus.size() - verify_failures.size()) << "/" << corpus.size()
       << "\n";
    os << "  transpose-consistency pairs checked: " << pair_count
       << ", failures: " << bad_pairs.size() << "\n";
    os << (pass ? "PASS" : "FAIL") << "\n";
    return {pass ? 0 : 1, os.str()};
}

}  // namespace ckdual
