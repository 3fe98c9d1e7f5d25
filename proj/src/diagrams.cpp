#include "ckdual/diagrams.hpp"

#include <utility>

#include "ckdual/errors.hpp"

namespace ckdual {

void DiagramReport::recompute_pass() {
    pass = true;
    for (const auto& r : exactness) pass = pass && r.pass;
    for (const auto& r : squares) pass = pass && r.pass;
    for (const auto& r : identities) pass = pass && r.pass;
}

ExactSequenceSpec build_6termA(const CKSystem& sys) {
    ExactSequenceSpec spec;
    spec.name = "six-term K-homology model";
    spec.cyclic = true;
    spec.nodes = {sys.zero,     sys.ker_hat_mod_i1.group, sys.ker_a, sys.z,
                  sys.coker_a_hat, sys.coker_a,           sys.zero};
    spec.node_labels = {"0",           "Ker(I-A^)/i_1(Z)", "Ker(I-A)", "Z",
                        "Z^N/(I-A^)", "Z^N/(I-A)",        "0"};
    spec.arrows = {zero_hom(sys.zero, sys.ker_hat_mod_i1.group),
                   sys.j_a,
                   sys.s_a,
                   sys.iota_hat,
                   sys.q_hat,
                   zero_hom(sys.coker_a, sys.zero)};
    spec.arrow_labels = {"0", "j_A", "s_A", "iota^_A", "q^_A", "0"};
    return spec;
}

ExactSequenceSpec build_6termA(const CKMatrix& A) { return build_6termA(build_system(A)); }

ExactSequenceSpec build_sixtermA1(const CKSystem& sys) {
    ExactSequenceSpec spec;
    spec.name = "six-term Toeplitz K-theory model";
    spec.cyclic = true;
    spec.nodes = {sys.zero,      sys.ker_s,   sys.ker_a, sys.z,
                  sys.coker_a_one, sys.coker_a, sys.zero};
    spec.node_labels = {"0",               "Ker(s_A)",  "Ker(I-A)", "Z",
                        "Z^{N+1}/(I-A_1)", "Z^N/(I-A)", "0"};
    // s_A on Ker(I-A) coordinates, reused from the system
    spec.arrows = {zero_hom(sys.zero, sys.ker_s),
                   sys.iota_s,
                   sys.s_a,
                   sys.iota_a1,
                   sys.q_a1,
                   zero_hom(sys.coker_a, sys.zero)};
    spec.arrow_labels = {"0", "iota_{s_A}", "s_A", "iota_{A_1}", "q_{A_1}", "0"};
    spec.identities.push_back(MarkedIdentity{
        "iota_{A_1}(1) = [e_0]",
        sys.iota_a1(make_element(sys.z, {Int(1)})),
        sys.e0()});
    return spec;
}

ExactSequenceSpec build_sixtermA1(const CKMatrix& A) { return build_sixtermA1(build_system(A)); }

LadderSpec build_ladder_xi(const CKSystem& sys) {
    LadderSpec ladder;
    ladder.name = "xi ladder";
    ladder.left = build_6termA(sys);
    ladder.right = build_sixtermA1(sys);
    ladder.rungs = {zero_hom(sys.zero, sys.zero),
                    sys.xi0_tilde,
                    identity_hom(sys.ker_a),
                    identity_hom(sys.z),
                    sys.xi0,
                    identity_hom(sys.coker_a),
                    zero_hom(sys.zero, sys.zero)};
    ladder.rung_labels = {"0", "xi~0", "id", "id", "xi0", "id", "0"};
    ladder.identities.push_back(MarkedIdentity{
        "xi0(iota^_A(1) + [1_N]) = [1_{N+1}]",
        sys.xi0(iota_hat_element(sys, 1) + sys.ones_n_hat()),
        sys.ones_np1()});
    return ladder;
}

LadderSpec build_ladder_xi(const CKMatrix& A) { return build_ladder_xi(build_system(A)); }

namespace {

CheckResult check_identity(const MarkedIdentity& id) {
    CheckResult r{id.label, false, ""};
    r.pass = element_eq(id.lhs, id.rhs);
    if (!r.pass)
        r.witness = "lhs " + to_string(id.lhs.rep) + " != rhs " + to_string(id.rhs.rep);
    return r;
}

void verify_sequence_into(const ExactSequenceSpec& spec, DiagramReport& report) {
    for (std::size_t i = 0; i + 1 < spec.arrows.size(); ++i) {
        CheckResult r;
        r.label = spec.name + ": exact at " + spec.node_labels[i + 1];
        ExactnessResult ex = exact_at(spec.arrows[i], spec.arrows[i + 1]);
        r.pass = ex.exact;
        r.witness = ex.witness;
        report.exactness.push_back(std::move(r));
    }
    for (const auto& id : spec.identities) report.identities.push_back(check_identity(id));
}

}  // namespace

DiagramReport verify(const ExactSequenceSpec& spec) {
    for (std::size_t i = 0; i < spec.arrows.size(); ++i)
        if (!spec.arrows[i].src.same_group(spec.nodes[i]) ||
            !spec.arrows[i].tgt.same_group(spec.nodes[i + 1]))
            throw GroupMismatchError("verify: arrow endpoints do not match nodes");
    DiagramReport report;
    report.name = spec.name;
    verify_sequence_into(spec, report);
    report.recompute_pass();
    return report;
}

DiagramReport verify(const LadderSpec& spec) {
    if (spec.rungs.size() != spec.left.nodes.size() ||
        spec.left.nodes.size() != spec.right.nodes.size())
        throw GroupMismatchError("verify: ladder shape mismatch");
    DiagramReport report;
    report.name = spec.name;
    verify_sequence_into(spec.left, report);
    verify_sequence_into(spec.right, report);
    for (std::size_t i = 0; i + 1 < spec.rungs.size(); ++i) {
        CheckResult r;
        r.label = spec.name + ": square " + spec.left.node_labels[i] + " -> " +
                  spec.left.node_labels[i + 1];
        GroupHom down_then_across = compose(spec.rungs[i + 1], spec.left.arrows[i]);
        GroupHom across_then_down = compose(spec.right.arrows[i], spec.rungs[i]);
        r.pass = eq_as_homs(down_then_across, across_then_down);
        if (!r.pass) {
            for (std::size_t j = 0; j < down_then_across.matrix.cols(); ++j) {
                Element a{down_then_across.tgt, down_then_across.matrix.column(j)};
                Element b{across_then_down.tgt, across_then_down.matrix.column(j)};
                if (!element_eq(a, b)) {
                    r.witness = "basis vector " + std::to_string(j) + " maps to " +
                                to_string(a.rep) + " vs " + to_string(b.rep);
                    break;
                }
            }
        }
        report.squares.push_back(std::move(r));
    }
    for (const auto& id : spec.identities) report.identities.push_back(check_identity(id));
    report.recompute_pass();
    return report;
}

namespace {

void strong_identities_for(const CKSystem& sys, const std::string& side,
                           std::vector<CheckResult>& out) {
    // xi0(-iota^(1) - [1_N]) = -[1_{N+1}]  (the Phi~^1 marked identity)
    {
        Element lhs = sys.xi0(-(iota_hat_element(sys, 1) + sys.ones_n_hat()));
        Element rhs = -sys.ones_np1();
        CheckResult r{side + ": xi0(-iota^(1) - [1_N]) = -[1_{N+1}]",
                      element_eq(lhs, rhs), ""};
        if (!r.pass) r.witness = "lhs " + to_string(lhs.rep) + " != rhs " + to_string(rhs.rep);
        out.push_back(std::move(r));
    }
    // q_{A_1}(-[1_{N+1}]) = -[1_N]  (the weak identity image)
    {
        Element lhs = sys.q_a1(-sys.ones_np1());
        Element rhs = -sys.ones_n();
        CheckResult r{side + ": q_{A_1}(-[1_{N+1}]) = -[1_N]", element_eq(lhs, rhs), ""};
        if (!r.pass) r.witness = "lhs " + to_string(lhs.rep) + " != rhs " + to_string(rhs.rep);
        out.push_back(std::move(r));
    }
}

}  // namespace

StrongDualityReport strong_duality_report(const CKMatrix& A) {
    StrongDualityReport report;
    CKSystem sys = build_system(A);
    CKSystem syst = build_system(A.transposed());

    for (const CKSystem* s : {&sys, &syst}) {
        const std::string side = (s == &sys) ? "A" : "A^t";
        DiagramReport r1 = verify(build_6termA(*s));
        r1.name = side + ": " + r1.name;
        DiagramReport r2 = verify(build_sixtermA1(*s));
        r2.name = side + ": " + r2.name;
        DiagramReport r3 = verify(build_ladder_xi(*s));
        r3.name = side + ": " + r3.name;
        report.sub_reports.push_back(std::move(r1));
        report.sub_reports.push_back(std::move(r2));
        report.sub_reports.push_back(std::move(r3));
        strong_identities_for(*s, side, report.identities);
    }

    report.pass = true;
    for (const auto& r : report.sub_reports) report.pass = report.pass && r.pass;
    for (const auto& r : report.identities) report.pass = report.pass && r.pass;
    return report;
}

}  // namespace ckdual
