#include "ckdual/classify.hpp"

namespace ckdual {

namespace {

MarkedGroup bordered_triple(const CKMatrix& M, bool unit_first) {
    const std::size_t n = M.size();
    FgAbGroup g = cokernel(i_minus(a_one(M)));
    IntVector e0(n + 1);
    e0[0] = 1;
    IntVector ones(n + 1, Int(1));
    if (unit_first) return make_marked(g, {ones, e0});
    return make_marked(g, {e0, ones});
}

}  // namespace

MarkedGroup toeplitz_triple(const CKMatrix& M, bool transpose_input) {
    return bordered_triple(transpose_input ? M.transposed() : M, /*unit_first=*/false);
}

IsoVerdict toeplitz_iso(const CKMatrix& A, const CKMatrix& B, const PointedIsoOptions& opts) {
    MarkedGroup a = bordered_triple(A, /*unit_first=*/true);
    MarkedGroup b = bordered_triple(B, /*unit_first=*/true);
    return IsoVerdict{IsoQuestion::ToeplitzIso, A, B, pointed_iso_exists(a, b, opts),
                      "pointed isomorphism of (Z^{N+1}/(I-A_1), [1_{N+1}], [e_0]) decides "
                      "T_A ~ T_B"};
}

IsoVerdict ck_iso(const CKMatrix& A, const CKMatrix& B, const PointedIsoOptions& opts) {
    auto invariant = [](const CKMatrix& M) {
        FgAbGroup g = cokernel(i_minus(M.transposed().matrix()));
        return make_marked(g, {IntVector(M.size(), Int(1))});
    };
    return IsoVerdict{IsoQuestion::CKIso, A, B,
                      pointed_iso_exists(invariant(A), invariant(B), opts),
                      "pointed isomorphism of (Z^N/(I-A^t), [1_N]) decides O_A ~ O_B"};
}

IsoVerdict ext_w_pointed_iso(const CKMatrix& A, const CKMatrix& B, const PointedIsoOptions& opts) {
    auto invariant = [](const CKMatrix& M) {
        FgAbGroup g = cokernel(i_minus(M.matrix()));
        return make_marked(g, {IntVector(M.size(), Int(-1))});
    };
    return IsoVerdict{IsoQuestion::ExtWPointedIso, A, B,
                      pointed_iso_exists(invariant(A), invariant(B), opts),
                      "pointed isomorphism of (Z^N/(I-A), [T_A]_w) with [T_A]_w = -[1_N]"};
}

bool corollary_consistency(const CKMatrix& A, const CKMatrix& B, const PointedIsoOptions& opts) {
    Decision direct = toeplitz_iso(A, B, opts).decision;
    Decision transposed = toeplitz_iso(A.transposed(), B.transposed(), opts).decision;
    if (direct.verdict == Verdict::Unknown || transposed.verdict == Verdict::Unknown) return true;
    return direct.verdict == transposed.verdict;
}

std::string to_string(IsoQuestion q) {
    switch (q) {
        case IsoQuestion::ToeplitzIso: return "toeplitz";
        case IsoQuestion::CKIso: return "ck";
        case IsoQuestion::ExtWPointedIso: return "extw";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

}  // namespace ckdual
