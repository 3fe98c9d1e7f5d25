#pragma once

#include <string>

#include "ckdual/ckalg.hpp"
#include "ckdual/fgab.hpp"

namespace ckdual {

enum class IsoQuestion { ToeplitzIso, CKIso, ExtWPointedIso };

struct IsoVerdict {
    IsoQuestion question;
    CKMatrix lhs;
    CKMatrix rhs;
    Decision decision;
    std::string criterion;
};

/// (Z^{N+1}/(I-M_1)Z^{N+1}, [e_0], [1_{N+1}]) — the invariant triple of
/// T_{M^t}. With transpose_input set, computes from M^t so the result
/// describes T_M.
MarkedGroup toeplitz_triple(const CKMatrix& M, bool transpose_input = false);

/// Decides T_A ~ T_B from the bordered-cokernel triples, marks compared in
/// the order ([1], [e_0]).
IsoVerdict toeplitz_iso(const CKMatrix& A, const CKMatrix& B, const PointedIsoOptions& opts = {});

/// Decides O_A ~ O_B from (Z^N/(I-A^t)Z^N, [1_N]).
IsoVerdict ck_iso(const CKMatrix& A, const CKMatrix& B, const PointedIsoOptions& opts = {});

/// Pointed isomorphism of the weak extension invariants
/// (Z^N/(I-A)Z^N, -[1_N]).
IsoVerdict ext_w_pointed_iso(const CKMatrix& A, const CKMatrix& B,
                             const PointedIsoOptions& opts = {});

/// Cross-check of the transpose corollary: toeplitz_iso(A,B) and
/// toeplitz_iso(A^t,B^t) must agree (Unknown verdicts are exempt).
bool corollary_consistency(const CKMatrix& A, const CKMatrix& B,
                           const PointedIsoOptions& opts = {});

std::string to_string(IsoQuestion q);
std::string to_string(Verdict v);

}  // namespace ckdual
