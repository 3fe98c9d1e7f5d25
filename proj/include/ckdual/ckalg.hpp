#pragma once

#include <string>

#include "ckdual/errors.hpp"
#include "ckdual/fgab.hpp"
#include "ckdual/intmat.hpp"

namespace ckdual {

enum class MatrixDefect { NotZeroOne, NotIrreducible, IsPermutation };

class ValidationError : public Error {
public:
    ValidationError(MatrixDefect defect, const std::string& what) : Error(what), defect_(defect) {}
    MatrixDefect defect() const { return defect_; }

private:
    MatrixDefect defect_;
};

/// A validated 0-1 square matrix whose digraph (edge i->j iff A(i,j)=1) is
/// strongly connected through paths of length >= 1, and which is not a
/// permutation matrix. Validation order is fixed: entries, then
/// irreducibility, then permutation.
class CKMatrix {
public:
    static CKMatrix validate(const IntMatrix& M);

    std::size_t size() const { return matrix_.rows(); }
    const IntMatrix& matrix() const { return matrix_; }
    long entry(std::size_t i, std::size_t j) const { return matrix_(i, j).get_si(); }
    CKMatrix transposed() const;

    bool operator==(const CKMatrix& other) const { return matrix_ == other.matrix_; }

private:
    explicit CKMatrix(IntMatrix m) : matrix_(std::move(m)) {}
    IntMatrix matrix_;
};

/// A + R1 - A*R1 where R1 has first row all ones and zeros elsewhere.
/// Satisfies I - a_hat(A) = (I - A)(I - R1).
IntMatrix a_hat(const CKMatrix& A);

/// The (N+1)x(N+1) bordered matrix: first row all ones, first column below
/// the corner zero, lower-right block A.
IntMatrix a_one(const CKMatrix& A);

IntMatrix i_minus(const IntMatrix& M);

/// All groups and named homomorphisms attached to A, with every verified
/// identity checked at construction (the erratum tripwire): e_1 in Ker(I-A^),
/// I - A^ = (I-A)(I-R1), U and V unimodular, U(I-A_1)V = 1 (+) (I-A^),
/// xi0 an isomorphism with xi0(iota^(1) + [1_N]) = [1_{N+1}], and
/// iota_{A_1}(1) = [e_0]. Construction throws InternalConsistencyError if
/// any of them fails.
struct CKSystem {
    CKMatrix A;

    IntMatrix im_a;      // I - A
    IntMatrix im_a_hat;  // I - A^
    IntMatrix im_a_one;  // I - A_1

    FgAbGroup zero;         // the trivial group
    FgAbGroup z;            // Z
    FgAbGroup coker_a;      // Z^N/(I-A)Z^N
    FgAbGroup coker_a_hat;  // Z^N/(I-A^)Z^N
    FgAbGroup coker_a_one;  // Z^{N+1}/(I-A_1)Z^{N+1}

    IntMatrix ker_a_basis;      // columns: basis of Ker(I-A) in Z^N
    IntMatrix ker_a_hat_basis;  // columns: basis of Ker(I-A^) in Z^N
    FgAbGroup ker_a;            // Ker(I-A) in ker_a_basis coordinates
    FgAbGroup ker_a_hat;        // Ker(I-A^) in ker_a_hat_basis coordinates
    Subquotient ker_hat_mod_i1;  // Ker(I-A^)/i_1(Z)
    IntMatrix ker_s_basis;       // columns: basis of Ker(s_A) in ker_a coordinates
    FgAbGroup ker_s;             // Ker(s_A : Ker(I-A) -> Z)

    GroupHom i1;        // Z -> Ker(I-A^)
    GroupHom j_a;       // Ker(I-A^)/i_1(Z) -> Ker(I-A)
    GroupHom s_a;       // Ker(I-A) -> Z
    GroupHom iota_hat;  // Z -> Z^N/(I-A^)
    GroupHom q_hat;     // Z^N/(I-A^) -> Z^N/(I-A)
    GroupHom iota_a1;   // Z -> Z^{N+1}/(I-A_1)
    GroupHom q_a1;      // Z^{N+1}/(I-A_1) -> Z^N/(I-A)
    GroupHom iota_s;    // Ker(s_A) -> Ker(I-A)
    GroupHom xi0;       // Z^N/(I-A^) -> Z^{N+1}/(I-A_1), an isomorphism
    GroupHom xi0_tilde; // Ker(I-A^)/i_1(Z) -> Ker(s_A), given by j_A

    IntMatrix U;  // conjugators with U(I-A_1)V = 1 (+) (I-A^)
    IntMatrix V;

    Element e0() const;        // [e_0] in Z^{N+1}/(I-A_1)
    Element ones_np1() const;  // [1_{N+1}] in Z^{N+1}/(I-A_1)
    Element ones_n() const;    // [1_N] in Z^N/(I-A)
    Element ones_n_hat() const;  // [1_N] in Z^N/(I-A^)
};

CKSystem build_system(const CKMatrix& A);

/// iota^_A(m) = [(I-A)(m,0,...,0)] in Z^N/(I-A^)Z^N.
Element iota_hat_element(const CKSystem& sys, const Int& m);

struct MapsIJS {
    GroupHom i1;
    GroupHom j_a;
    GroupHom s_a;
};
MapsIJS maps_ijs(const CKMatrix& A);

struct MapsA1 {
    GroupHom iota_a1;
    GroupHom q_a1;
    GroupHom iota_s;
};
MapsA1 maps_A1(const CKMatrix& A);

struct Xi0 {
    GroupHom xi0;
    IntMatrix U;
    IntMatrix V;
};
Xi0 xi0(const CKMatrix& A);

/// The six invariant groups of an input matrix A, describing O_{A^t} and
/// T_{A^t} (the transpose orientation; transpose the input to describe O_A
/// and T_A).
struct CKInvariants {
    MarkedGroup ext_w;       // (Z^N/(I-A), [T_A]_w = -[1_N])
    MarkedGroup ext_s;       // (Z^N/(I-A^), [T_A]_s = -iota^(1) - [1_N])
    MarkedGroup k0_toeplitz; // (Z^{N+1}/(I-A_1), [e_0], [1_{N+1}]) = K_0(T_{A^t})
    FgAbGroup k1_toeplitz;   // Ker(s_A) = K_1(T_{A^t})
    MarkedGroup k0_ck;       // (Z^N/(I-A), [1_N]) = K_0(O_{A^t})
    FgAbGroup k1_ck;         // Ker(I-A) = K_1(O_{A^t})
};

CKInvariants invariants(const CKMatrix& A);
CKInvariants invariants(const CKSystem& sys);

}  // namespace ckdual
