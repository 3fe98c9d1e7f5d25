#include "ckdual/ckalg.hpp"

#include <queue>
#include <utility>

namespace ckdual {

namespace {

// Reachability through paths of length >= 1; a vertex reaches itself only
// through a genuine cycle, so zero rows/columns fail automatically.
std::vector<bool> reachable_from(const IntMatrix& A, std::size_t start) {
    const std::size_t n = A.rows();
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    for (std::size_t j = 0; j < n; ++j)
        if (A(start, j) != 0 && !seen[j]) {
            seen[j] = true;
            q.push(j);
        }
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t j = 0; j < n; ++j)
            if (A(u, j) != 0 && !seen[j]) {
                seen[j] = true;
                q.push(j);
            }
    }
    return seen;
}

}  // namespace

CKMatrix CKMatrix::validate(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw DimensionError("validate: matrix is not square");
    if (M.rows() == 0) throw DimensionError("validate: matrix is empty");
    const std::size_t n = M.rows();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (M(i, j) != 0 && M(i, j) != 1)
                throw ValidationError(MatrixDefect::NotZeroOne,
                                      "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          ") = " + M(i, j).get_str() + " is not 0 or 1");

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> seen = reachable_from(M, i);
        for (std::size_t j = 0; j < n; ++j)
            if (!seen[j])
                throw ValidationError(MatrixDefect::NotIrreducible,
                                      "no path from vertex " + std::to_string(i + 1) + " to vertex " +
                                          std::to_string(j + 1));
    }

    bool perm = true;
    for (std::size_t i = 0; i < n && perm; ++i) {
        Int row_sum = 0, col_sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            row_sum += M(i, j);
            col_sum += M(j, i);
        }
        if (row_sum != 1 || col_sum != 1) perm = false;
    }
    if (perm)
        throw ValidationError(MatrixDefect::IsPermutation, "matrix is a permutation matrix");

    return CKMatrix(M);
}

CKMatrix CKMatrix::transposed() const { return CKMatrix(matrix_.transpose()); }

IntMatrix a_hat(const CKMatrix& A) {
    const std::size_t n = A.size();
    IntMatrix R1(n, n);
    for (std::size_t j = 0; j < n; ++j) R1(0, j) = 1;
    return A.matrix() + R1 - A.matrix() * R1;
}

IntMatrix a_one(const CKMatrix& A) {
    const std::size_t n = A.size();
    IntMatrix M(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j) M(0, j) = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M(i + 1, j + 1) = A.matrix()(i, j);
    return M;
}

IntMatrix i_minus(const IntMatrix& M) { return IntMatrix::identity(M.rows()) - M; }

Element CKSystem::e0() const {
    IntVector v(A.size() + 1);
    v[0] = 1;
    return make_element(coker_a_one, std::move(v));
}

Element CKSystem::ones_np1() const {
    return make_element(coker_a_one, IntVector(A.size() + 1, Int(1)));
}

Element CKSystem::ones_n() const { return make_element(coker_a, IntVector(A.size(), Int(1))); }

Element CKSystem::ones_n_hat() const {
    return make_element(coker_a_hat, IntVector(A.size(), Int(1)));
}

namespace {

IntVector unit_vector(std::size_t n, std::size_t i) {
    IntVector v(n);
    v[i] = 1;
    return v;
}

// Solve B x = w exactly; failure means a proved identity of the construction broke.
IntVector solve_or_die(const SmithDecomposition& dec, const IntVector& w, const char* what) {
    auto sol = solve_in_column_lattice(dec, w);
    if (!sol) throw InternalConsistencyError(std::string("ck system: ") + what);
    return *sol;
}

}  // namespace

CKSystem build_system(const CKMatrix& A) {
    const std::size_t n = A.size();
    IntMatrix hat = a_hat(A);
    IntMatrix one = a_one(A);

    IntMatrix im_a = i_minus(A.matrix());
    IntMatrix im_hat = i_minus(hat);
    IntMatrix im_one = i_minus(one);

    // factorization check for the adopted A^ convention
    IntMatrix R1(n, n);
    for (std::size_t j = 0; j < n; ++j) R1(0, j) = 1;
    if (!(im_hat == im_a * (IntMatrix::identity(n) - R1)))
        throw InternalConsistencyError("I - A^ != (I - A)(I - R1)");

    // e_1 must lie in Ker(I-A^); required for i_1
    if (!is_zero_vector(im_hat.apply(unit_vector(n, 0))))
        throw InternalConsistencyError("e_1 is not in Ker(I-A^)");

    FgAbGroup zero = cokernel(IntMatrix(0, 0));
    FgAbGroup z = free_group(1);
    FgAbGroup coker_a = cokernel(im_a);
    FgAbGroup coker_hat = cokernel(im_hat);
    FgAbGroup coker_one = cokernel(im_one);

    IntMatrix ker_a_basis = kernel_basis(im_a);
    IntMatrix ker_hat_basis = kernel_basis(im_hat);
    SmithDecomposition ker_a_dec = snf(ker_a_basis);
    SmithDecomposition ker_hat_dec = snf(ker_hat_basis);
    FgAbGroup ker_a = free_group(ker_a_basis.cols());
    FgAbGroup ker_hat = free_group(ker_hat_basis.cols());

    // i_1 : Z -> Ker(I-A^), 1 -> e_1
    IntMatrix i1_mat = IntMatrix::from_columns(
        ker_hat_basis.cols(),
        {solve_or_die(ker_hat_dec, unit_vector(n, 0), "e_1 not expressible in Ker(I-A^) basis")});
    GroupHom i1 = hom(z, ker_hat, i1_mat);

    // Ker(I-A^)/i_1(Z)
    Subquotient sq = subquotient(ker_hat_basis, IntMatrix::from_columns(n, {unit_vector(n, 0)}));

    // j_A([l]) = (-sum_{i>=2} l_i, l_2, ..., l_N), landing in Ker(I-A)
    IntMatrix Jmat(n, n);
    for (std::size_t j = 1; j < n; ++j) Jmat(0, j) = -1;
    for (std::size_t i = 1; i < n; ++i) Jmat(i, i) = 1;
    IntMatrix j_in_ambient = Jmat * ker_hat_basis;  // on Ker(I-A^) basis vectors
    std::vector<IntVector> j_cols;
    for (std::size_t c = 0; c < j_in_ambient.cols(); ++c)
        j_cols.push_back(
            solve_or_die(ker_a_dec, j_in_ambient.column(c), "j_A image is outside Ker(I-A)"));
    GroupHom j_a = hom(sq.group, ker_a, IntMatrix::from_columns(ker_a_basis.cols(), j_cols));

    // s_A = coordinate sum on Ker(I-A)
    IntMatrix s_mat(1, ker_a_basis.cols());
    for (std::size_t c = 0; c < ker_a_basis.cols(); ++c)
        for (std::size_t i = 0; i < n; ++i) s_mat(0, c) += ker_a_basis(i, c);
    GroupHom s_a = hom(ker_a, z, s_mat);

    // Ker(s_A) inside Ker(I-A)
    IntMatrix ker_s_basis = kernel_basis(s_mat);
    FgAbGroup ker_s = free_group(ker_s_basis.cols());
    GroupHom iota_s = hom(ker_s, ker_a, ker_s_basis);

    // iota^_A : Z -> Z^N/(I-A^), 1 -> [(I-A)e_1]
    GroupHom iota_hat = hom(z, coker_hat, IntMatrix::from_columns(n, {im_a.column(0)}));
    // q^_A : natural quotient
    GroupHom q_hat = hom(coker_hat, coker_a, IntMatrix::identity(n));

    // iota_{A_1}(m) = [0, iota^_A(m)];  q_{A_1} drops the 0th coordinate
    IntVector iota1_col(n + 1);
    for (std::size_t i = 0; i < n; ++i) iota1_col[i + 1] = im_a(i, 0);
    GroupHom iota_a1 = hom(z, coker_one, IntMatrix::from_columns(n + 1, {iota1_col}));
    IntMatrix q1_mat(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) q1_mat(i, i + 1) = 1;
    GroupHom q_a1 = hom(coker_one, coker_a, q1_mat);

    // the explicit conjugators, exactly as printed in the source derivation
    IntMatrix U = IntMatrix::identity(n + 1);
    U(1, 0) = Int(1) - A.matrix()(0, 0);
    for (std::size_t i = 2; i <= n; ++i) U(i, 0) = -A.matrix()(i - 1, 0);
    IntMatrix V(n + 1, n + 1);
    V(0, 1) = 1;
    V(1, 0) = -1;
    for (std::size_t j = 2; j <= n; ++j) V(1, j) = -1;
    for (std::size_t i = 2; i <= n; ++i) V(i, i) = 1;

    if (!is_unimodular(U)) throw InternalConsistencyError("U is not unimodular");
    if (!is_unimodular(V)) throw InternalConsistencyError("V is not unimodular");
    IntMatrix block(n + 1, n + 1);
    block(0, 0) = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) block(i + 1, j + 1) = im_hat(i, j);
    if (!(U * im_one * V == block))
        throw InternalConsistencyError("U(I-A_1)V != 1 (+) (I-A^)");

    // xi0(x) = (0, x)
    IntMatrix xi_mat(n + 1, n);
    for (std::size_t i = 0; i < n; ++i) xi_mat(i + 1, i) = 1;
    GroupHom xi = hom(coker_hat, coker_one, xi_mat);
    if (!is_isomorphism(xi)) throw InternalConsistencyError("xi0 is not an isomorphism");

    CKSystem sys{.A = A,
                 .im_a = im_a,
                 .im_a_hat = im_hat,
                 .im_a_one = im_one,
                 .zero = zero,
                 .z = z,
                 .coker_a = coker_a,
                 .coker_a_hat = coker_hat,
                 .coker_a_one = coker_one,
                 .ker_a_basis = ker_a_basis,
                 .ker_a_hat_basis = ker_hat_basis,
                 .ker_a = ker_a,
                 .ker_a_hat = ker_hat,
                 .ker_hat_mod_i1 = sq,
                 .ker_s_basis = ker_s_basis,
                 .ker_s = ker_s,
                 .i1 = i1,
                 .j_a = j_a,
                 .s_a = s_a,
                 .iota_hat = iota_hat,
                 .q_hat = q_hat,
                 .iota_a1 = iota_a1,
                 .q_a1 = q_a1,
                 .iota_s = iota_s,
                 .xi0 = xi,
                 .xi0_tilde = GroupHom{},
                 .U = U,
                 .V = V};

    // xi0(iota^(1) + [1_N]) = [1_{N+1}]
    Element unit_arg = iota_hat_element(sys, 1) + sys.ones_n_hat();
    if (!element_eq(xi(unit_arg), sys.ones_np1()))
        throw InternalConsistencyError("xi0(iota^(1) + [1_N]) != [1_{N+1}]");

    // iota_{A_1}(1) = [e_0]
    if (!element_eq(iota_a1(make_element(z, {Int(1)})), sys.e0()))
        throw InternalConsistencyError("iota_{A_1}(1) != [e_0]");

    // xi~0 : Ker(I-A^)/i_1(Z) -> Ker(s_A), given by j_A
    SmithDecomposition ker_s_dec = snf(ker_s_basis);
    std::vector<IntVector> xt_cols;
    for (std::size_t c = 0; c < j_a.matrix.cols(); ++c)
        xt_cols.push_back(
            solve_or_die(ker_s_dec, j_a.matrix.column(c), "j_A image is outside Ker(s_A)"));
    sys.xi0_tilde = hom(sq.group, ker_s, IntMatrix::from_columns(ker_s_basis.cols(), xt_cols));

    return sys;
}

Element iota_hat_element(const CKSystem& sys, const Int& m) {
    IntVector k(sys.A.size());
    k[0] = m;
    return make_element(sys.coker_a_hat, sys.im_a.apply(k));
}

MapsIJS maps_ijs(const CKMatrix& A) {
    CKSystem sys = build_system(A);
    return MapsIJS{sys.i1, sys.j_a, sys.s_a};
}

MapsA1 maps_A1(const CKMatrix& A) {
    CKSystem sys = build_system(A);
    return MapsA1{sys.iota_a1, sys.q_a1, sys.iota_s};
}

Xi0 xi0(const CKMatrix& A) {
    CKSystem sys = build_system(A);
    return Xi0{sys.xi0, sys.U, sys.V};
}

CKInvariants invariants(const CKSystem& sys) {
    const std::size_t n = sys.A.size();
    CKInvariants inv;
    inv.ext_w = make_marked(sys.coker_a, {IntVector(n, Int(-1))});

    // [T_A]_s = -iota^(1) - [1_N], representative -(I-A)e_1 - 1_N
    IntVector ts = ckdual::negate(sys.im_a.column(0));
    for (std::size_t i = 0; i < n; ++i) ts[i] -= 1;
    inv.ext_s = make_marked(sys.coker_a_hat, {ts});

    IntVector e0(n + 1);
    e0[0] = 1;
    inv.k0_toeplitz = make_marked(sys.coker_a_one, {e0, IntVector(n + 1, Int(1))});
    inv.k1_toeplitz = sys.ker_s;
    inv.k0_ck = make_marked(sys.coker_a, {IntVector(n, Int(1))});
    inv.k1_ck = sys.ker_a;
    return inv;
}

CKInvariants invariants(const CKMatrix& A) { return invariants(build_system(A)); }

}  // namespace ckdual
