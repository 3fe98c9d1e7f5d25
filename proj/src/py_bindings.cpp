#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ckdual/classify.hpp"
#include "ckdual/commands.hpp"
#include "ckdual/corpus.hpp"
#include "ckdual/diagrams.hpp"
#include "ckdual/io.hpp"

namespace py = pybind11;
using namespace ckdual;

namespace {

using Rows = std::vector<std::vector<long>>;

IntMatrix to_matrix(const Rows& rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows[0].size() : 0;
    IntMatrix out(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n) throw Error("matrix rows have unequal lengths");
        for (std::size_t j = 0; j < n; ++j) out(i, j) = rows[i][j];
    }
    return out;
}

Rows from_matrix(const IntMatrix& m) {
    Rows out(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = json_int(m(i, j));
    return out;
}

std::vector<long> from_vector(const IntVector& v) {
    std::vector<long> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = json_int(v[i]);
    return out;
}

py::object to_py(const nlohmann::json& j) {
    py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

CKMatrix validated(const Rows& rows) { return CKMatrix::validate(to_matrix(rows)); }

py::dict display_dict(const MarkedDisplay& d) {
    py::dict out;
    out["free_rank"] = d.free_rank;
    std::vector<long> torsion;
    for (const Int& t : d.torsion) torsion.push_back(json_int(t));
    out["torsion"] = torsion;
    std::vector<std::vector<long>> marks;
    for (const IntVector& mk : d.marks) marks.push_back(from_vector(mk));
    out["marks"] = marks;
    out["display"] = d.to_string();
    return out;
}

PointedIsoOptions iso_opts(unsigned long torsion_bound) {
    PointedIsoOptions o;
    o.torsion_bound = torsion_bound;
    return o;
}

}  // namespace

PYBIND11_MODULE(_ckdual, m) {
    m.doc() = "Exact K-theory invariants and isomorphism decisions for Cuntz-Krieger "
              "Toeplitz extensions";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    static py::exception<Error> base_exc(m, "CkdualError", PyExc_RuntimeError);

    m.def("snf", [](const Rows& rows) {
        SmithDecomposition dec = snf(to_matrix(rows));
        py::dict out;
        out["S"] = from_matrix(dec.S);
        out["D"] = from_matrix(dec.D);
        out["T"] = from_matrix(dec.T);
        return out;
    }, py::arg("matrix"), "Smith decomposition S*M*T = D with unimodular S, T");

    m.def("hnf_rows", [](const Rows& rows) {
        HermiteForm f = hnf_rows(to_matrix(rows));
        py::dict out;
        out["H"] = from_matrix(f.H);
        out["transform"] = from_matrix(f.transform);
        return out;
    }, py::arg("matrix"), "canonical Hermite form of the row lattice");

    m.def("kernel_basis", [](const Rows& rows) {
        return from_matrix(kernel_basis(to_matrix(rows)));
    }, py::arg("matrix"), "columns form a basis of the integer kernel");

    m.def("solve_in_column_lattice", [](const Rows& rows, const std::vector<long>& b) -> py::object {
        IntVector bb(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) bb[i] = b[i];
        auto sol = solve_in_column_lattice(to_matrix(rows), bb);
        if (!sol) return py::none();
        return py::cast(from_vector(*sol));
    }, py::arg("matrix"), py::arg("b"), "integer solution of Mx = b, or None");

    m.def("validate", [](const Rows& rows) {
        validated(rows);
        return true;
    }, py::arg("matrix"), "raises ValidationError unless the matrix is an irreducible "
                          "non-permutation 0-1 matrix");

    m.def("a_hat", [](const Rows& rows) { return from_matrix(a_hat(validated(rows))); },
          py::arg("matrix"));
    m.def("a_one", [](const Rows& rows) { return from_matrix(a_one(validated(rows))); },
          py::arg("matrix"));

    m.def("invariants", [](const Rows& rows, bool transpose) {
        CKMatrix A = validated(rows);
        if (transpose) A = A.transposed();
        CKInvariants inv = invariants(A);
        py::dict out;
        out["ext_w"] = display_dict(canonical_marked_display(inv.ext_w));
        out["ext_s"] = display_dict(canonical_marked_display(inv.ext_s));
        out["k0_toeplitz"] = display_dict(canonical_marked_display(inv.k0_toeplitz));
        out["k1_toeplitz"] = display_dict(canonical_marked_display({inv.k1_toeplitz, {}}));
        out["k0_ck"] = display_dict(canonical_marked_display(inv.k0_ck));
        out["k1_ck"] = display_dict(canonical_marked_display({inv.k1_ck, {}}));
        return out;
    }, py::arg("matrix"), py::arg("transpose") = false,
       "the six invariant groups of O_{A^t} and T_{A^t} with marks");

    m.def("toeplitz_triple", [](const Rows& rows, bool transpose_input) {
        return display_dict(canonical_marked_display(toeplitz_triple(validated(rows),
                                                                     transpose_input)));
    }, py::arg("matrix"), py::arg("transpose_input") = false);

    m.def("verify", [](const Rows& rows) {
        return to_py(strong_duality_json(strong_duality_report(validated(rows))));
    }, py::arg("matrix"), "full duality-diagram verification report");

    auto iso_call = [](const Rows& a, const Rows& b, const std::string& question,
                       unsigned long torsion_bound) {
        CKMatrix A = validated(a);
        CKMatrix B = validated(b);
        PointedIsoOptions o = iso_opts(torsion_bound);
        IsoVerdict v = question == "toeplitz" ? toeplitz_iso(A, B, o)
                       : question == "ck"     ? ck_iso(A, B, o)
                                              : ext_w_pointed_iso(A, B, o);
        py::dict out;
        out["verdict"] = to_string(v.decision.verdict);
        out["reason"] = v.decision.reason;
        if (v.decision.witness) out["witness_matrix"] = from_matrix(v.decision.witness->matrix);
        return out;
    };
    m.def("toeplitz_iso", [iso_call](const Rows& a, const Rows& b, unsigned long bound) {
        return iso_call(a, b, "toeplitz", bound);
    }, py::arg("a"), py::arg("b"), py::arg("torsion_bound") = 1000000UL,
       "decides T_A ~ T_B");
    m.def("ck_iso", [iso_call](const Rows& a, const Rows& b, unsigned long bound) {
        return iso_call(a, b, "ck", bound);
    }, py::arg("a"), py::arg("b"), py::arg("torsion_bound") = 1000000UL,
       "decides O_A ~ O_B");
    m.def("ext_w_pointed_iso", [iso_call](const Rows& a, const Rows& b, unsigned long bound) {
        return iso_call(a, b, "extw", bound);
    }, py::arg("a"), py::arg("b"), py::arg("torsion_bound") = 1000000UL);

    m.def("corollary_consistency", [](const Rows& a, const Rows& b) {
        return corollary_consistency(validated(a), validated(b));
    }, py::arg("a"), py::arg("b"));

    m.def("paper_examples", []() {
        CommandOptions opts;
        opts.json = true;
        CommandResult r = cmd_paper_examples(opts);
        py::dict out;
        out["exit_code"] = r.exit_code;
        out["report"] = to_py(nlohmann::json::parse(r.output));
        return out;
    }, "reproduce the worked example tables; exit_code 0 iff every line matches");

    m.def("enumerate_corpus", [](std::size_t size, std::size_t limit, std::uint64_t seed) {
        CommandOptions opts;
        opts.json = true;
        CommandResult r = cmd_enumerate(size, limit, seed, opts);
        py::dict out;
        out["exit_code"] = r.exit_code;
        out["report"] = to_py(nlohmann::json::parse(r.output));
        return out;
    }, py::arg("size"), py::arg("limit") = 20, py::arg("seed") = 1);
}
