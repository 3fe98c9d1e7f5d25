#include "doctest.h"

#include <random>

#include "ckdual/errors.hpp"
#include "ckdual/fgab.hpp"
#include "support/oracles.hpp"

using namespace ckdual;
namespace oracle = ckdual::testing;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<long> e) {
    return IntMatrix(r, c, std::move(e));
}

IntVector vec(std::vector<long> e) {
    IntVector v(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) v[i] = e[i];
    return v;
}

MarkedGroup literal(std::size_t free_rank, std::vector<long> divisors,
                    std::vector<std::vector<long>> marks) {
    const std::size_t n = free_rank + divisors.size();
    IntMatrix rel(n, divisors.size());
    for (std::size_t i = 0; i < divisors.size(); ++i) rel(free_rank + i, i) = divisors[i];
    std::vector<IntVector> reps;
    for (auto& mk : marks) reps.push_back(vec(mk));
    return make_marked(cokernel(rel), reps);
}

// random finite group of order <= max_order, built from a random square
// relation matrix with nonzero determinant
FgAbGroup random_finite_group(std::mt19937_64& rng, long max_order) {
    for (;;) {
        std::size_t n = 1 + rng() % 3;
        IntMatrix r = oracle::random_matrix(n, n, -4, 4, rng);
        Int d = oracle::cofactor_determinant(r);
        if (d == 0) continue;
        if (d < 0) d = -d;
        if (d > max_order) continue;
        return cokernel(r);
    }
}

// random well-defined hom: canonical generators map to random elements of
// the right annihilation order
GroupHom random_hom(const FgAbGroup& src, const FgAbGroup& tgt, std::mt19937_64& rng) {
    const std::size_t ks = src.divisors().size();
    const std::size_t kt = tgt.divisors().size();
    auto tgt_elems = oracle::enumerate_elements(tgt);
    IntMatrix canon(kt, ks);
    for (std::size_t j = 0; j < ks; ++j) {
        std::vector<IntVector> ok;
        for (const auto& e : tgt_elems) {
            bool ann = true;
            for (std::size_t l = 0; l < kt; ++l)
                if ((src.divisors()[j] * e[l]) % tgt.divisors()[l] != 0) ann = false;
            if (ann) ok.push_back(e);
        }
        const IntVector& pick = ok[rng() % ok.size()];
        for (std::size_t l = 0; l < kt; ++l) canon(l, j) = pick[l];
    }
    return hom(src, tgt, tgt.from_canonical() * canon * src.to_canonical());
}

}  // namespace

TEST_SUITE_BEGIN("fgab");

TEST_CASE("cokernel of a unimodular matrix is trivial") {
    FgAbGroup g = cokernel(mat(2, 2, {0, -1, -1, 1}));
    CHECK(g.is_trivial());
}

TEST_CASE("cokernel of I-A for the asymmetric 3x3 example is Z/2") {
    // det(I-A) = -2, matching K_0(O_3) = Z/2 for O_{A^t} ~ O_3
    FgAbGroup g = cokernel(mat(3, 3, {0, -1, -1, -1, 0, -1, -1, 0, 1}));
    CHECK(g.free_rank() == 0);
    REQUIRE(g.divisors().size() == 1);
    CHECK(g.divisors()[0] == 2);
}

TEST_CASE("cokernels of the bordered asymmetric-example matrices") {
    // I - A_1 for A and for A^t; the free part carries the unit classes
    FgAbGroup g = cokernel(mat(4, 4, {0, -1, -1, -1, 0, 0, -1, -1, 0, -1, 0, -1, 0, -1, 0, 1}));
    CHECK(g.free_rank() == 1);
    CHECK(g.divisors().empty());
    FgAbGroup gt = cokernel(mat(4, 4, {0, -1, -1, -1, 0, 0, -1, -1, 0, -1, 0, 0, 0, -1, -1, 1}));
    CHECK(gt.free_rank() == 1);
    REQUIRE(gt.divisors().size() == 1);
    CHECK(gt.divisors()[0] == 2);
}

TEST_CASE("canonical maps section identity") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t n = 1 + rng() % 4;
        FgAbGroup g = cokernel(oracle::random_matrix(n, 1 + rng() % 4, -4, 4, rng));
        CHECK(g.to_canonical() * g.from_canonical() ==
              IntMatrix::identity(g.canonical_dim()));
        // ambient vector is canonically zero iff it is a relation
        for (int t = 0; t < 5; ++t) {
            IntVector v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = long(rng() % 7) - 3;
            CHECK(g.contains_in_relations(v) == is_zero_vector(g.canonical_coords(v)));
        }
    }
}

TEST_CASE("subquotient with equal lattices is trivial") {
    IntMatrix L = mat(2, 1, {1, 0});
    Subquotient sq = subquotient(L, L);
    CHECK(sq.group.is_trivial());
}

TEST_CASE("subquotient of the full ambient lattice matches cokernel") {
    IntMatrix r = mat(3, 2, {2, 0, 0, 3, 1, 1});
    Subquotient sq = subquotient(IntMatrix::identity(3), r);
    FgAbGroup direct = cokernel(r);
    CHECK(sq.group.free_rank() == direct.free_rank());
    CHECK(sq.group.divisors() == direct.divisors());
}

TEST_CASE("subquotient by nothing is free of the sublattice rank") {
    IntMatrix L = mat(3, 2, {1, 0, 0, 1, 2, 2});
    Subquotient sq = subquotient(L, IntMatrix(3, 0));
    CHECK(sq.group.free_rank() == 2);
    CHECK(sq.group.divisors().empty());
}

TEST_CASE("subquotient rejects columns outside the sublattice") {
    IntMatrix L = mat(2, 1, {2, 0});
    CHECK_THROWS_AS(subquotient(L, mat(2, 1, {1, 0})), PreconditionError);
}

TEST_CASE("element equality is coset equality") {
    FgAbGroup g = cokernel(mat(3, 3, {0, -1, -1, 0, 0, -1, 0, -1, 1}));
    CHECK(element_eq(make_element(g, vec({0, 1, 0})), make_element(g, vec({1, 1, 1}))));
    Element x = make_element(g, vec({2, -1, 0}));
    CHECK(element_eq(x, x));

    FgAbGroup z2 = cokernel(mat(1, 1, {2}));
    CHECK(!element_eq(make_element(z2, vec({1})), make_element(z2, vec({0}))));
    CHECK(element_eq(make_element(z2, vec({3})), make_element(z2, vec({1}))));
}

TEST_CASE("element equality respects addition of representatives") {
    std::mt19937_64 rng(23);
    FgAbGroup g = cokernel(oracle::random_matrix(3, 3, -3, 3, rng));
    for (int t = 0; t < 20; ++t) {
        IntVector a(3), b(3), c(3);
        for (int i = 0; i < 3; ++i) {
            a[i] = long(rng() % 9) - 4;
            b[i] = long(rng() % 9) - 4;
            c[i] = long(rng() % 9) - 4;
        }
        Element ea = make_element(g, a), eb = make_element(g, b), ec = make_element(g, c);
        if (element_eq(ea, eb)) CHECK(element_eq(ea + ec, eb + ec));
    }
}

TEST_CASE("identity hom exists and torsion cannot inject into free") {
    FgAbGroup z2 = cokernel(mat(1, 1, {2}));
    CHECK_NOTHROW(hom(z2, z2, IntMatrix::identity(1)));
    CHECK_THROWS_AS(hom(z2, free_group(1), mat(1, 1, {1})), NotWellDefinedError);
}

TEST_CASE("constructed homs keep mapping relations into relations") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 25; ++iter) {
        FgAbGroup a = random_finite_group(rng, 40);
        FgAbGroup b = random_finite_group(rng, 40);
        GroupHom h = random_hom(a, b, rng);
        for (std::size_t j = 0; j < a.relations().cols(); ++j)
            CHECK(b.contains_in_relations(h.apply(a.relations().column(j))));
    }
}

TEST_CASE("kernel and image basics") {
    // zero hom: image trivial, kernel everything
    GroupHom z = zero_hom(free_group(1), free_group(1));
    for (const auto& g : image_generators(z)) CHECK(is_zero_vector(g));
    CHECK(subgroup_contains(z.src, kernel_generators(z), vec({1})));
    // identity: kernel is the relation lattice only
    FgAbGroup z4 = cokernel(mat(1, 1, {4}));
    GroupHom id = identity_hom(z4);
    for (const auto& g : kernel_generators(id)) CHECK(z4.contains_in_relations(g));
}

TEST_CASE("exactness: inclusion then doubling then quotient") {
    // 0 -> Z --id--> Z exact at the first Z
    GroupHom zin = zero_hom(cokernel(IntMatrix(0, 0)), free_group(1));
    GroupHom idz = identity_hom(free_group(1));
    CHECK(exact_at(zin, idz).exact);

    // Z --x2--> Z --quot--> Z/2 exact at the middle Z
    GroupHom dbl = hom(free_group(1), free_group(1), mat(1, 1, {2}));
    GroupHom quot = hom(free_group(1), cokernel(mat(1, 1, {2})), mat(1, 1, {1}));
    CHECK(exact_at(dbl, quot).exact);

    // x3 into the same quotient is not exact
    GroupHom trpl = hom(free_group(1), free_group(1), mat(1, 1, {3}));
    CHECK(!exact_at(trpl, quot).exact);
}

TEST_CASE("exact_at agrees with the set-level oracle on finite groups") {
    std::mt19937_64 rng(47);
    int done = 0;
    while (done < 60) {
        FgAbGroup h = random_finite_group(rng, 30);
        FgAbGroup g = random_finite_group(rng, 30);
        FgAbGroup k = random_finite_group(rng, 30);
        GroupHom f = random_hom(h, g, rng);
        GroupHom s = random_hom(g, k, rng);
        CHECK(exact_at(f, s).exact == oracle::brute_force_exact_at(f, s));
        ++done;
    }
}

TEST_CASE("pointed iso: sign flip on Z") {
    Decision d = pointed_iso_exists(literal(1, {}, {{1}, {0}}), literal(1, {}, {{-1}, {0}}));
    CHECK(d.yes());
}

TEST_CASE("pointed iso: unit mismatch on Z") {
    Decision d = pointed_iso_exists(literal(1, {}, {{1}, {-2}}), literal(1, {}, {{1}, {0}}));
    CHECK(d.no());
}

TEST_CASE("pointed iso distinguishes groups with equal orders") {
    Decision d = pointed_iso_exists(literal(0, {4}, {}), literal(0, {2, 2}, {}));
    CHECK(d.no());
}

TEST_CASE("pointed iso uses the free-to-torsion freedom") {
    // (Z + Z/2, (-1,1), (1,0)) ~ (Z + Z/2, (1,0), (-1,1))
    Decision d = pointed_iso_exists(literal(1, {2}, {{-1, 1}, {1, 0}}),
                                    literal(1, {2}, {{1, 0}, {-1, 1}}));
    CHECK(d.yes());
}

TEST_CASE("pointed iso is reflexive with the identity witness") {
    MarkedGroup a = literal(1, {2}, {{1, 1}, {-1, 0}});
    Decision d = pointed_iso_exists(a, a);
    REQUIRE(d.yes());
    REQUIRE(d.witness.has_value());
    CHECK(eq_as_homs(*d.witness, identity_hom(a.group)));
}

TEST_CASE("oversized torsion reports Unknown") {
    PointedIsoOptions opts;
    opts.torsion_bound = 5;
    Decision d = pointed_iso_exists(literal(0, {8}, {{1}}), literal(0, {8}, {{3}}), opts);
    CHECK(d.verdict == Verdict::Unknown);
}

TEST_CASE("mark-count mismatch is an error") {
    CHECK_THROWS_AS(pointed_iso_exists(literal(1, {}, {{1}}), literal(1, {}, {})),
                    GroupMismatchError);
}

TEST_CASE("pointed iso agrees with the exhaustive oracle on finite groups") {
    std::mt19937_64 rng(53);
    int done = 0;
    while (done < 60) {
        FgAbGroup g1 = random_finite_group(rng, 24);
        FgAbGroup g2 = random_finite_group(rng, 24);
        std::size_t marks = rng() % 3;
        auto random_marks = [&](const FgAbGroup& g) {
            std::vector<IntVector> out;
            for (std::size_t i = 0; i < marks; ++i) {
                IntVector v(g.ambient_rank());
                for (auto& x : v) x = long(rng() % 7) - 3;
                out.push_back(v);
            }
            return out;
        };
        MarkedGroup a = make_marked(g1, random_marks(g1));
        MarkedGroup b = make_marked(g2, random_marks(g2));
        Decision d = pointed_iso_exists(a, b);
        REQUIRE(d.verdict != Verdict::Unknown);
        CHECK(d.yes() == oracle::brute_force_pointed_iso(a, b));
        // symmetry
        CHECK(pointed_iso_exists(b, a).yes() == d.yes());
        ++done;
    }
}

TEST_CASE("yes witnesses are verified isomorphisms preserving marks") {
    std::mt19937_64 rng(59);
    int yes_seen = 0;
    while (yes_seen < 15) {
        FgAbGroup g = random_finite_group(rng, 30);
        IntVector m1(g.ambient_rank()), m2(g.ambient_rank());
        for (auto& x : m1) x = long(rng() % 5) - 2;
        for (auto& x : m2) x = long(rng() % 5) - 2;
        MarkedGroup a = make_marked(g, {m1});
        MarkedGroup b = make_marked(g, {m2});
        Decision d = pointed_iso_exists(a, b);
        if (!d.yes()) continue;
        ++yes_seen;
        REQUIRE(d.witness.has_value());
        CHECK(element_eq((*d.witness)(a.marks[0]), b.marks[0]));
        CHECK(is_isomorphism(*d.witness));
    }
}

TEST_CASE("cokernel canonical data is presentation invariant") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 25; ++iter) {
        std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
        IntMatrix r = oracle::random_matrix(n, m, -4, 4, rng);
        FgAbGroup g = cokernel(r);
        IntMatrix p = oracle::random_unimodular(n, rng);
        IntMatrix q = oracle::random_unimodular(m, rng);
        FgAbGroup g2 = cokernel(p * r * q);
        CHECK(g.free_rank() == g2.free_rank());
        CHECK(g.divisors() == g2.divisors());
    }
}

TEST_CASE("display normalization") {
    CHECK(canonical_marked_display(literal(1, {}, {{-1}, {2}})).to_string() == "(Z; 1, -2)");
    CHECK(canonical_marked_display(literal(0, {}, {})).to_string() == "(0)");
    CHECK(canonical_marked_display(literal(1, {2}, {{1, 1}})).to_string() == "(Z + Z/2; (1,1))");
}

TEST_SUITE_END();
