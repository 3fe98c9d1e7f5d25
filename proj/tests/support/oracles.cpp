#include "support/oracles.hpp"

#include <algorithm>
#include <set>

#include "ckdual/errors.hpp"

namespace ckdual::testing {

Int cofactor_determinant(const IntMatrix& M) {
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    if (n == 1) return M(0, 0);
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (M(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = M(i, c);
            }
        }
        Int term = M(0, j) * cofactor_determinant(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

std::vector<IntVector> enumerate_elements(const FgAbGroup& g) {
    if (g.free_rank() != 0) throw Error("enumerate_elements: group is infinite");
    std::vector<IntVector> out;
    IntVector current(g.divisors().size());
    const std::size_t k = g.divisors().size();
    out.push_back(current);
    while (true) {
        std::size_t i = 0;
        while (i < k) {
            current[i] += 1;
            if (current[i] < g.divisors()[i]) break;
            current[i] = 0;
            ++i;
        }
        if (i == k) break;
        out.push_back(current);
    }
    return out;
}

IntVector lift_canonical(const FgAbGroup& g, const IntVector& coords) {
    return g.from_canonical().apply(coords);
}

namespace {

std::vector<long> key_of(const FgAbGroup& g, const IntVector& ambient) {
    IntVector c = g.canonical_coords(ambient);
    std::vector<long> key(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) key[i] = c[i].get_si();
    return key;
}

}  // namespace

bool brute_force_exact_at(const GroupHom& f, const GroupHom& g) {
    const FgAbGroup& G = f.tgt;
    std::set<std::vector<long>> image;
    for (const IntVector& h : enumerate_elements(f.src))
        image.insert(key_of(G, f.apply(lift_canonical(f.src, h))));
    std::set<std::vector<long>> kernel;
    for (const IntVector& x : enumerate_elements(G)) {
        IntVector ambient = lift_canonical(G, x);
        if (g.tgt.contains_in_relations(g.apply(ambient)))
            kernel.insert(key_of(G, ambient));
    }
    return image == kernel;
}

bool brute_force_pointed_iso(const MarkedGroup& a, const MarkedGroup& b) {
    const FgAbGroup& ga = a.group;
    const FgAbGroup& gb = b.group;
    if (ga.free_rank() != 0 || gb.free_rank() != 0)
        throw Error("brute_force_pointed_iso: groups must be finite");
    if (ga.order() != gb.order()) return false;
    if (a.marks.size() != b.marks.size()) throw Error("mark count mismatch");

    const std::size_t k = ga.divisors().size();
    std::vector<IntVector> b_elems = enumerate_elements(gb);

    // candidate images for generator i: elements annihilated by d_i
    std::vector<std::vector<IntVector>> candidates(k);
    for (std::size_t i = 0; i < k; ++i)
        for (const IntVector& e : b_elems) {
            bool ok = true;
            for (std::size_t l = 0; l < e.size(); ++l)
                if ((ga.divisors()[i] * e[l]) % gb.divisors()[l] != 0) ok = false;
            if (ok) candidates[i].push_back(e);
        }

    std::vector<IntVector> a_elems = enumerate_elements(ga);
    std::vector<IntVector> a_mark_coords, b_mark_coords;
    for (const auto& mk : a.marks) a_mark_coords.push_back(ga.canonical_coords(mk.rep));
    for (const auto& mk : b.marks) b_mark_coords.push_back(gb.canonical_coords(mk.rep));

    auto apply_map = [&](const std::vector<IntVector>& images, const IntVector& coords) {
        IntVector out(gb.divisors().size());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < out.size(); ++l) out[l] += coords[i] * images[i][l];
        for (std::size_t l = 0; l < out.size(); ++l)
            mpz_fdiv_r(out[l].get_mpz_t(), out[l].get_mpz_t(), gb.divisors()[l].get_mpz_t());
        return out;
    };

    std::vector<std::size_t> pick(k, 0);
    while (true) {
        std::vector<IntVector> images;
        for (std::size_t i = 0; i < k; ++i) images.push_back(candidates[i][pick[i]]);

        std::set<std::vector<long>> hit;
        for (const IntVector& x : a_elems) {
            IntVector y = apply_map(images, x);
            std::vector<long> key(y.size());
            for (std::size_t l = 0; l < y.size(); ++l) key[l] = y[l].get_si();
            hit.insert(key);
        }
        if (Int(static_cast<unsigned long>(hit.size())) == ga.order()) {
            bool marks_ok = true;
            for (std::size_t m = 0; m < a.marks.size() && marks_ok; ++m)
                if (apply_map(images, a_mark_coords[m]) != b_mark_coords[m]) marks_ok = false;
            if (marks_ok) return true;
        }

        std::size_t i = 0;
        while (i < k) {
            if (++pick[i] < candidates[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == k) break;
        if (k == 0) break;
    }
    // k == 0: both groups trivial; all marks are zero
    return k == 0;
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, int lo, int hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
    IntMatrix m = IntMatrix::identity(n);
    if (n < 2) return m;
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        int c = coef(rng);
        for (std::size_t col = 0; col < n; ++col) m(i, col) += c * m(j, col);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (rng() % 2) {
            for (std::size_t col = 0; col < n; ++col) m(i, col) = -m(i, col);
        }
    return m;
}

std::vector<GroupHom> automorphism_battery(const FgAbGroup& g) {
    std::vector<GroupHom> out;
    const std::size_t r = g.free_rank();
    const std::size_t k = g.divisors().size();
    const std::size_t c = r + k;
    if (c == 0) return out;

    auto push_canonical = [&](const IntMatrix& W) {
        GroupHom h = hom(g, g, g.from_canonical() * W * g.to_canonical());
        if (!eq_as_homs(h, identity_hom(g))) out.push_back(std::move(h));
    };

    // global negation
    push_canonical(-IntMatrix::identity(c));
    // per-coordinate negations
    for (std::size_t i = 0; i < c; ++i) {
        IntMatrix W = IntMatrix::identity(c);
        W(i, i) = -1;
        push_canonical(W);
    }
    // free transvections x_i += x_j
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j) continue;
            IntMatrix W = IntMatrix::identity(c);
            W(i, j) = 1;
            push_canonical(W);
        }
    // swaps of coordinates of equal type
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j) {
            bool both_free = i < r && j < r;
            bool like_torsion = i >= r && j >= r && g.divisors()[i - r] == g.divisors()[j - r];
            if (!both_free && !like_torsion) continue;
            IntMatrix W = IntMatrix::identity(c);
            W(i, i) = 0;
            W(j, j) = 0;
            W(i, j) = 1;
            W(j, i) = 1;
            push_canonical(W);
        }
    // free-to-torsion shears t_l += x_i (always an automorphism)
    for (std::size_t l = 0; l < k; ++l)
        for (std::size_t i = 0; i < r; ++i) {
            IntMatrix W = IntMatrix::identity(c);
            W(r + l, i) = 1;
            push_canonical(W);
        }
    return out;
}

namespace {
CKMatrix mk(std::size_t n, std::vector<long> e) {
    return CKMatrix::validate(IntMatrix(n, n, std::move(e)));
}
}  // namespace

CKMatrix paper_F() { return mk(2, {1, 1, 1, 0}); }
CKMatrix paper_B() { return mk(2, {1, 1, 1, 1}); }
CKMatrix paper_Bminus() {
    return mk(4, {1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1});
}
CKMatrix paper_C() { return mk(3, {1, 1, 1, 1, 1, 1, 1, 0, 1}); }
CKMatrix paper_D() { return mk(3, {0, 1, 1, 1, 1, 1, 1, 0, 1}); }
CKMatrix paper_A82() { return mk(3, {1, 1, 1, 1, 1, 1, 1, 0, 0}); }

}  // namespace ckdual::testing
