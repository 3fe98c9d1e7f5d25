#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ckdual/intmat.hpp"

namespace ckdual {

/// Finitely generated abelian group presented as Z^n / (column lattice of
/// `relations`). The presentation is the identity of the group: ambient
/// coordinates are remembered so distinguished vectors like (1,...,1) are
/// stored verbatim. The canonical decomposition Z^r (+) Z/d_1 (+) ... (+) Z/d_k
/// (d_1 | d_2 | ..., d_i >= 2) is a cached view computed eagerly from the
/// Smith normal form of the relations. Canonical coordinates list the free
/// coordinates first, then the torsion coordinates.
///
/// Cheap-to-copy immutable value (shared internal state); safe for
/// concurrent use.
class FgAbGroup {
public:
    FgAbGroup();  // the trivial group (ambient rank 0)

    std::size_t ambient_rank() const;
    const IntMatrix& relations() const;
    std::size_t free_rank() const;
    const std::vector<Int>& divisors() const;
    /// (free_rank + #divisors) x ambient_rank
    const IntMatrix& to_canonical() const;
    /// ambient_rank x (free_rank + #divisors); a section of to_canonical
    const IntMatrix& from_canonical() const;
    std::size_t canonical_dim() const { return free_rank() + divisors().size(); }

    bool is_trivial() const;
    bool is_finite() const { return free_rank() == 0; }
    /// Group order; meaningful only when finite.
    Int order() const;

    /// True iff v lies in the relation lattice (v represents zero).
    bool contains_in_relations(const IntVector& v) const;
    /// Canonical coordinates of the class of v: free coordinates exact,
    /// torsion coordinates reduced into [0, d_i).
    IntVector canonical_coords(const IntVector& v) const;

    bool same_group(const FgAbGroup& other) const;

    friend FgAbGroup cokernel(const IntMatrix& relations);

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Z^n / (column lattice of R) with ambient rank = rows(R).
FgAbGroup cokernel(const IntMatrix& relations);
/// Free abelian group Z^n (no relations).
FgAbGroup free_group(std::size_t n);

/// A group element carried by an ambient coset representative.
struct Element {
    FgAbGroup group;
    IntVector rep;

    Element operator+(const Element& other) const;
    Element operator-(const Element& other) const;
    Element operator-() const;
    bool is_zero() const { return group.contains_in_relations(rep); }
};

Element make_element(const FgAbGroup& g, IntVector rep);
Element zero_element(const FgAbGroup& g);

/// Coset equality: rep(x) - rep(y) in the relation lattice. Throws
/// GroupMismatchError when the groups differ.
bool element_eq(const Element& x, const Element& y);

/// Homomorphism carried by an integer matrix on ambient coordinates,
/// well-definedness verified at construction.
struct GroupHom {
    FgAbGroup src;
    FgAbGroup tgt;
    IntMatrix matrix;

    Element operator()(const Element& x) const;
    IntVector apply(const IntVector& rep) const;
};

/// Verifies that `matrix` maps every relation column of src into tgt's
/// relation lattice; throws NotWellDefinedError with the offending column.
GroupHom hom(const FgAbGroup& src, const FgAbGroup& tgt, IntMatrix matrix);
GroupHom identity_hom(const FgAbGroup& g);
GroupHom zero_hom(const FgAbGroup& src, const FgAbGroup& tgt);
GroupHom compose(const GroupHom& f, const GroupHom& g);  // f after g

bool eq_as_homs(const GroupHom& f, const GroupHom& g);
bool is_zero_hom(const GroupHom& h);
/// True iff h is injective and surjective (decided exactly).
bool is_isomorphism(const GroupHom& h);

/// Generators of the image of h: classes of h(e_i), as target ambient vectors.
std::vector<IntVector> image_generators(const GroupHom& h);
/// Generators of {x : h(x) = 0}, as source ambient vectors; contains the
/// source relations.
std::vector<IntVector> kernel_generators(const GroupHom& h);

/// Membership of v in the subgroup of g generated by gens (mod relations).
bool subgroup_contains(const FgAbGroup& g, const std::vector<IntVector>& gens, const IntVector& v);
/// Subgroup equality by mutual membership of generators.
bool subgroups_equal(const FgAbGroup& g, const std::vector<IntVector>& a,
                     const std::vector<IntVector>& b);

struct ExactnessResult {
    bool exact = false;
    std::string witness;  // offending element and direction on failure
};

/// image(f) == kernel(g) as subgroups of the shared middle group.
ExactnessResult exact_at(const GroupHom& f, const GroupHom& g);

/// A group together with an ordered tuple of distinguished elements.
struct MarkedGroup {
    FgAbGroup group;
    std::vector<Element> marks;
};

MarkedGroup make_marked(const FgAbGroup& g, std::vector<IntVector> mark_reps);

enum class Verdict : std::uint8_t { Yes, No, Unknown };

struct Decision {
    Verdict verdict = Verdict::Unknown;
    std::optional<GroupHom> witness;  // invertible, mark-preserving (Yes only)
    std::string reason;

    bool yes() const { return verdict == Verdict::Yes; }
    bool no() const { return verdict == Verdict::No; }
};

struct PointedIsoOptions {
    /// Torsion subgroups larger than this are not searched; the verdict
    /// becomes Unknown instead of a guess.
    unsigned long torsion_bound = 1000000;
};

/// Decides existence of a group isomorphism a.group -> b.group carrying
/// mark_i(a) to mark_i(b) for all i. Complete (Yes/No) whenever the torsion
/// subgroup has at most torsion_bound elements. Yes carries a verified
/// witness hom. Throws GroupMismatchError on mark-count mismatch.
Decision pointed_iso_exists(const MarkedGroup& a, const MarkedGroup& b,
                            const PointedIsoOptions& opts = {});

struct MarkedDisplay {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;
    std::vector<IntVector> marks;  // canonical coords, free parts hnf-normalized

    std::string to_string() const;
};

/// Deterministic display form: free parts of the mark tuple are put into the
/// hnf_rows canonical orbit form, torsion coordinates reduced mod d_i. Two
/// marked groups that are pointed-isomorphic may still display differently
/// when the residual torsion freedom is nontrivial; pointed_iso_exists is
/// the authority, display is for reporting.
MarkedDisplay canonical_marked_display(const MarkedGroup& m);

struct Subquotient {
    FgAbGroup group;   // isomorphic to (lattice of L) / (lattice of S)
    IntMatrix embed;   // sends representatives back into the ambient of L
};

/// (lattice spanned by columns of L) / (lattice spanned by columns of S).
/// Throws PreconditionError (with the offending column) when some column of
/// S is outside the lattice of L.
Subquotient subquotient(const IntMatrix& L, const IntMatrix& S);

}  // namespace ckdual
