#pragma once

// Brute-force oracles for the test suites. Everything here is deliberately
// independent of the library's normal-form machinery: determinants by
// cofactor expansion, groups by full element enumeration, isomorphisms by
// exhaustive search over generator images.

#include <cstdint>
#include <random>
#include <vector>

#include "ckdual/ckalg.hpp"
#include "ckdual/fgab.hpp"
#include "ckdual/intmat.hpp"

namespace ckdual::testing {

Int cofactor_determinant(const IntMatrix& M);

/// All elements of a finite group as canonical coordinate tuples.
std::vector<IntVector> enumerate_elements(const FgAbGroup& g);

/// Ambient representative of a canonical coordinate tuple.
IntVector lift_canonical(const FgAbGroup& g, const IntVector& coords);

/// Set-level exactness: image(f) == kernel(g) as element sets. All three
/// groups must be finite.
bool brute_force_exact_at(const GroupHom& f, const GroupHom& g);

/// Exhaustive pointed-isomorphism decision for finite groups: enumerates
/// all homomorphisms by generator images and checks bijectivity plus mark
/// preservation.
bool brute_force_pointed_iso(const MarkedGroup& a, const MarkedGroup& b);

IntMatrix random_matrix(std::size_t rows, std::size_t cols, int lo, int hi, std::mt19937_64& rng);
IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng);

/// A small battery of automorphisms of g (negation, coordinate negations,
/// swaps of like coordinates, free transvections), each verified
/// invertible. The identity is not included.
std::vector<GroupHom> automorphism_battery(const FgAbGroup& g);

// The worked-example matrices.
CKMatrix paper_F();
CKMatrix paper_B();
CKMatrix paper_Bminus();
CKMatrix paper_C();
CKMatrix paper_D();
CKMatrix paper_A82();

}  // namespace ckdual::testing
