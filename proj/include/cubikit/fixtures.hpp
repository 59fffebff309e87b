#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cubikit/strict.hpp"

namespace cubikit::fixtures {

// Plain 1-truncated path a -f-> b -g-> c -h-> d.
TruncatedCubicalSet p3();
// Opposite path a <-f- b <-g- c <-h- d.
TruncatedCubicalSet p3op();
// a -f-> b.
TruncatedCubicalSet interval();
// One cell in every dimension up to n, all structure maps trivial.
TruncatedCubicalSet point(int n, Variant v = Variant::Reflexive);
// Cubical tensor product of plain sets; faces in directions 1..dim(x) act
// on the left factor.
TruncatedCubicalSet product(const TruncatedCubicalSet& x, const TruncatedCubicalSet& y);
// Two-by-two grid of squares, the product of two 2-step paths.
TruncatedCubicalSet grid2x2();

// Z/n as a one-object strict cubical 2-category: 1-cells are residues
// under addition, 2-cells are commuting squares (s1,t1,s2,t2) with
// s1 + t2 = s2 + t1. Reversors (m = 0) are negation in dimension 1 and the
// direction swap in dimension 2.
StrictInstance integer_loop(int n = 3);
// Same cells with the 2-dimensional reversors negating every edge, so the
// maximal (∞,0) squares commute.
StrictInstance integer_loop_maximal(int n = 3);
// The symmetric group S_3 as a one-object category, 1-truncated, with
// inverses as reversors.
StrictInstance symmetric_group3();
// a -f-> b with a formal inverse fbar and both identities; reversor swaps
// f and fbar and fixes the identities.
StrictInstance interval_with_inverse();

// Names accepted by builtin(): p3, p3op, interval, point, grid, cube2,
// cube3, interval-degenerate, interval-reflexive, and the cell sets of the
// instances below.
TruncatedCubicalSet builtin(const std::string& name);
// Names accepted by builtin_instance(): integer-loop,
// integer-loop-maximal, s3, interval-inverse.
StrictInstance builtin_instance(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace cubikit::fixtures
