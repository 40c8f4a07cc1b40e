#ifndef MOTZKIN_BIJECTIONS_HPP
#define MOTZKIN_BIJECTIONS_HPP

#include "motzkin/paths.hpp"
#include "motzkin/trees.hpp"

namespace motzkin {

/// The canonical S-path decomposition into (left, middle, right) components.
struct PhiTriple {
  LatticePath a;  // left
  LatticePath b;  // middle
  LatticePath c;  // right
};

/// Splits a nonempty S-Motzkin path: c is the subpath strictly between the
/// last two axis contacts with its bracketing Up/Down removed; a is the
/// longest Flat-led subpath ending just before the Flat step x that precedes
/// the removed Up, relatively non-negative and closing at its start height;
/// b is everything else (the part before a, then the part between x and the
/// removed Up). All components are empty or S-Motzkin.
PhiTriple phi_decompose(const LatticePath& m);

/// Inverse: b1 . a . Flat . b2 . Up . c . Down, where b1 runs up to and
/// including b's final Up step.
LatticePath phi_compose(const PhiTriple& t);

TernaryTree s_to_ternary(const LatticePath& m);
LatticePath ternary_to_s(const TernaryTree& t);

struct OmegaPair {
  LatticePath a;
  LatticePath b;
};

/// Splits a T-Motzkin path at its rightmost Flat step x. b is the maximal
/// Flat-led closing subpath ending just before x; a is the rest with a Flat
/// step prepended. When the path ends at x the pair is (empty, Flat . rest),
/// which keeps the map injective. Both components are empty or S-Motzkin.
OmegaPair omega_split(const LatticePath& n);

/// Inverse: drop a's initial Flat and insert b . Flat right after a's final
/// Up; for (empty, b), drop b's initial Flat and append one Flat.
LatticePath omega_join(const OmegaPair& p);

TreePair t_to_tree_pair(const LatticePath& n);
LatticePath tree_pair_to_t(const TreePair& p);

NonCrossingTree s_to_noncrossing(const LatticePath& m);
LatticePath noncrossing_to_s(const NonCrossingTree& t);

}  // namespace motzkin

#endif
