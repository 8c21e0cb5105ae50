#pragma once

#include <cstdint>
#include <vector>

#include "nsz/ffield.hpp"

namespace nsz {

struct Factor {
  FFPoly factor;  // monic irreducible
  unsigned multiplicity;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Lifts every coefficient of f into `field`.
FFPoly lift(const FFPoly& f, const TowerPtr& field);

/// Order used to pick factors deterministically: by degree, then linear
/// factors by their root in enumeration order, higher degrees by coefficient
/// vectors compared constant term first.
bool factor_precedes(const FFPoly& a, const FFPoly& b);

/// Squarefree decomposition of a nonconstant polynomial: pairwise coprime
/// monic squarefree parts with multiplicities, product equal to monic(f).
std::vector<Factor> squarefree_decomposition(const FFPoly& f, const TowerPtr& field);

/// Complete factorization over `field` into monic irreducibles, sorted by
/// `factor_precedes`. Squarefree decomposition, distinct-degree and
/// Cantor-Zassenhaus equal-degree splitting; `seed` drives the splitting.
/// Throws UsageError for constant input.
std::vector<Factor> factor_univariate(const FFPoly& f, const TowerPtr& field, std::uint64_t seed = 0);

/// Rabin's test over `field`.
bool is_irreducible(const FFPoly& f, const TowerPtr& field);

struct AdjoinedRoot {
  TowerPtr tower;
  FFElement root;
};

/// A root of g in the tower, extended by g when deg g >= 2. The old tower is
/// left untouched. Throws UsageError when g is reducible (or constant).
AdjoinedRoot adjoin_root(const TowerPtr& tower, const FFPoly& g);

/// First monic irreducible quadratic over `field`, scanning x^2 + b*x + c
/// with c outer and b inner in enumeration order.
FFPoly first_irreducible_quadratic(const TowerPtr& field);

}  // namespace nsz
