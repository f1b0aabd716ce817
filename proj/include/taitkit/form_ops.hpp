#pragma once

#include <vector>

#include "taitkit/int_form.hpp"

namespace taitkit {

/// Block-diagonal sum: the form of a boundary-connect sum.
SymmetricIntForm block_sum(const SymmetricIntForm& f, const SymmetricIntForm& g);

/// Adds m to the diagonal entry at index (m half-twists along the dual arc).
/// Throws IndexOutOfRange for a bad index or m == 0.
SymmetricIntForm add_twists(const SymmetricIntForm& f, int index, int m);

/// Principal submatrix on `keep` (deduplicated, in increasing order).
SymmetricIntForm restrict(const SymmetricIntForm& f, const std::vector<int>& keep);

/// Searches unimodular U with entries in [-coeff_bound, coeff_bound] such that
/// U^T f U = g. A false answer is conclusive only within the bound.
/// Requires dim(f) = dim(g) <= 3.
bool congruent_small(const SymmetricIntForm& f, const SymmetricIntForm& g, int coeff_bound);

}  // namespace taitkit
