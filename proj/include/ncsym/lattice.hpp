#pragma once

#include <vector>

#include "ncsym/bigint.hpp"
#include "ncsym/set_partition.hpp"

namespace ncsym {

// Multiset of block counts: entry j says how many blocks of the finer
// partition sit inside block j of the coarser one, sorted descending. The
// profile determines the interval [finer, coarser] up to isomorphism and is
// the memo key for the Möbius recursion.
using IntervalProfile = std::vector<int>;

IntervalProfile interval_profile(const SetPartition& finer,
                                 const SetPartition& coarser);

// Möbius function of the refinement order, computed by the incidence-algebra
// recursion mu(B,B) = 1, mu(B,A) = -sum of mu(B,C) over B <= C < A, memoized
// per interval profile. Returns 0 when the arguments are incomparable.
Int mobius(const SetPartition& finer, const SetPartition& coarser);

// Closed form: product over coarser blocks of (-1)^(b-1) (b-1)! where b is
// the number of finer blocks inside. Unlike mobius(), incomparable arguments
// are an error here. Kept independent of mobius() so the two can be checked
// against each other.
Int mobius_product_form(const SetPartition& finer, const SetPartition& coarser);

// All partitions C with finer <= C <= coarser, in enumeration order. Filters
// partitions_of(n) for n <= 6 and enumerates block-wise products above that.
std::vector<SetPartition> interval(const SetPartition& finer,
                                   const SetPartition& coarser);

// All partitions below (refinements of) or above (coarsenings of) the given
// one, including it; deterministic order.
std::vector<SetPartition> refinements(const SetPartition& a);
std::vector<SetPartition> coarsenings(const SetPartition& a);

}  // namespace ncsym
