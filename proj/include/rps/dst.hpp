#pragma once

#include "rps/mass_function.hpp"

namespace rps {

/// Pignistic transformation: the mass of each focal set is shared evenly
/// among its members.
ProbabilityDistribution pignistic(const MassFunction& m);

/// Classical discounting with reliability `beta` in [0,1]. The removed mass
/// goes to the whole frame.
MassFunction discount_bpa(const MassFunction& m, double beta);

/// Normalized conjunctive (Dempster) combination. Throws ConflictError when
/// 1 - K < 1e-12.
MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2);

/// Conflict K = sum of m1(B) m2(C) over disjoint B, C.
double dempster_conflict(const MassFunction& m1, const MassFunction& m2);

/// Jousselme distance sqrt(1/2 (m1-m2)^T D (m1-m2)) with the Jaccard
/// similarity D(A,B) = |A n B| / |A u B|.
double jousselme_distance(const MassFunction& m1, const MassFunction& m2);

}  // namespace rps
