#pragma once

#include <cstdint>

#include "ltls/classical.hpp"
#include "ltls/linspace.hpp"

namespace ltls::construct {

/// A linear space with a group acting on its points.
struct Construction {
  ls::LinearSpace space;
  grp::PermGroup group;
};

/// Desarguesian plane PG(2,q) with PSL(3,q) in its natural action.
Construction pg2(std::uint64_t q, const grp::GroupBuildOptions& opts = {});

/// The coordinatewise Frobenius map of PG(2,q), a collineation outside PSL(3,q).
grp::Permutation pg2_frobenius(std::uint64_t q);

/// Witt-Bose-Shrikhande space for q = 2^a, a >= 3: points are the dihedral
/// subgroups of order 2(q+1) of PSL(2,q) (numbered by their sorted element
/// sets), lines are the involutions, incidence is containment. The group is
/// PSL(2,q) acting on points by conjugation.
Construction wbs(std::uint64_t q, const grp::GroupBuildOptions& opts = {});

}  // namespace ltls::construct
