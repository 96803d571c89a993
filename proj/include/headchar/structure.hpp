#pragma once

#include <vector>

#include "headchar/permgroup.hpp"

namespace hc {

/// Commutator subgroup [U, U], returned inside the same parent group.
Subgroup derived_subgroup(const Subgroup& u);
Subgroup derived_subgroup(const Group& g);

/// G > G' > G'' > ... down to the stable term (trivial iff G is solvable).
/// The first entry is G itself; the last entry is the stable term, listed once.
std::vector<Subgroup> derived_series(const Group& g);

/// G = gamma_1 > gamma_2 = [G,G] > gamma_3 = [gamma_2, G] > ... down to the
/// stable term (trivial iff G is nilpotent).
std::vector<Subgroup> lower_central_series(const Group& g);

bool is_nilpotent(const Group& g);
bool is_nilpotent(const Subgroup& u);
bool is_solvable(const Group& g);

/// Smallest normal subgroup K with G/K nilpotent: the stable term of the
/// lower central series.
Subgroup nilpotent_residual(const Group& g);

/// A Sylow p-subgroup, grown by repeatedly adjoining a p-element of the
/// normalizer.  Deterministic.  Throws PreconditionError unless p is a prime
/// dividing |G|.
Subgroup sylow_subgroup(const Group& g, long p);

/// Frattini subgroup of a p-group: generated by all commutators and all p-th
/// powers.  Throws PreconditionError if the subgroup is not a p-group.
Subgroup frattini_of_p_group(const Subgroup& p_sub);
Subgroup frattini_of_p_group(const Group& p_group);

struct SubgroupClass {
  Subgroup rep;                   // lexicographically smallest member
  std::vector<Subgroup> members;  // the whole conjugacy class, sorted
};

/// Every subgroup of G, grouped into conjugacy classes.  Built by cyclic
/// extension: each solvable subgroup arises from a smaller one by adjoining a
/// normalizer element whose image has prime order, and the whole group is
/// added at the end in case it is not solvable itself.  Requires
/// |G| <= kSubgroupEnumCap.
std::vector<SubgroupClass> all_subgroups(const Group& g);

/// Flat sorted list of all subgroups (convenience over all_subgroups).
std::vector<Subgroup> all_subgroups_flat(const Group& g);

/// Minimal normal subgroups, sorted by element list.  Each is the normal
/// closure of some prime-order element.
std::vector<Subgroup> minimal_normal_subgroups(const Group& g);

/// All complements of a normal subgroup n: subgroups H with H*n = G and
/// trivial intersection.  Uses the full subgroup enumeration, so the
/// kSubgroupEnumCap bound applies.
std::vector<Subgroup> complements_of(const Group& g, const Subgroup& n);

/// A Carter subgroup (self-normalizing nilpotent subgroup) of a solvable
/// group, found by recursion over a minimal normal subgroup.  The result is
/// checked to be nilpotent and self-normalizing before it is returned.
Subgroup carter_subgroup(const Group& g);

/// All self-normalizing nilpotent subgroups, from the full subgroup
/// enumeration.  For a solvable group these form a single conjugacy class;
/// callers assert that.  Requires |G| <= kSubgroupEnumCap.
std::vector<Subgroup> carter_brute_force(const Group& g);

}  // namespace hc
