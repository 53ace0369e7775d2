#ifndef FORMATIONLAB_PREDICATES_HPP_
#define FORMATIONLAB_PREDICATES_HPP_

#include <cstdint>

#include "formationlab/group.hpp"
#include "formationlab/lattice.hpp"

namespace formationlab {

  bool is_abelian(Subgroup const& g);
  bool is_cyclic(Subgroup const& g);
  // Order is p^k with k >= 1; the trivial group is not primary.
  bool is_primary(Subgroup const& g);
  bool is_soluble(Subgroup const& g);
  // Lower central series reaches 1.
  bool is_nilpotent(Subgroup const& g);
  // Independent route: every Sylow subgroup is normal.
  bool is_nilpotent_by_sylow(Lattice const& lat);

  // A chain 1 = N_0 < ... < N_m = top of normal subgroups with prime
  // indices, found by search along prime-index edges between normal
  // entries.
  bool is_supersoluble(Lattice const& lat);
  // Independent route: every chief factor has prime order.
  bool is_supersoluble_by_chief_series(Lattice const& lat);

  // Sylow tower of supersoluble type: the Sylow subgroup for the largest
  // prime divisor is normal and the quotient by it has the property again.
  bool has_sylow_tower_sst(Lattice const& lat);

  // f(p): soluble with exponent dividing p - 1.
  bool in_f_p(Subgroup const& g, std::uint64_t p);

  inline bool is_abelian(GroupPtr const& g) {
    return is_abelian(whole_group(g));
  }
  inline bool is_cyclic(GroupPtr const& g) {
    return is_cyclic(whole_group(g));
  }
  inline bool is_primary(GroupPtr const& g) {
    return is_primary(whole_group(g));
  }
  inline bool is_soluble(GroupPtr const& g) {
    return is_soluble(whole_group(g));
  }
  inline bool is_nilpotent(GroupPtr const& g) {
    return is_nilpotent(whole_group(g));
  }
  inline bool in_f_p(GroupPtr const& g, std::uint64_t p) {
    return in_f_p(whole_group(g), p);
  }

}  // namespace formationlab

#endif  // FORMATIONLAB_PREDICATES_HPP_
