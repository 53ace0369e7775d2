#ifndef FORMATIONLAB_LATTICE_HPP_
#define FORMATIONLAB_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "formationlab/group.hpp"

namespace formationlab {

  inline constexpr std::size_t kDefaultSubgroupBound = 1'000'000;

  struct LatticeOptions {
    std::size_t max_subgroups = kDefaultSubgroupBound;
  };

  // Every subgroup of a group `top` (itself a subgroup of some GroupTable).
  //
  // Entries are sorted by order and then lexicographically by member
  // indices, so id 0 is the trivial subgroup and the last id is top. Ids
  // are positions in that order and are stable for a given table. A
  // prime-index edge A -> B means A < B with |B:A| prime.
  class Lattice {
   public:
    static Lattice build(Subgroup const& top, LatticeOptions const& opts = {});
    static Lattice build(GroupPtr const& g, LatticeOptions const& opts = {});

    // The lattice of at(id): the members contained in it, with normality
    // and edges taken relative to at(id).
    Lattice restrict(std::size_t id) const;

    GroupTable const& table() const noexcept {
      return top().parent();
    }
    GroupPtr const& table_ptr() const noexcept {
      return top().parent_ptr();
    }
    Subgroup const& top() const noexcept {
      return _subgroups.back();
    }
    std::size_t size() const noexcept {
      return _subgroups.size();
    }
    std::size_t top_id() const noexcept {
      return _subgroups.size() - 1;
    }
    Subgroup const& at(std::size_t id) const {
      return _subgroups.at(id);
    }
    std::vector<Subgroup> const& subgroups() const noexcept {
      return _subgroups;
    }

    std::optional<std::size_t> find(ElementSet const& members) const;
    // Throws InputError if s is not an entry.
    std::size_t id_of(Subgroup const& s) const;

    // at(a) is contained in at(b)
    bool contains(std::size_t a, std::size_t b) const {
      return _subgroups[a].is_subgroup_of(_subgroups[b]);
    }
    bool is_normal(std::size_t id) const {
      return _normal.at(id);
    }
    std::vector<std::size_t> const& prime_index_up(std::size_t id) const {
      return _up.at(id);
    }
    std::vector<std::pair<std::size_t, std::size_t>> prime_index_edges() const;

   private:
    Lattice() = default;
    void index_and_link(std::vector<std::vector<std::size_t>> up);

    std::vector<Subgroup>                       _subgroups;
    std::unordered_map<ElementSet, std::size_t> _index;
    std::vector<bool>                           _normal;
    std::vector<std::vector<std::size_t>>       _up;
  };

  bool                     is_normal(Lattice const& lat, Subgroup const& s);
  std::vector<std::size_t> normal_subgroups(Lattice const& lat);
  // Maximal among proper subgroups.
  std::vector<std::size_t> maximal_subgroups(Lattice const& lat);
  // Minimal among nontrivial normal subgroups.
  std::vector<std::size_t> minimal_normal_subgroups(Lattice const& lat);

  // Intersection of the maximal subgroups; top itself when it is trivial.
  Subgroup frattini(Lattice const& lat);

  // First entry of order |top|_p; trivial when p does not divide |top|.
  Subgroup sylow_subgroup(Lattice const& lat, std::uint64_t p);

  // Largest normal subgroup whose order has all prime divisors in pi.
  Subgroup o_pi(Lattice const& lat, std::vector<std::uint64_t> const& pi);
  // Preimage of O_p(top / O_p'(top)).
  Subgroup o_pprime_p(Lattice const& lat, std::uint64_t p);

  struct ChiefFactor {
    Subgroup                   lower;
    Subgroup                   upper;
    std::size_t                order;
    std::vector<std::uint64_t> primes;
  };

  // 1 = K_0 < K_1 < ... < K_m = top through normal subgroups, taking the
  // least eligible entry at each step.
  std::vector<ChiefFactor> chief_series(Lattice const& lat);

  // Whether top is reachable from `from` along prime-index edges.
  bool p_reachable(Lattice const& lat, std::size_t from);

  // One prime-index chain from `from` up to top (ids, from first), or
  // nullopt when none exists.
  std::optional<std::vector<std::size_t>> prime_index_chain(Lattice const& lat,
                                                            std::size_t from);

}  // namespace formationlab

#endif  // FORMATIONLAB_LATTICE_HPP_
