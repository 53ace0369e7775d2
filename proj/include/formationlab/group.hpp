#ifndef FORMATIONLAB_GROUP_HPP_
#define FORMATIONLAB_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "formationlab/element_set.hpp"
#include "formationlab/perm.hpp"

namespace formationlab {

  using Elem = std::uint32_t;

  inline constexpr Elem        kNoElem            = std::numeric_limits<Elem>::max();
  inline constexpr std::size_t kDefaultOrderBound = 2000;

  // kDefaultOrderBound, unless FORMATIONLAB_MAX_ORDER holds a positive integer.
  std::size_t default_order_bound();

  class GroupTable;
  using GroupPtr = std::shared_ptr<GroupTable const>;

  // A fully enumerated permutation group.
  //
  // Element 0 is the identity; the remaining elements appear in the order
  // the closure algorithm inserted them, so building from the same generator
  // sequence always yields the same indexing. The multiplication table is
  // stored in full; every other module works on element indices.
  class GroupTable {
   public:
    std::size_t degree() const noexcept {
      return _degree;
    }
    std::size_t order() const noexcept {
      return _elements.size();
    }
    std::vector<Permutation> const& generators() const noexcept {
      return _generators;
    }
    // Indices of generators(), same order.
    std::vector<Elem> const& generator_indices() const noexcept {
      return _generator_indices;
    }
    std::vector<Permutation> const& elements() const noexcept {
      return _elements;
    }
    Permutation const& element(Elem i) const {
      return _elements.at(i);
    }
    std::optional<Elem> index_of(Permutation const& p) const;

    Elem mul(Elem a, Elem b) const noexcept {
      return _mul[static_cast<std::size_t>(a) * _elements.size() + b];
    }
    Elem inv(Elem a) const noexcept {
      return _inv[a];
    }
    std::uint32_t order_of(Elem a) const noexcept {
      return _elem_order[a];
    }
    Elem pow(Elem a, std::int64_t e) const noexcept;
    // g^-1 x g
    Elem conj(Elem x, Elem g) const noexcept {
      return mul(mul(inv(g), x), g);
    }
    // a^-1 b^-1 a b
    Elem comm(Elem a, Elem b) const noexcept {
      return mul(mul(inv(a), inv(b)), mul(a, b));
    }

   private:
    friend GroupPtr close_generators(std::size_t,
                                     std::vector<Permutation> const&,
                                     std::size_t);
    GroupTable() = default;

    std::size_t                                   _degree = 0;
    std::vector<Permutation>                      _generators;
    std::vector<Elem>                             _generator_indices;
    std::vector<Permutation>                      _elements;
    std::unordered_map<Permutation, Elem>         _index;
    std::vector<Elem>                             _mul;
    std::vector<Elem>                             _inv;
    std::vector<std::uint32_t>                    _elem_order;
  };

  // Enumerates <gens> by Dimino's algorithm. Throws ResourceError once the
  // order exceeds order_bound, InputError on degree 0 or mismatched degrees.
  GroupPtr close_generators(std::size_t                     degree,
                            std::vector<Permutation> const& gens,
                            std::size_t order_bound = default_order_bound());

  // A subgroup of a GroupTable, as a bitset over its element indices.
  class Subgroup {
   public:
    // members must be closed; only the Lagrange condition is checked here.
    Subgroup(GroupPtr parent, ElementSet members, std::vector<Elem> generators);

    GroupTable const& parent() const noexcept {
      return *_parent;
    }
    GroupPtr const& parent_ptr() const noexcept {
      return _parent;
    }
    ElementSet const& members() const noexcept {
      return _members;
    }
    std::vector<Elem> const& generators() const noexcept {
      return _generators;
    }
    std::size_t order() const noexcept {
      return _order;
    }
    bool contains(Elem x) const noexcept {
      return _members.test(x);
    }
    bool is_trivial() const noexcept {
      return _order == 1;
    }
    bool is_subgroup_of(Subgroup const& other) const noexcept {
      return _members.is_subset_of(other._members);
    }
    std::vector<Elem> elements() const {
      return _members.indices();
    }

    friend bool operator==(Subgroup const& a, Subgroup const& b) noexcept {
      return a._parent == b._parent && a._members == b._members;
    }

   private:
    GroupPtr          _parent;
    ElementSet        _members;
    std::vector<Elem> _generators;
    std::size_t       _order;
  };

  Subgroup whole_group(GroupPtr const& g);
  Subgroup trivial_subgroup(GroupPtr const& g);

  // Least subgroup containing seed.
  Subgroup subgroup_generated(GroupPtr const& g, std::span<Elem const> seed);
  // Same, starting from an existing subgroup (its generators are kept).
  Subgroup extend_subgroup(Subgroup const& s, std::span<Elem const> extra);
  // Wraps a set already known to be a subgroup; recomputes generators and
  // throws InternalError if members is not closed.
  Subgroup subgroup_from_members(GroupPtr const& g, ElementSet const& members);

  Subgroup join(Subgroup const& a, Subgroup const& b);
  Subgroup intersection(Subgroup const& a, Subgroup const& b);

  // s normal in top; s must lie in top.
  bool is_normal_in(Subgroup const& s, Subgroup const& top);

  struct Quotient {
    GroupPtr group;
    // parent element index -> quotient element index; kNoElem outside top.
    std::vector<Elem> projection;
  };

  // top / n acting on the right cosets N x, numbered by least representative
  // index. Throws InputError unless n is a normal subgroup of top.
  Quotient quotient_by(Subgroup const& top, Subgroup const& n);
  Quotient quotient_by(GroupPtr const& g, Subgroup const& n);

  // Elements of top whose image lies in sub (a subgroup of q.group).
  Subgroup preimage(Subgroup const& top, Quotient const& q, Subgroup const& sub);

  Subgroup commutator_subgroup(Subgroup const& a, Subgroup const& b);

  // Both series stop at the first repeated term, which appears once.
  std::vector<Subgroup> derived_series(Subgroup const& g);
  std::vector<Subgroup> lower_central_series(Subgroup const& g);

  std::uint64_t exponent(Subgroup const& g);
  std::uint64_t exponent(GroupPtr const& g);

  Subgroup centralizer(Subgroup const& top, Subgroup const& s);
  // C_top(h/k) = { g in top : [g, x] in k for all x in h }; k must be normal
  // in top and contained in h.
  Subgroup centralizer_mod(Subgroup const&  top,
                           Subgroup const& h,
                           Subgroup const& k);

  // Cycle-notation generator list, e.g. "<(1 2),(1 2 3)>".
  std::string describe(Subgroup const& s);

}  // namespace formationlab

#endif  // FORMATIONLAB_GROUP_HPP_
