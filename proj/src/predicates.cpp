#include "formationlab/predicates.hpp"

#include <vector>

#include "formationlab/numbers.hpp"

namespace formationlab {

  bool is_abelian(Subgroup const& g) {
    GroupTable const& t    = g.parent();
    auto const&       gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (t.mul(gens[i], gens[j]) != t.mul(gens[j], gens[i])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_cyclic(Subgroup const& g) {
    bool found = false;
    g.members().for_each([&](std::size_t x) {
      found = found || g.parent().order_of(static_cast<Elem>(x)) == g.order();
    });
    return found;
  }

  bool is_primary(Subgroup const& g) {
    return is_prime_power(g.order());
  }

  bool is_soluble(Subgroup const& g) {
    return derived_series(g).back().is_trivial();
  }

  bool is_nilpotent(Subgroup const& g) {
    return lower_central_series(g).back().is_trivial();
  }

  bool is_nilpotent_by_sylow(Lattice const& lat) {
    for (auto p : prime_divisors(lat.top().order())) {
      if (!is_normal(lat, sylow_subgroup(lat, p))) {
        return false;
      }
    }
    return true;
  }

  bool is_supersoluble(Lattice const& lat) {
    std::vector<bool>        seen(lat.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      std::size_t const a = stack.back();
      stack.pop_back();
      if (a == lat.top_id()) {
        return true;
      }
      for (std::size_t b : lat.prime_index_up(a)) {
        if (!seen[b] && lat.is_normal(b)) {
          seen[b] = true;
          stack.push_back(b);
        }
      }
    }
    return false;
  }

  bool is_supersoluble_by_chief_series(Lattice const& lat) {
    for (auto const& f : chief_series(lat)) {
      if (!is_prime(f.order)) {
        return false;
      }
    }
    return true;
  }

  bool has_sylow_tower_sst(Lattice const& lat) {
    auto const order = lat.top().order();
    if (order == 1) {
      return true;
    }
    auto const     p     = prime_divisors(order).back();
    Subgroup const sylow = sylow_subgroup(lat, p);
    if (!is_normal(lat, sylow)) {
      return false;
    }
    Quotient const q = quotient_by(lat.top(), sylow);
    return has_sylow_tower_sst(Lattice::build(q.group));
  }

  bool in_f_p(Subgroup const& g, std::uint64_t p) {
    return is_soluble(g) && (p - 1) % exponent(g) == 0;
  }

}  // namespace formationlab
