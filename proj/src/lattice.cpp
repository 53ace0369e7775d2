#include "formationlab/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "formationlab/error.hpp"
#include "formationlab/numbers.hpp"

namespace formationlab {

  namespace {
    // One generator for each cyclic subgroup of prime-power order in top.
    // Every subgroup is generated by its elements of prime-power order, and
    // <S, x> = <S, x^k> for k prime to |x|, so extending by these suffices.
    std::vector<Elem> cyclic_primary_reps(Subgroup const& top) {
      GroupTable const& t = top.parent();
      ElementSet        covered(t.order());
      std::vector<Elem> reps;
      top.members().for_each([&](std::size_t xi) {
        auto const x   = static_cast<Elem>(xi);
        auto const ord = t.order_of(x);
        if (covered.test(x) || !is_prime_power(ord)) {
          return;
        }
        reps.push_back(x);
        Elem y = x;
        for (std::uint32_t k = 1; k <= ord; ++k, y = t.mul(y, x)) {
          if (std::gcd(k, ord) == 1) {
            covered.set(y);
          }
        }
      });
      return reps;
    }

    bool by_lattice_order(Subgroup const& a, Subgroup const& b) {
      if (a.order() != b.order()) {
        return a.order() < b.order();
      }
      return lex_less(a.members(), b.members());
    }
  }  // namespace

  Lattice Lattice::build(Subgroup const& top, LatticeOptions const& opts) {
    GroupPtr const&   g    = top.parent_ptr();
    auto const        reps = cyclic_primary_reps(top);
    std::vector<Subgroup>                       found{trivial_subgroup(g)};
    std::unordered_map<ElementSet, std::size_t> seen{{found[0].members(), 0}};

    // Cyclic extension, level by level: each new subgroup is <S, x>.
    for (std::size_t next = 0; next < found.size(); ++next) {
      for (Elem x : reps) {
        if (found[next].contains(x)) {
          continue;
        }
        Elem const one[] = {x};
        Subgroup   t     = extend_subgroup(found[next], one);
        if (seen.contains(t.members())) {
          continue;
        }
        if (found.size() >= opts.max_subgroups) {
          throw ResourceError("subgroup count exceeds bound "
                              + std::to_string(opts.max_subgroups));
        }
        seen.emplace(t.members(), found.size());
        found.push_back(std::move(t));
      }
    }

    std::sort(found.begin(), found.end(), by_lattice_order);
    if (!(found.back() == top)) {
      throw InternalError("subgroup enumeration did not reach the whole group");
    }

    Lattice lat;
    lat._subgroups = std::move(found);
    std::size_t const n = lat._subgroups.size();
    std::vector<std::vector<std::size_t>> up(n);
    for (std::size_t a = 0; a < n; ++a) {
      auto const oa = lat._subgroups[a].order();
      for (std::size_t b = a + 1; b < n; ++b) {
        auto const ob = lat._subgroups[b].order();
        if (ob % oa == 0 && is_prime(ob / oa) && lat.contains(a, b)) {
          up[a].push_back(b);
        }
      }
    }
    lat.index_and_link(std::move(up));
    return lat;
  }

  Lattice Lattice::build(GroupPtr const& g, LatticeOptions const& opts) {
    return build(whole_group(g), opts);
  }

  void Lattice::index_and_link(std::vector<std::vector<std::size_t>> up) {
    _index.clear();
    for (std::size_t i = 0; i < _subgroups.size(); ++i) {
      _index.emplace(_subgroups[i].members(), i);
    }
    _normal.assign(_subgroups.size(), false);
    for (std::size_t i = 0; i < _subgroups.size(); ++i) {
      _normal[i] = is_normal_in(_subgroups[i], top());
    }
    _up = std::move(up);
  }

  Lattice Lattice::restrict(std::size_t id) const {
    std::vector<std::size_t> new_id(size(), SIZE_MAX);
    Lattice                  sub;
    for (std::size_t i = 0; i <= id; ++i) {
      if (contains(i, id)) {
        new_id[i] = sub._subgroups.size();
        sub._subgroups.push_back(_subgroups[i]);
      }
    }
    std::vector<std::vector<std::size_t>> up(sub._subgroups.size());
    for (std::size_t i = 0; i <= id; ++i) {
      if (new_id[i] == SIZE_MAX) {
        continue;
      }
      for (std::size_t j : _up[i]) {
        if (j < new_id.size() && new_id[j] != SIZE_MAX) {
          up[new_id[i]].push_back(new_id[j]);
        }
      }
    }
    sub.index_and_link(std::move(up));
    return sub;
  }

  std::optional<std::size_t> Lattice::find(ElementSet const& members) const {
    auto it = _index.find(members);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t Lattice::id_of(Subgroup const& s) const {
    if (s.parent_ptr() != table_ptr()) {
      throw InputError("subgroup belongs to a different group table");
    }
    auto id = find(s.members());
    if (!id) {
      throw InputError(describe(s) + " is not in this lattice");
    }
    return *id;
  }

  std::vector<std::pair<std::size_t, std::size_t>> Lattice::prime_index_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < _up.size(); ++a) {
      for (std::size_t b : _up[a]) {
        out.emplace_back(a, b);
      }
    }
    return out;
  }

  bool is_normal(Lattice const& lat, Subgroup const& s) {
    return lat.is_normal(lat.id_of(s));
  }

  std::vector<std::size_t> normal_subgroups(Lattice const& lat) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (lat.is_normal(i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<std::size_t> maximal_subgroups(Lattice const& lat) {
    std::vector<std::size_t> out;
    std::size_t const        top = lat.top_id();
    for (std::size_t i = 0; i < top; ++i) {
      bool maximal = true;
      for (std::size_t j = i + 1; j < top && maximal; ++j) {
        maximal = !lat.contains(i, j);
      }
      if (maximal) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<std::size_t> minimal_normal_subgroups(Lattice const& lat) {
    std::vector<std::size_t> out;
    auto const               normals = normal_subgroups(lat);
    for (std::size_t i : normals) {
      if (i == 0) {
        continue;
      }
      bool minimal = true;
      for (std::size_t j : normals) {
        if (j != 0 && j < i && lat.contains(j, i)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.push_back(i);
      }
    }
    return out;
  }

  Subgroup frattini(Lattice const& lat) {
    auto const maxes = maximal_subgroups(lat);
    if (maxes.empty()) {
      return lat.top();
    }
    ElementSet members = lat.at(maxes[0]).members();
    for (std::size_t i : maxes) {
      members &= lat.at(i).members();
    }
    return lat.at(lat.find(members).value());
  }

  Subgroup sylow_subgroup(Lattice const& lat, std::uint64_t p) {
    auto const want = p_part(lat.top().order(), p);
    for (auto const& s : lat.subgroups()) {
      if (s.order() == want) {
        return s;
      }
    }
    throw InternalError("no Sylow subgroup found");
  }

  Subgroup o_pi(Lattice const& lat, std::vector<std::uint64_t> const& pi) {
    auto in_pi = [&](std::size_t order) {
      for (auto q : prime_divisors(order)) {
        if (std::find(pi.begin(), pi.end(), q) == pi.end()) {
          return false;
        }
      }
      return true;
    };
    Subgroup result = lat.at(0);
    for (std::size_t i : normal_subgroups(lat)) {
      if (in_pi(lat.at(i).order()) && !lat.at(i).is_subgroup_of(result)) {
        result = join(result, lat.at(i));
      }
    }
    return lat.at(lat.id_of(result));
  }

  Subgroup o_pprime_p(Lattice const& lat, std::uint64_t p) {
    std::vector<std::uint64_t> others;
    for (auto q : prime_divisors(lat.top().order())) {
      if (q != p) {
        others.push_back(q);
      }
    }
    Subgroup const k    = o_pi(lat, others);
    Quotient const q    = quotient_by(lat.top(), k);
    Lattice const  qlat = Lattice::build(q.group);
    Subgroup const op   = o_pi(qlat, {p});
    return lat.at(lat.id_of(preimage(lat.top(), q, op)));
  }

  std::vector<ChiefFactor> chief_series(Lattice const& lat) {
    std::vector<ChiefFactor> out;
    std::size_t              current = 0;
    while (current != lat.top_id()) {
      std::size_t next = current + 1;
      while (!(lat.is_normal(next) && lat.contains(current, next))) {
        ++next;
      }
      auto const order = lat.at(next).order() / lat.at(current).order();
      out.push_back({lat.at(current), lat.at(next), order, prime_divisors(order)});
      current = next;
    }
    return out;
  }

  std::optional<std::vector<std::size_t>> prime_index_chain(Lattice const& lat,
                                                            std::size_t    from) {
    std::vector<std::size_t> parent(lat.size(), SIZE_MAX);
    std::deque<std::size_t>  queue{from};
    parent[from] = from;
    while (!queue.empty()) {
      std::size_t const a = queue.front();
      queue.pop_front();
      if (a == lat.top_id()) {
        std::vector<std::size_t> chain{a};
        while (chain.back() != from) {
          chain.push_back(parent[chain.back()]);
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
      for (std::size_t b : lat.prime_index_up(a)) {
        if (parent[b] == SIZE_MAX) {
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    return std::nullopt;
  }

  bool p_reachable(Lattice const& lat, std::size_t from) {
    return prime_index_chain(lat, from).has_value();
  }

}  // namespace formationlab
