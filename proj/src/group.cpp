#include "formationlab/group.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "formationlab/error.hpp"

namespace formationlab {

  std::size_t default_order_bound() {
    if (char const* env = std::getenv("FORMATIONLAB_MAX_ORDER")) {
      char*      end = nullptr;
      auto const v   = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return static_cast<std::size_t>(v);
      }
    }
    return kDefaultOrderBound;
  }

  std::optional<Elem> GroupTable::index_of(Permutation const& p) const {
    if (p.degree() != _degree) {
      return std::nullopt;
    }
    auto it = _index.find(p);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Elem GroupTable::pow(Elem a, std::int64_t e) const noexcept {
    auto const ord = static_cast<std::int64_t>(_elem_order[a]);
    auto       r   = ((e % ord) + ord) % ord;
    Elem       result = 0;
    Elem       base   = a;
    while (r > 0) {
      if (r & 1) {
        result = mul(result, base);
      }
      base = mul(base, base);
      r >>= 1;
    }
    return result;
  }

  GroupPtr close_generators(std::size_t                     degree,
                            std::vector<Permutation> const& gens,
                            std::size_t                     order_bound) {
    if (degree == 0) {
      throw InputError("group degree must be positive");
    }
    for (auto const& s : gens) {
      if (s.degree() != degree) {
        throw InputError("generator " + format_cycles(s) + " has degree "
                         + std::to_string(s.degree()) + ", expected "
                         + std::to_string(degree));
      }
    }

    std::shared_ptr<GroupTable> g(new GroupTable());
    g->_degree     = degree;
    g->_generators = gens;
    auto& elements = g->_elements;
    auto& index    = g->_index;

    auto add = [&](Permutation p) {
      if (elements.size() >= order_bound) {
        throw ResourceError("group order exceeds bound "
                            + std::to_string(order_bound));
      }
      index.emplace(p, static_cast<Elem>(elements.size()));
      elements.push_back(std::move(p));
    };

    // Dimino: extend <s_1..s_{i-1}> by s_i one right coset at a time.
    add(Permutation::identity(degree));
    std::vector<Permutation> used;
    for (auto const& s : gens) {
      if (index.contains(s)) {
        continue;
      }
      used.push_back(s);
      std::size_t const        prev = elements.size();
      std::vector<Permutation> reps;
      auto add_coset = [&](Permutation const& r) {
        reps.push_back(r);
        for (std::size_t h = 0; h < prev; ++h) {
          add(compose(elements[h], r));
        }
      };
      add_coset(s);
      for (std::size_t ri = 0; ri < reps.size(); ++ri) {
        for (auto const& t : used) {
          Permutation p = compose(reps[ri], t);
          if (!index.contains(p)) {
            add_coset(p);
          }
        }
      }
    }

    std::size_t const n = elements.size();
    for (auto const& s : gens) {
      g->_generator_indices.push_back(index.at(s));
    }

    // Generator columns by hashing, then a Schreier tree (BFS over right
    // multiplication) lets every other column be filled by table lookups.
    std::vector<Elem> gen_ids;
    for (auto const& s : used) {
      gen_ids.push_back(index.at(s));
    }
    std::vector<std::vector<Elem>> right(gen_ids.size(), std::vector<Elem>(n));
    for (std::size_t k = 0; k < gen_ids.size(); ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        right[k][i] = index.at(compose(elements[i], used[k]));
      }
    }
    std::vector<Elem>        parent(n, kNoElem);
    std::vector<std::size_t> via(n, 0);
    std::vector<Elem>        bfs{0};
    parent[0] = 0;
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      Elem const x = bfs[head];
      for (std::size_t k = 0; k < gen_ids.size(); ++k) {
        Elem const y = right[k][x];
        if (parent[y] == kNoElem) {
          parent[y] = x;
          via[y]    = k;
          bfs.push_back(y);
        }
      }
    }
    if (bfs.size() != n) {
      throw InternalError("Schreier tree does not span the group");
    }
    auto& mul = g->_mul;
    mul.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Elem* row = mul.data() + i * n;
      row[0]    = static_cast<Elem>(i);
      for (std::size_t pos = 1; pos < n; ++pos) {
        Elem const j = bfs[pos];
        row[j]       = right[via[j]][row[parent[j]]];
      }
    }

    g->_inv.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Elem const* row = mul.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        if (row[j] == 0) {
          g->_inv[i] = static_cast<Elem>(j);
          break;
        }
      }
    }
    g->_elem_order.assign(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t k = 1;
      for (Elem x = static_cast<Elem>(i); x != 0; x = mul[x * n + i]) {
        ++k;
      }
      g->_elem_order[i] = k;
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroup
  ////////////////////////////////////////////////////////////////////////

  Subgroup::Subgroup(GroupPtr parent, ElementSet members, std::vector<Elem> generators)
      : _parent(std::move(parent)),
        _members(std::move(members)),
        _generators(std::move(generators)),
        _order(_members.count()) {
    if (_parent == nullptr || _members.universe() != _parent->order()) {
      throw InternalError("subgroup bitset does not match its parent group");
    }
    if (_order == 0 || !_members.test(0) || _parent->order() % _order != 0) {
      throw InternalError("subgroup of order " + std::to_string(_order)
                          + " violates Lagrange in a group of order "
                          + std::to_string(_parent->order()));
    }
  }

  namespace {
    // Closed subgroup as a bitset plus its element list; extend() adds one
    // generator by appending whole right cosets (Dimino on indices).
    struct Closure {
      GroupTable const& table;
      ElementSet        set;
      std::vector<Elem> elems;
      std::vector<Elem> gens;

      explicit Closure(GroupTable const& t) : table(t), set(t.order()), elems{0} {
        set.set(0);
      }

      Closure(GroupTable const& t, Subgroup const& s)
          : table(t), set(s.members()), elems(s.elements()), gens(s.generators()) {}

      void extend(Elem g) {
        if (set.test(g)) {
          return;
        }
        gens.push_back(g);
        std::size_t const prev = elems.size();
        std::vector<Elem> reps;
        auto add_coset = [&](Elem r) {
          reps.push_back(r);
          for (std::size_t h = 0; h < prev; ++h) {
            Elem const x = table.mul(elems[h], r);
            set.set(x);
            elems.push_back(x);
          }
        };
        add_coset(g);
        for (std::size_t ri = 0; ri < reps.size(); ++ri) {
          for (Elem t : gens) {
            Elem const p = table.mul(reps[ri], t);
            if (!set.test(p)) {
              add_coset(p);
            }
          }
        }
      }
    };
  }  // namespace

  Subgroup whole_group(GroupPtr const& g) {
    ElementSet all(g->order());
    for (std::size_t i = 0; i < g->order(); ++i) {
      all.set(i);
    }
    std::vector<Elem> gens;
    for (Elem x : g->generator_indices()) {
      if (x != 0) {
        gens.push_back(x);
      }
    }
    return Subgroup(g, std::move(all), std::move(gens));
  }

  Subgroup trivial_subgroup(GroupPtr const& g) {
    ElementSet one(g->order());
    one.set(0);
    return Subgroup(g, std::move(one), {});
  }

  Subgroup subgroup_generated(GroupPtr const& g, std::span<Elem const> seed) {
    Closure c(*g);
    for (Elem x : seed) {
      c.extend(x);
    }
    return Subgroup(g, std::move(c.set), std::move(c.gens));
  }

  Subgroup extend_subgroup(Subgroup const& s, std::span<Elem const> extra) {
    Closure c(s.parent(), s);
    for (Elem x : extra) {
      c.extend(x);
    }
    return Subgroup(s.parent_ptr(), std::move(c.set), std::move(c.gens));
  }

  Subgroup subgroup_from_members(GroupPtr const& g, ElementSet const& members) {
    Closure           c(*g);
    std::size_t const target = members.count();
    members.for_each([&](std::size_t x) {
      if (c.elems.size() < target) {
        c.extend(static_cast<Elem>(x));
      }
    });
    if (!(c.set == members)) {
      throw InternalError("element set is not a subgroup");
    }
    return Subgroup(g, std::move(c.set), std::move(c.gens));
  }

  Subgroup join(Subgroup const& a, Subgroup const& b) {
    return extend_subgroup(a, b.generators());
  }

  Subgroup intersection(Subgroup const& a, Subgroup const& b) {
    return subgroup_from_members(a.parent_ptr(), a.members() & b.members());
  }

  bool is_normal_in(Subgroup const& s, Subgroup const& top) {
    GroupTable const& t = s.parent();
    auto const        xs = s.elements();
    for (Elem g : top.generators()) {
      for (Elem x : xs) {
        if (!s.contains(t.conj(x, g))) {
          return false;
        }
      }
    }
    return true;
  }

  Quotient quotient_by(Subgroup const& top, Subgroup const& n) {
    if (!n.is_subgroup_of(top) || !is_normal_in(n, top)) {
      throw InputError("quotient_by: " + describe(n)
                       + " is not a normal subgroup of " + describe(top));
    }
    GroupTable const& t = top.parent();
    std::vector<Elem> coset_of(t.order(), kNoElem);
    std::vector<Elem> reps;
    auto const        kernel = n.elements();
    top.members().for_each([&](std::size_t x) {
      if (coset_of[x] != kNoElem) {
        return;
      }
      auto const c = static_cast<Elem>(reps.size());
      reps.push_back(static_cast<Elem>(x));
      for (Elem y : kernel) {
        coset_of[t.mul(y, static_cast<Elem>(x))] = c;
      }
    });
    std::size_t const m = reps.size();

    auto action = [&](Elem g) {
      std::vector<std::uint32_t> img(m);
      for (std::size_t c = 0; c < m; ++c) {
        img[c] = coset_of[t.mul(reps[c], g)] + 1;
      }
      return Permutation::from_images(img);
    };

    std::vector<Permutation> gens;
    for (Elem g : top.generators()) {
      gens.push_back(action(g));
    }
    Quotient q;
    q.group = close_generators(m, gens, std::max(m, std::size_t(1)));
    q.projection.assign(t.order(), kNoElem);
    // one action per coset suffices: the projection is constant on cosets
    std::vector<Elem> image_of_coset(m);
    for (std::size_t c = 0; c < m; ++c) {
      auto idx = q.group->index_of(action(reps[c]));
      if (!idx) {
        throw InternalError("coset action escapes the quotient group");
      }
      image_of_coset[c] = *idx;
    }
    top.members().for_each(
        [&](std::size_t x) { q.projection[x] = image_of_coset[coset_of[x]]; });
    if (q.group->order() * n.order() != top.order()) {
      throw InternalError("quotient order mismatch");
    }
    return q;
  }

  Quotient quotient_by(GroupPtr const& g, Subgroup const& n) {
    return quotient_by(whole_group(g), n);
  }

  Subgroup preimage(Subgroup const& top, Quotient const& q, Subgroup const& sub) {
    ElementSet members(top.parent().order());
    top.members().for_each([&](std::size_t x) {
      if (sub.contains(q.projection[x])) {
        members.set(x);
      }
    });
    return subgroup_from_members(top.parent_ptr(), members);
  }

  Subgroup commutator_subgroup(Subgroup const& a, Subgroup const& b) {
    GroupTable const& t = a.parent();
    ElementSet        seen(t.order());
    std::vector<Elem> seed;
    auto const        bs = b.elements();
    a.members().for_each([&](std::size_t x) {
      for (Elem y : bs) {
        Elem const c = t.comm(static_cast<Elem>(x), y);
        if (!seen.test(c)) {
          seen.set(c);
          seed.push_back(c);
        }
      }
    });
    return subgroup_generated(a.parent_ptr(), seed);
  }

  std::vector<Subgroup> derived_series(Subgroup const& g) {
    std::vector<Subgroup> series{g};
    while (true) {
      Subgroup next = commutator_subgroup(series.back(), series.back());
      if (next == series.back()) {
        return series;
      }
      series.push_back(std::move(next));
    }
  }

  std::vector<Subgroup> lower_central_series(Subgroup const& g) {
    std::vector<Subgroup> series{g};
    while (true) {
      Subgroup next = commutator_subgroup(series.back(), g);
      if (next == series.back()) {
        return series;
      }
      series.push_back(std::move(next));
    }
  }

  std::uint64_t exponent(Subgroup const& g) {
    std::uint64_t e = 1;
    g.members().for_each(
        [&](std::size_t x) { e = std::lcm(e, g.parent().order_of(static_cast<Elem>(x))); });
    return e;
  }

  std::uint64_t exponent(GroupPtr const& g) {
    return exponent(whole_group(g));
  }

  Subgroup centralizer(Subgroup const& top, Subgroup const& s) {
    GroupTable const& t  = top.parent();
    auto const        xs = s.elements();
    ElementSet        members(t.order());
    top.members().for_each([&](std::size_t gi) {
      auto const g = static_cast<Elem>(gi);
      for (Elem x : xs) {
        if (t.mul(g, x) != t.mul(x, g)) {
          return;
        }
      }
      members.set(gi);
    });
    return subgroup_from_members(top.parent_ptr(), members);
  }

  Subgroup centralizer_mod(Subgroup const& top, Subgroup const& h, Subgroup const& k) {
    if (!k.is_subgroup_of(h) || !k.is_subgroup_of(top) || !is_normal_in(k, top)) {
      throw InputError("centralizer_mod: " + describe(k)
                       + " must be normal in the group and contained in "
                       + describe(h));
    }
    GroupTable const& t  = top.parent();
    auto const        hs = h.elements();
    ElementSet        members(t.order());
    top.members().for_each([&](std::size_t gi) {
      for (Elem x : hs) {
        if (!k.contains(t.comm(static_cast<Elem>(gi), x))) {
          return;
        }
      }
      members.set(gi);
    });
    return subgroup_from_members(top.parent_ptr(), members);
  }

  std::string describe(Subgroup const& s) {
    std::string out = "<";
    bool        first = true;
    for (Elem g : s.generators()) {
      if (!first) {
        out += ',';
      }
      out += format_cycles(s.parent().element(g));
      first = false;
    }
    if (first) {
      out += "()";
    }
    return out + ">";
  }

}  // namespace formationlab
