#include <set>

#include "doctest.h"

#include "formationlab/corpus.hpp"
#include "formationlab/error.hpp"
#include "formationlab/lattice.hpp"
#include "oracles.hpp"

using namespace formationlab;

namespace {
  Lattice lattice_of(GroupSpec const& spec) {
    return Lattice::build(build_group(spec));
  }

  std::set<std::vector<std::uint32_t>> as_sets(Lattice const& lat) {
    std::set<std::vector<std::uint32_t>> out;
    for (auto const& s : lat.subgroups()) {
      out.insert(s.members().indices());
    }
    return out;
  }

  std::vector<std::size_t> factor_orders(Lattice const& lat) {
    std::vector<std::size_t> out;
    for (auto const& f : chief_series(lat)) {
      out.push_back(f.order);
    }
    return out;
  }

  std::size_t count_of_order(Lattice const& lat, std::size_t order) {
    std::size_t n = 0;
    for (auto const& s : lat.subgroups()) {
      n += s.order() == order ? 1 : 0;
    }
    return n;
  }
}  // namespace

TEST_CASE("subgroup counts") {
  CHECK(lattice_of(cyclic(1)).size() == 1);
  CHECK(lattice_of(cyclic(12)).size() == 6);
  CHECK(lattice_of(symmetric(3)).size() == 6);
  CHECK(lattice_of(alternating(4)).size() == 10);
  CHECK(lattice_of(quaternion_generalized(2)).size() == 6);
  CHECK(lattice_of(direct_product(cyclic(2), cyclic(2))).size() == 5);
  CHECK(lattice_of(symmetric(4)).size() == 30);
  CHECK(lattice_of(alternating(5)).size() == 59);
  CHECK(lattice_of(symmetric(5)).size() == 156);
}

TEST_CASE("lattice agrees with subset closure on tiny groups") {
  for (auto const& spec : {cyclic(6), symmetric(3), dihedral(4), quaternion_generalized(2),
                           direct_product(cyclic(2), cyclic(4)), alternating(4)}) {
    auto const lat = lattice_of(spec);
    CHECK(as_sets(lat) == oracle::all_subsets_lattice(lat.table()));
  }
}

TEST_CASE("lattice agrees with pair extension") {
  for (auto const& spec : {symmetric(4), dihedral(12), quaternion_generalized(6),
                           direct_product(cyclic(3), cyclic(3)), affine_order_75()}) {
    auto const lat = lattice_of(spec);
    CHECK(as_sets(lat) == oracle::pair_extension_lattice(lat.top()));
  }
}

TEST_CASE("ordering and lookup") {
  auto const lat = lattice_of(symmetric(4));
  CHECK(lat.at(0).is_trivial());
  CHECK(lat.at(lat.top_id()).order() == 24);
  for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
    CHECK(lat.at(i).order() <= lat.at(i + 1).order());
    CHECK(lat.find(lat.at(i).members()) == i);
    CHECK(lat.id_of(lat.at(i)) == i);
  }
  auto const other = build_group(symmetric(3));
  CHECK_THROWS_AS(lat.id_of(whole_group(other)), InputError);

  auto const again = lattice_of(symmetric(4));
  for (std::size_t i = 0; i < lat.size(); ++i) {
    CHECK(again.at(i).members() == lat.at(i).members());
  }
}

TEST_CASE("normal, maximal and minimal normal subgroups") {
  auto const s4 = lattice_of(symmetric(4));
  CHECK(normal_subgroups(s4).size() == 4);
  CHECK(maximal_subgroups(s4).size() == 8);
  auto const mn = minimal_normal_subgroups(s4);
  REQUIRE(mn.size() == 1);
  CHECK(s4.at(mn[0]).order() == 4);

  auto const a4 = lattice_of(alternating(4));
  CHECK(normal_subgroups(a4).size() == 3);
  CHECK(maximal_subgroups(a4).size() == 5);

  // C2 x C2: every nontrivial subgroup is minimal normal
  auto const v = lattice_of(direct_product(cyclic(2), cyclic(2)));
  CHECK(minimal_normal_subgroups(v).size() == 3);

  auto const a5 = lattice_of(alternating(5));
  CHECK(normal_subgroups(a5).size() == 2);

  // normality flag agrees with a direct conjugation check
  for (std::size_t i = 0; i < s4.size(); ++i) {
    bool direct = true;
    auto const& t = s4.table();
    for (Elem x : s4.at(i).elements()) {
      for (Elem g = 0; g < t.order(); ++g) {
        direct = direct && s4.at(i).contains(t.conj(x, g));
      }
    }
    CHECK(s4.is_normal(i) == direct);
  }
}

TEST_CASE("frattini") {
  CHECK(frattini(lattice_of(symmetric(4))).order() == 1);
  CHECK(frattini(lattice_of(cyclic(4))).order() == 2);
  CHECK(frattini(lattice_of(cyclic(1))).order() == 1);
  CHECK(frattini(lattice_of(quaternion_generalized(2))).order() == 2);
  CHECK(frattini(lattice_of(cyclic(36))).order() == 6);
}

TEST_CASE("sylow subgroups") {
  auto const s4 = lattice_of(symmetric(4));
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK(sylow_subgroup(s4, 3).order() == 3);
  CHECK(sylow_subgroup(s4, 5).is_trivial());
  // number of Sylow subgroups is 1 mod p and divides the index
  for (auto const& spec : {symmetric(4), alternating(5), affine_order_75(), dihedral(15)}) {
    auto const lat = lattice_of(spec);
    auto const n   = lat.top().order();
    for (auto p : prime_divisors(n)) {
      auto const pp    = p_part(n, p);
      auto const count = count_of_order(lat, pp);
      CHECK(count % p == 1);
      CHECK((n / pp) % count == 0);
    }
  }
}

TEST_CASE("o_pi and o_pprime_p") {
  auto const s4 = lattice_of(symmetric(4));
  CHECK(o_pi(s4, {2}).order() == 4);
  CHECK(o_pi(s4, {3}).order() == 1);
  CHECK(o_pi(s4, {2, 3}).order() == 24);
  CHECK(o_pprime_p(s4, 2).order() == 4);
  CHECK(o_pprime_p(s4, 3).order() == 12);

  auto const s3 = lattice_of(symmetric(3));
  CHECK(o_pprime_p(s3, 2).order() == 6);
  CHECK(o_pprime_p(s3, 3).order() == 3);

  auto const a5 = lattice_of(alternating(5));
  CHECK(o_pprime_p(a5, 2).is_trivial());

  // direct: the largest normal subgroup N containing O_p' with N / O_p' a p-group
  for (auto const& spec : {symmetric(4), alternating(4), dihedral(6), affine_order_75(),
                           direct_product(symmetric(3), cyclic(5))}) {
    auto const lat = lattice_of(spec);
    auto const n   = lat.top().order();
    for (auto p : prime_divisors(n)) {
      std::vector<std::uint64_t> others;
      for (auto q : prime_divisors(n)) {
        if (q != p) {
          others.push_back(q);
        }
      }
      auto const   k    = o_pi(lat, others);
      std::size_t  best = k.order();
      for (std::size_t i : normal_subgroups(lat)) {
        auto const& h = lat.at(i);
        auto const  r = h.order() / k.order();
        if (k.is_subgroup_of(h) && p_part(r, p) == r) {
          best = std::max<std::size_t>(best, h.order());
        }
      }
      CHECK(o_pprime_p(lat, p).order() == best);
    }
  }
}

TEST_CASE("chief series") {
  CHECK(factor_orders(lattice_of(alternating(4))) == std::vector<std::size_t>{4, 3});
  CHECK(factor_orders(lattice_of(symmetric(3))) == std::vector<std::size_t>{3, 2});
  CHECK(factor_orders(lattice_of(symmetric(4))) == std::vector<std::size_t>{4, 3, 2});
  CHECK(factor_orders(lattice_of(alternating(5))) == std::vector<std::size_t>{60});
  CHECK(factor_orders(lattice_of(affine_order_75())) == std::vector<std::size_t>{25, 3});
  CHECK(chief_series(lattice_of(cyclic(1))).empty());

  for (auto const& spec : {symmetric(4), dihedral(12), direct_product(alternating(4), cyclic(3))}) {
    auto const lat  = lattice_of(spec);
    auto const cs   = chief_series(lat);
    std::size_t prod = 1;
    for (auto const& f : cs) {
      CHECK(is_normal(lat, f.lower));
      CHECK(is_normal(lat, f.upper));
      CHECK(f.upper.order() == f.lower.order() * f.order);
      prod *= f.order;
      // no normal subgroup strictly between
      for (std::size_t i : normal_subgroups(lat)) {
        auto const& m = lat.at(i);
        bool const between = f.lower.is_subgroup_of(m) && m.is_subgroup_of(f.upper)
                             && m.order() != f.lower.order() && m.order() != f.upper.order();
        CHECK_FALSE(between);
      }
    }
    CHECK(prod == lat.top().order());
  }
}

TEST_CASE("prime-index edges and reachability") {
  auto const a4 = lattice_of(alternating(4));
  // V4 has index 3, the trivial subgroup reaches top through V4
  CHECK(p_reachable(a4, 0));
  // C3 has index 4 and no subgroup of order 6 exists
  for (std::size_t i = 0; i < a4.size(); ++i) {
    if (a4.at(i).order() == 3) {
      CHECK_FALSE(p_reachable(a4, i));
      CHECK_FALSE(prime_index_chain(a4, i).has_value());
    }
  }
  auto const chain = prime_index_chain(a4, 0);
  REQUIRE(chain.has_value());
  CHECK(chain->front() == 0);
  CHECK(chain->back() == a4.top_id());

  for (auto const& spec : {symmetric(4), alternating(5), dihedral(10)}) {
    auto const lat = lattice_of(spec);
    for (auto [a, b] : lat.prime_index_edges()) {
      CHECK(lat.contains(a, b));
      CHECK(is_prime(lat.at(b).order() / lat.at(a).order()));
    }
    std::size_t expected = 0;
    for (std::size_t a = 0; a < lat.size(); ++a) {
      for (std::size_t b = 0; b < lat.size(); ++b) {
        if (a != b && lat.contains(a, b) && is_prime(lat.at(b).order() / lat.at(a).order())) {
          ++expected;
        }
      }
    }
    CHECK(lat.prime_index_edges().size() == expected);
  }
}

TEST_CASE("restrict") {
  auto const s4 = lattice_of(symmetric(4));
  for (std::size_t i = 0; i < s4.size(); ++i) {
    auto const sub = s4.restrict(i);
    CHECK(sub.top() == s4.at(i));
    std::size_t expected = 0;
    for (std::size_t j = 0; j < s4.size(); ++j) {
      expected += s4.contains(j, i) ? 1 : 0;
    }
    CHECK(sub.size() == expected);
    CHECK(sub.size() == Lattice::build(s4.at(i)).size());
  }
}

TEST_CASE("subgroup bound") {
  LatticeOptions opts;
  opts.max_subgroups = 10;
  CHECK_THROWS_AS(Lattice::build(build_group(symmetric(4)), opts), ResourceError);
  CHECK_NOTHROW(Lattice::build(build_group(alternating(4)), opts));
}

TEST_CASE("cyclic lattice is a chain") {
  auto const c8 = lattice_of(cyclic(8));
  REQUIRE(c8.size() == 4);
  for (std::size_t i = 0; i + 1 < c8.size(); ++i) {
    CHECK(c8.contains(i, i + 1));
    CHECK(c8.at(i + 1).order() == 2 * c8.at(i).order());
  }
}
