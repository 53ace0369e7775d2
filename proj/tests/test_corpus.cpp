#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"

#include "formationlab/corpus.hpp"
#include "formationlab/error.hpp"
#include "formationlab/predicates.hpp"

using namespace formationlab;
namespace fs = std::filesystem;

namespace {
  std::size_t order_of_spec(GroupSpec const& s) {
    return build_group(s)->order();
  }

  struct TempDir {
    fs::path path;
    TempDir() {
      path = fs::temp_directory_path()
             / ("formationlab-test-" + std::to_string(std::random_device{}()));
      fs::create_directories(path);
    }
    ~TempDir() {
      std::error_code ec;
      fs::remove_all(path, ec);
    }
  };
}  // namespace

TEST_CASE("family orders and names") {
  CHECK(order_of_spec(cyclic(1)) == 1);
  CHECK(order_of_spec(cyclic(12)) == 12);
  CHECK(cyclic(12).name == "C12");
  CHECK(order_of_spec(dihedral(5)) == 10);
  CHECK(dihedral(5).name == "D10");
  CHECK(order_of_spec(symmetric(5)) == 120);
  CHECK(order_of_spec(alternating(5)) == 60);
  CHECK(order_of_spec(alternating(2)) == 1);
  CHECK(order_of_spec(quaternion_generalized(2)) == 8);
  CHECK(quaternion_generalized(2).name == "Q8");
  CHECK(order_of_spec(quaternion_generalized(5)) == 20);
  auto const p = direct_product(symmetric(3), cyclic(4));
  CHECK(p.name == "S3xC4");
  CHECK(p.degree == 7);
  CHECK(order_of_spec(p) == 24);

  CHECK_THROWS_AS(cyclic(0), InputError);
  CHECK_THROWS_AS(dihedral(2), InputError);
}

TEST_CASE("generalized quaternion groups have a unique involution") {
  for (std::size_t m : {2, 3, 4, 6}) {
    auto const g = build_group(quaternion_generalized(m));
    std::size_t involutions = 0;
    for (Elem x = 0; x < g->order(); ++x) {
      involutions += g->order_of(x) == 2 ? 1 : 0;
    }
    CHECK(involutions == 1);
    CHECK_FALSE(is_abelian(g));
  }
}

TEST_CASE("affine groups") {
  Matrix2 const rot{{{0, -1}, {1, -1}}};
  CHECK(matrix_order(5, rot) == 3);
  CHECK(matrix_order(7, rot) == 3);
  CHECK(matrix_order(5, Matrix2{{{1, 0}, {0, 1}}}) == 1);
  CHECK_THROWS_AS(matrix_order(5, Matrix2{{{1, 2}, {2, 4}}}), InputError);

  auto const g75 = affine_order_75();
  CHECK(g75.degree == 25);
  CHECK(order_of_spec(g75) == 75);
  auto const g294 = affine_order_294();
  CHECK(g294.degree == 49);
  CHECK(order_of_spec(g294) == 294);

  CHECK(order_of_spec(affine_semidirect(3, Matrix2{{{1, 0}, {0, 1}}})) == 9);
  CHECK_THROWS_AS(affine_semidirect(4, rot), InputError);
  CHECK_THROWS_AS(affine_semidirect(5, Matrix2{{{0, 0}, {0, 0}}}), InputError);
}

TEST_CASE("subgroups of symmetric groups") {
  CHECK(subgroups_of_symmetric(1).size() == 1);
  CHECK(subgroups_of_symmetric(3).size() == 6);
  auto const s4 = subgroups_of_symmetric(4);
  CHECK(s4.size() == 30);
  std::set<std::string> names;
  for (auto const& s : s4) {
    CHECK(s.provenance == Provenance::SnSubgroup);
    CHECK(s.degree == 4);
    names.insert(s.name);
  }
  CHECK(names.size() == s4.size());
  CHECK(order_of_spec(s4.front()) == 1);
  CHECK(order_of_spec(s4.back()) == 24);
  CHECK(subgroups_of_symmetric(5).size() == 156);
  CHECK_THROWS_AS(subgroups_of_symmetric(6), InputError);
  CHECK_THROWS_AS(subgroups_of_symmetric(7, true), InputError);
}

TEST_CASE("standard corpus") {
  auto const corpus = standard_corpus();
  std::set<std::string> names;
  bool has75 = false, has294 = false;
  for (auto const& s : corpus) {
    names.insert(s.name);
    has75  = has75 || s.name == affine_order_75().name;
    has294 = has294 || s.name == affine_order_294().name;
  }
  CHECK(names.size() == corpus.size());
  CHECK(has75);
  CHECK(has294);
  CHECK(standard_corpus({3, false}).size() == corpus.size() - 30 - 156);
  for (auto const& s : named_families()) {
    CHECK(s.provenance == Provenance::NamedFamily);
  }
}

TEST_CASE("group file parsing") {
  auto const spec = parse_group_text("# a comment\n\ndegree 3\nname S3\ngen (1 2 3)\ngen (1 2)\n");
  CHECK(spec.name == "S3");
  CHECK(spec.degree == 3);
  CHECK(spec.generator_texts.size() == 2);
  CHECK(spec.provenance == Provenance::UserFile);
  CHECK(order_of_spec(spec) == 6);

  CHECK_THROWS_WITH_AS(parse_group_text("degree 3\ngen (1 4)\n", "f.grp"),
                       doctest::Contains("f.grp:2"), InputError);
  CHECK_THROWS_WITH_AS(parse_group_text("degree 3\nname x\nbogus 1\n", "f.grp"),
                       doctest::Contains("f.grp:3"), InputError);
  CHECK_THROWS_AS(parse_group_text("gen (1 2)\n"), InputError);
  CHECK_THROWS_AS(parse_group_text("degree 0\n"), InputError);
  CHECK_THROWS_AS(parse_group_text("degree three\n"), InputError);
  CHECK_THROWS_AS(load_group("/nonexistent/file.grp"), InputError);
}

TEST_CASE("group files round-trip") {
  TempDir dir;
  for (auto const& spec : {symmetric(4), affine_order_75(), cyclic(1)}) {
    auto const path = dir.path / (spec.name + ".grp");
    save_group(spec, path);
    auto loaded = load_group(path);
    CHECK(loaded.name == spec.name);
    CHECK(loaded.degree == spec.degree);
    CHECK(build_group(loaded)->elements() == build_group(spec)->elements());
    CHECK(format_group_text(loaded).find("degree " + std::to_string(spec.degree))
          != std::string::npos);
  }
  std::ofstream(dir.path / "ignored.txt") << "not a group";
  auto const all = load_corpus_dir(dir.path);
  REQUIRE(all.size() == 3);
  CHECK(all[0].name == "C1");
  CHECK(all[1].name == "C5^2:C3");
  CHECK(all[2].name == "S4");
  CHECK_THROWS_AS(load_corpus_dir(dir.path / "missing"), InputError);
}
