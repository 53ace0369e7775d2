#ifndef FORMATIONLAB_CORPUS_HPP_
#define FORMATIONLAB_CORPUS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "formationlab/group.hpp"

namespace formationlab {

  enum class Provenance { NamedFamily, SnSubgroup, UserFile };

  std::string_view to_string(Provenance p) noexcept;

  // A group given by cycle-notation generators.
  struct GroupSpec {
    std::string              name;
    std::size_t              degree = 1;
    std::vector<std::string> generator_texts;
    Provenance               provenance = Provenance::NamedFamily;

    friend bool operator==(GroupSpec const&, GroupSpec const&) = default;
  };

  std::vector<Permutation> parse_generators(GroupSpec const& spec);
  GroupPtr build_group(GroupSpec const& spec, std::size_t order_bound = default_order_bound());

  // Builders. All throw InputError on out-of-range parameters.
  GroupSpec cyclic(std::size_t n);                    // order n on n points
  GroupSpec dihedral(std::size_t n);                  // order 2n on n points, n >= 3
  GroupSpec symmetric(std::size_t n);                 // order n!
  GroupSpec alternating(std::size_t n);               // order n!/2 (1 for n < 3)
  GroupSpec quaternion_generalized(std::size_t m);    // dicyclic, order 4m, regular
  GroupSpec direct_product(GroupSpec const& a, GroupSpec const& b);

  // Rows of a 2x2 matrix over F_p.
  using Matrix2 = std::array<std::array<std::int64_t, 2>, 2>;

  // F_p^2 extended by the group generated by `linear`: translations plus
  // the given invertible matrices, acting on the p^2 vectors (point a*p+b+1
  // is the column vector (a, b)).
  GroupSpec affine_semidirect(std::uint64_t p, Matrix2 const& linear);
  GroupSpec affine_semidirect(std::uint64_t               p,
                              std::vector<Matrix2> const& linear,
                              std::string                 name = "");

  // Multiplicative order of an invertible matrix mod p.
  std::uint64_t matrix_order(std::uint64_t p, Matrix2 const& m);

  // One spec per subgroup of S_n (bitset-distinct, lattice order). n = 6
  // needs allow_six; n > 6 is rejected.
  std::vector<GroupSpec> subgroups_of_symmetric(std::size_t n, bool allow_six = false);

  // Group file format:
  //   # comment
  //   degree N
  //   name STRING        (optional)
  //   gen CYCLES         (one per generator)
  GroupSpec parse_group_text(std::string_view text, std::string const& source = "<text>");
  GroupSpec load_group(std::filesystem::path const& path);
  void      save_group(GroupSpec const& spec, std::filesystem::path const& path);
  std::string format_group_text(GroupSpec const& spec);

  // Every *.grp file in dir, ordered by file name.
  std::vector<GroupSpec> load_corpus_dir(std::filesystem::path const& dir);

  // The two affine witnesses: C5^2 : C3 (order 75) and C7^2 : S3 (order 294).
  GroupSpec affine_order_75();
  GroupSpec affine_order_294();

  std::vector<GroupSpec> named_families();

  struct CorpusOptions {
    // Subgroups of S_4 .. S_sn are included (sn < 4: none).
    std::size_t sn        = 5;
    bool        allow_six = false;
  };

  // Sn subgroups, then named families, then the affine witnesses.
  std::vector<GroupSpec> standard_corpus(CorpusOptions const& opts = {});

}  // namespace formationlab

#endif  // FORMATIONLAB_CORPUS_HPP_
