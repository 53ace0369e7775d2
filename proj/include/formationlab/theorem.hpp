#ifndef FORMATIONLAB_THEOREM_HPP_
#define FORMATIONLAB_THEOREM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "formationlab/group.hpp"
#include "formationlab/lattice.hpp"
#include "formationlab/perm.hpp"

namespace formationlab {

  // How products are read when evaluating the Brandl words. LeftToRight is
  // the library convention (compose(a, b) = a then b); RightToLeft swaps
  // every product, which turns [a, b] into b a b^-1 a^-1.
  enum class Convention { LeftToRight, RightToLeft };

  ////////////////////////////////////////////////////////////////////////
  // Brandl words
  //
  //   u_1 = [x, y],   u_{k+1} = u_k^{-k} [u_k, y]   for every k >= 1.
  //
  // Since u_k^{-k} only depends on k modulo the exponent e of the ambient
  // group, the pair (u_k, k mod e) determines the rest of the sequence; a
  // repeated pair without reaching 1 proves that 1 is never reached.
  ////////////////////////////////////////////////////////////////////////

  struct BrandlState {
    Permutation   value;  // u_step
    std::uint64_t step;
    Permutation   y;
  };

  BrandlState brandl_start(Permutation const& x,
                           Permutation const& y,
                           Convention         conv = Convention::LeftToRight);
  BrandlState brandl_next(BrandlState const& s,
                          Convention         conv = Convention::LeftToRight);

  struct BrandlTrace {
    bool                         terminated     = false;
    bool                         cycle_detected = false;
    std::vector<Permutation>     steps;  // u_1, u_2, ...
    std::optional<std::uint64_t> k_final;
    // Period of the repeating (value, step mod e) cycle, when detected.
    std::uint64_t cycle_length = 0;
  };

  inline constexpr std::uint64_t kDefaultBrandlStepCap = 10'000'000;

  // Throws InternalError if max_steps pass without identity or a repeat.
  BrandlTrace brandl_terminates(Permutation const& x,
                                Permutation const& y,
                                std::uint64_t      exponent,
                                Convention         conv      = Convention::LeftToRight,
                                std::uint64_t      max_steps = kDefaultBrandlStepCap);

  // Same decision on element indices of a table; no trace is kept.
  struct BrandlOutcome {
    bool          terminated   = false;
    std::uint64_t k_final      = 0;
    std::uint64_t cycle_length = 0;
  };

  BrandlOutcome brandl_outcome(GroupTable const& t,
                               Elem              x,
                               Elem              y,
                               std::uint64_t     exponent,
                               Convention        conv = Convention::LeftToRight);

  ////////////////////////////////////////////////////////////////////////
  // Class membership
  ////////////////////////////////////////////////////////////////////////

  struct PSubnormality {
    bool                       value = false;
    std::vector<std::size_t>   chain;    // lattice ids, h first, top last
    std::vector<std::uint64_t> indices;  // prime indices along the chain
  };

  // h = top, or a chain h = H_0 < H_1 < ... < H_n = top with every index
  // |H_i : H_{i-1}| prime.
  PSubnormality is_p_subnormal(Lattice const& lat, Subgroup const& h);

  // Every false value carries a witness naming what failed.
  struct PredicateResult {
    bool        value = true;
    std::string witness;
    double      seconds = 0.0;
  };

  // Every nontrivial cyclic subgroup of prime-power order is P-subnormal.
  PredicateResult condition_X(Lattice const& lat);
  // Every subgroup with nilpotent derived subgroup is supersoluble.
  PredicateResult condition_B_subgroups(Lattice const& lat);
  // Every ordered pair (x, y) reaches u_k = 1; the witness is the least
  // failing pair in element-index order.
  PredicateResult condition_B_law(Subgroup const& g,
                                  Convention      conv = Convention::LeftToRight);
  // For every chief factor H/K and prime p dividing |H/K|, G/C_G(H/K) lies
  // in f(p).
  PredicateResult condition_LF_f(Lattice const& lat);

  PredicateResult supersoluble_with_witness(Lattice const& lat);
  PredicateResult sylow_tower_with_witness(Lattice const& lat);

  struct ClassReport {
    std::string     name;
    std::size_t     degree = 0;
    std::size_t     order  = 0;
    PredicateResult supersoluble;   // U
    PredicateResult x;              // X
    PredicateResult b_subgroups;    // B, subgroup form
    PredicateResult b_law;          // B, word law
    PredicateResult lf_f;           // LF(f)
    PredicateResult sylow_tower;    // D
    double          lattice_seconds = 0.0;

    // The four theorem predicates agree.
    bool consistent() const noexcept {
      return x.value == b_subgroups.value && x.value == b_law.value
             && x.value == lf_f.value;
    }
  };

  struct ClassifyOptions {
    LatticeOptions lattice;
    Convention     convention = Convention::LeftToRight;
  };

  ClassReport classify(GroupPtr const&        g,
                       std::string            name,
                       ClassifyOptions const& opts = {});

}  // namespace formationlab

#endif  // FORMATIONLAB_THEOREM_HPP_
