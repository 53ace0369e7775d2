#ifndef FORMATIONLAB_HARNESS_HPP_
#define FORMATIONLAB_HARNESS_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "formationlab/corpus.hpp"
#include "formationlab/theorem.hpp"

namespace formationlab {

  enum class RowStatus { Ok, Mismatch, ResourceSkip };

  std::string_view to_string(RowStatus s) noexcept;

  struct VerificationRow {
    std::string                name;
    std::size_t                degree = 0;
    std::optional<std::size_t> order;  // unknown when the order bound was hit
    Provenance                 provenance = Provenance::NamedFamily;
    RowStatus                  status     = RowStatus::Ok;
    std::optional<ClassReport> report;    // absent for resource-skip rows
    std::string                note;
  };

  struct VerifyOptions {
    std::size_t     max_order = default_order_bound();
    std::size_t     jobs      = 1;
    ClassifyOptions classify;
    // Test hook: negate LF(f) for the group with this name.
    std::string fault_group;
  };

  // Classifies one spec; ResourceError becomes a resource-skip row.
  VerificationRow verify_one(GroupSpec const& spec, VerifyOptions const& opts);

  // Rows come back in corpus order whatever the number of jobs.
  std::vector<VerificationRow> verify_corpus(std::vector<GroupSpec> const& specs,
                                             VerifyOptions const&          opts);

  struct VerifySummary {
    std::size_t total      = 0;
    std::size_t ok         = 0;
    std::size_t mismatches = 0;
    std::size_t skipped    = 0;
  };

  VerifySummary summarize(std::vector<VerificationRow> const& rows);

  // Report schemas. Neither contains timings, so reports are reproducible.
  void write_tsv(std::vector<VerificationRow> const& rows, std::ostream& out);
  void write_json(std::vector<VerificationRow> const& rows, std::ostream& out);
  // name, lattice and per-predicate seconds; tab separated.
  void write_timings(std::vector<VerificationRow> const& rows, std::ostream& out);

  // JSON object for one report; `timings` adds a seconds field per predicate.
  std::string report_json(ClassReport const& r, bool timings, int indent = 2);

  enum class ClassName { U, X, D };

  // "U", "X" or "D"; throws InputError otherwise.
  ClassName parse_class_name(std::string_view text);
  bool      member_of(ClassReport const& r, ClassName c) noexcept;

  struct WitnessSearch {
    std::optional<VerificationRow> witness;
    std::size_t                    scanned       = 0;
    std::size_t                    largest_order = 0;  // among scanned groups
  };

  // Scans specs by increasing order (ties keep corpus order) and stops at the
  // first group in `in` and not in `notin`.
  WitnessSearch search_witness(std::vector<GroupSpec> const& specs,
                               ClassName                     in,
                               ClassName                     notin,
                               VerifyOptions const&          opts);

}  // namespace formationlab

#endif  // FORMATIONLAB_HARNESS_HPP_
