#include "formationlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "json.hpp"

#include "formationlab/error.hpp"

namespace formationlab {

  using ordered_json = nlohmann::ordered_json;

  std::string_view to_string(RowStatus s) noexcept {
    switch (s) {
      case RowStatus::Ok:
        return "ok";
      case RowStatus::Mismatch:
        return "mismatch";
      case RowStatus::ResourceSkip:
        return "resource-skip";
    }
    return "unknown";
  }

  VerificationRow verify_one(GroupSpec const& spec, VerifyOptions const& opts) {
    VerificationRow row;
    row.name       = spec.name;
    row.degree     = spec.degree;
    row.provenance = spec.provenance;
    try {
      GroupPtr const g = build_group(spec, opts.max_order);
      row.order        = g->order();
      row.report       = classify(g, spec.name, opts.classify);
    } catch (ResourceError const& e) {
      row.status = RowStatus::ResourceSkip;
      row.note   = e.what();
      return row;
    }
    if (!opts.fault_group.empty() && spec.name == opts.fault_group) {
      row.report->lf_f.value   = !row.report->lf_f.value;
      row.report->lf_f.witness = row.report->lf_f.value ? "" : "injected fault";
    }
    if (!row.report->consistent()) {
      row.status = RowStatus::Mismatch;
      row.note   = "theorem predicates disagree";
    }
    return row;
  }

  std::vector<VerificationRow> verify_corpus(std::vector<GroupSpec> const& specs,
                                             VerifyOptions const&          opts) {
    std::vector<VerificationRow> rows(specs.size());
    std::size_t const jobs = std::max<std::size_t>(1, std::min(opts.jobs, specs.size()));
    if (jobs == 1) {
      for (std::size_t i = 0; i < specs.size(); ++i) {
        rows[i] = verify_one(specs[i], opts);
      }
      return rows;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    auto worker = [&] {
      while (true) {
        std::size_t const i = next.fetch_add(1);
        if (i >= specs.size()) {
          return;
        }
        try {
          rows[i] = verify_one(specs[i], opts);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
    return rows;
  }

  VerifySummary summarize(std::vector<VerificationRow> const& rows) {
    VerifySummary s;
    s.total = rows.size();
    for (auto const& r : rows) {
      switch (r.status) {
        case RowStatus::Ok:
          ++s.ok;
          break;
        case RowStatus::Mismatch:
          ++s.mismatches;
          break;
        case RowStatus::ResourceSkip:
          ++s.skipped;
          break;
      }
    }
    return s;
  }

  namespace {
    struct Column {
      char const*     name;
      PredicateResult ClassReport::*field;
    };

    constexpr Column kColumns[] = {
        {"U", &ClassReport::supersoluble},
        {"X", &ClassReport::x},
        {"B_subgroups", &ClassReport::b_subgroups},
        {"B_law", &ClassReport::b_law},
        {"LF_f", &ClassReport::lf_f},
        {"D", &ClassReport::sylow_tower},
    };

    std::string clean(std::string s) {
      std::replace(s.begin(), s.end(), '\t', ' ');
      std::replace(s.begin(), s.end(), '\n', ' ');
      return s;
    }
  }  // namespace

  void write_tsv(std::vector<VerificationRow> const& rows, std::ostream& out) {
    out << "name\tdegree\torder\tprovenance\tstatus";
    for (auto const& c : kColumns) {
      out << '\t' << c.name;
    }
    for (auto const& c : kColumns) {
      out << "\twitness_" << c.name;
    }
    out << "\tnote\n";
    for (auto const& r : rows) {
      out << clean(r.name) << '\t' << r.degree << '\t'
          << (r.order ? std::to_string(*r.order) : "NA") << '\t' << to_string(r.provenance)
          << '\t' << to_string(r.status);
      for (auto const& c : kColumns) {
        out << '\t' << (r.report ? ((*r.report).*c.field).value ? "1" : "0" : "NA");
      }
      for (auto const& c : kColumns) {
        std::string w = r.report ? ((*r.report).*c.field).witness : "";
        out << '\t' << (w.empty() ? "-" : clean(w));
      }
      out << '\t' << (r.note.empty() ? "-" : clean(r.note)) << '\n';
    }
  }

  namespace {
    ordered_json report_object(ClassReport const& r, bool timings) {
      ordered_json j;
      j["name"]   = r.name;
      j["degree"] = r.degree;
      j["order"]  = r.order;
      ordered_json preds;
      for (auto const& c : kColumns) {
        auto const&  p = r.*c.field;
        ordered_json e;
        e["value"]   = p.value;
        e["witness"] = p.witness.empty() ? nullptr : ordered_json(p.witness);
        if (timings) {
          e["seconds"] = p.seconds;
        }
        preds[c.name] = e;
      }
      j["predicates"] = preds;
      j["consistent"] = r.consistent();
      if (timings) {
        j["lattice_seconds"] = r.lattice_seconds;
      }
      return j;
    }
  }  // namespace

  std::string report_json(ClassReport const& r, bool timings, int indent) {
    return report_object(r, timings).dump(indent);
  }

  void write_json(std::vector<VerificationRow> const& rows, std::ostream& out) {
    ordered_json arr = ordered_json::array();
    for (auto const& r : rows) {
      ordered_json j;
      j["name"]       = r.name;
      j["degree"]     = r.degree;
      j["order"]      = r.order ? ordered_json(*r.order) : ordered_json(nullptr);
      j["provenance"] = to_string(r.provenance);
      j["status"]     = to_string(r.status);
      j["report"]     = r.report ? report_object(*r.report, false) : ordered_json(nullptr);
      j["note"]       = r.note;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
  }

  void write_timings(std::vector<VerificationRow> const& rows, std::ostream& out) {
    out << "name\tlattice";
    for (auto const& c : kColumns) {
      out << '\t' << c.name;
    }
    out << '\n';
    for (auto const& r : rows) {
      out << clean(r.name);
      if (!r.report) {
        out << "\tNA\tNA\tNA\tNA\tNA\tNA\tNA\n";
        continue;
      }
      out << '\t' << r.report->lattice_seconds;
      for (auto const& c : kColumns) {
        out << '\t' << ((*r.report).*c.field).seconds;
      }
      out << '\n';
    }
  }

  ClassName parse_class_name(std::string_view text) {
    if (text == "U") {
      return ClassName::U;
    }
    if (text == "X") {
      return ClassName::X;
    }
    if (text == "D") {
      return ClassName::D;
    }
    throw InputError("unknown class \"" + std::string(text) + "\" (expected U, X or D)");
  }

  bool member_of(ClassReport const& r, ClassName c) noexcept {
    switch (c) {
      case ClassName::U:
        return r.supersoluble.value;
      case ClassName::X:
        return r.x.value;
      case ClassName::D:
        return r.sylow_tower.value;
    }
    return false;
  }

  WitnessSearch search_witness(std::vector<GroupSpec> const& specs,
                               ClassName                     in,
                               ClassName                     notin,
                               VerifyOptions const&          opts) {
    struct Entry {
      std::size_t index;
      std::size_t order;
    };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      try {
        entries.push_back({i, build_group(specs[i], opts.max_order)->order()});
      } catch (ResourceError const&) {
        // beyond the bound: not scanned
      }
    }
    std::stable_sort(entries.begin(), entries.end(), [](Entry const& a, Entry const& b) {
      return a.order < b.order;
    });
    WitnessSearch result;
    for (auto const& e : entries) {
      VerificationRow row = verify_one(specs[e.index], opts);
      if (!row.report) {
        continue;
      }
      ++result.scanned;
      result.largest_order = std::max(result.largest_order, e.order);
      if (member_of(*row.report, in) && !member_of(*row.report, notin)) {
        result.witness = std::move(row);
        return result;
      }
    }
    return result;
  }

}  // namespace formationlab
