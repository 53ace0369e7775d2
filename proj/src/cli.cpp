#include "formationlab/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "formationlab/corpus.hpp"
#include "formationlab/error.hpp"
#include "formationlab/harness.hpp"
#include "formationlab/lattice.hpp"
#include "formationlab/theorem.hpp"

namespace formationlab {

  namespace {
    struct CorpusFlags {
      std::string corpus = "standard";
      std::size_t sn     = 5;
      bool        six    = false;
    };

    std::vector<GroupSpec> load_corpus(CorpusFlags const& f) {
      if (f.corpus == "standard") {
        return standard_corpus({f.sn, f.six});
      }
      return load_corpus_dir(f.corpus);
    }

    void add_corpus_flags(CLI::App* cmd, CorpusFlags& f) {
      cmd->add_option("--corpus", f.corpus, "\"standard\" or a directory of .grp files");
      cmd->add_option("--sn", f.sn, "include subgroups of S_4 .. S_N (standard corpus)")
          ->check(CLI::Range(0, 6));
      cmd->add_flag("--allow-s6", f.six, "permit --sn 6");
    }

    void print_predicate(std::ostream& out, char const* label, PredicateResult const& p) {
      out << std::left << std::setw(14) << label << (p.value ? "true" : "false");
      if (!p.value && !p.witness.empty()) {
        out << "   " << p.witness;
      }
      out << '\n';
    }

    void print_report(std::ostream& out, ClassReport const& r) {
      out << std::left << std::setw(14) << "group" << r.name << '\n';
      out << std::setw(14) << "degree" << r.degree << '\n';
      out << std::setw(14) << "order" << r.order << '\n';
      print_predicate(out, "U", r.supersoluble);
      print_predicate(out, "X", r.x);
      print_predicate(out, "B_subgroups", r.b_subgroups);
      print_predicate(out, "B_law", r.b_law);
      print_predicate(out, "LF_f", r.lf_f);
      print_predicate(out, "D", r.sylow_tower);
      out << std::setw(14) << "theorem" << (r.consistent() ? "consistent" : "MISMATCH") << '\n';
    }

    Permutation element_arg(GroupTable const& g, std::string const& text, char const* which) {
      Permutation p = parse_cycles(text, g.degree());
      if (!g.index_of(p)) {
        throw InputError(std::string(which) + " = " + format_cycles(p)
                         + " is not an element of the group");
      }
      return p;
    }

    int cmd_check(std::string const& file, bool json, std::ostream& out) {
      GroupSpec const spec = load_group(file);
      ClassReport const r  = classify(build_group(spec), spec.name);
      if (json) {
        out << report_json(r, true) << '\n';
      } else {
        print_report(out, r);
      }
      return kExitOk;
    }

    int cmd_brandl(std::string const& file,
                   std::string const& xs,
                   std::string const& ys,
                   std::ostream&      out) {
      GroupSpec const spec = load_group(file);
      GroupPtr const  g    = build_group(spec);
      Permutation const x  = element_arg(*g, xs, "x");
      Permutation const y  = element_arg(*g, ys, "y");
      BrandlTrace const t  = brandl_terminates(x, y, exponent(g));
      for (std::size_t k = 0; k < t.steps.size(); ++k) {
        out << "u_" << (k + 1) << " = " << format_cycles(t.steps[k]) << '\n';
      }
      if (t.terminated) {
        out << "terminates at k = " << *t.k_final << '\n';
      } else {
        out << "cycle detected (cycle length " << t.cycle_length << ")\n";
      }
      return kExitOk;
    }

    int cmd_lattice(std::string const& file, std::ostream& out) {
      GroupSpec const spec = load_group(file);
      Lattice const   lat  = Lattice::build(build_group(spec));
      std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_order;
      for (std::size_t i = 0; i < lat.size(); ++i) {
        auto& e = by_order[lat.at(i).order()];
        ++e.first;
        e.second += lat.is_normal(i) ? 1 : 0;
      }
      auto const normals  = normal_subgroups(lat);
      auto const maximals = maximal_subgroups(lat);
      auto const minimal  = minimal_normal_subgroups(lat);
      Subgroup const phi  = frattini(lat);
      out << "group " << spec.name << " (order " << lat.top().order() << ")\n";
      out << "subgroups " << lat.size() << '\n';
      out << "order\tcount\tnormal\n";
      for (auto const& [order, counts] : by_order) {
        out << order << '\t' << counts.first << '\t' << counts.second << '\n';
      }
      out << "normal subgroups " << normals.size() << '\n';
      out << "maximal subgroups " << maximals.size() << '\n';
      out << "frattini order " << phi.order() << ' ' << describe(phi) << '\n';
      out << "minimal normal subgroups " << minimal.size() << '\n';
      for (std::size_t i : minimal) {
        out << "  order " << lat.at(i).order() << ' ' << describe(lat.at(i)) << '\n';
      }
      return kExitOk;
    }

    struct VerifyFlags {
      CorpusFlags corpus;
      std::size_t max_order = default_order_bound();
      std::size_t jobs      = 1;
      std::string report;
      std::string timings;
      bool        json = false;
      std::string fault_group;
    };

    int cmd_verify(VerifyFlags const& f, std::ostream& out, std::ostream& err) {
      auto const    specs = load_corpus(f.corpus);
      VerifyOptions opts;
      opts.max_order   = f.max_order;
      opts.jobs        = f.jobs;
      opts.fault_group = f.fault_group;
      auto const rows  = verify_corpus(specs, opts);

      std::ostringstream body;
      if (f.json) {
        write_json(rows, body);
      } else {
        write_tsv(rows, body);
      }
      if (f.report.empty()) {
        out << body.str();
      } else {
        std::ofstream file(f.report, std::ios::binary);
        if (!file || !(file << body.str())) {
          throw InputError("cannot write report " + f.report);
        }
      }
      if (!f.timings.empty()) {
        std::ofstream file(f.timings, std::ios::binary);
        write_timings(rows, file);
      }
      auto const s = summarize(rows);
      std::ostream& summary = f.report.empty() ? err : out;
      summary << "groups " << s.total << ", ok " << s.ok << ", mismatches " << s.mismatches
              << ", resource-skip " << s.skipped << '\n';
      for (auto const& r : rows) {
        if (r.status == RowStatus::Mismatch) {
          summary << "MISMATCH " << r.name << ": X=" << r.report->x.value
                  << " B_subgroups=" << r.report->b_subgroups.value
                  << " B_law=" << r.report->b_law.value << " LF_f=" << r.report->lf_f.value
                  << '\n';
        }
      }
      return s.mismatches == 0 ? kExitOk : kExitMismatch;
    }

    int cmd_witness(std::string const& in_text,
                    std::string const& notin_text,
                    CorpusFlags const& corpus,
                    std::size_t        max_order,
                    std::ostream&      out) {
      ClassName const in    = parse_class_name(in_text);
      ClassName const notin = parse_class_name(notin_text);
      VerifyOptions   opts;
      opts.max_order       = max_order;
      auto const specs     = load_corpus(corpus);
      auto const result    = search_witness(specs, in, notin, opts);
      if (!result.witness) {
        out << "none found in " << in_text << " \\ " << notin_text << " among "
            << result.scanned << " groups up to order " << result.largest_order
            << " (order bound " << max_order << ")\n";
        return kExitOk;
      }
      auto const& r = *result.witness->report;
      out << "witness for " << in_text << " \\ " << notin_text << ": " << r.name << " (order "
          << r.order << ")\n";
      print_report(out, r);
      // U is contained in X and X in D
      if (static_cast<int>(in) < static_cast<int>(notin)) {
        out << "INCLUSION VIOLATION: " << in_text << " is not contained in " << notin_text
            << '\n';
        return kExitMismatch;
      }
      return kExitOk;
    }
  }  // namespace

  int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"formationlab: finite-group class membership and verification harness",
                 "formationlab"};
    app.require_subcommand(1);

    std::string file;
    bool        json = false;
    auto*       check = app.add_subcommand("check", "classify one group file");
    check->add_option("file", file, "group file")->required();
    check->add_flag("--json", json, "JSON output");

    std::string xs, ys;
    auto*       brandl = app.add_subcommand("brandl", "print the Brandl word sequence");
    brandl->add_option("file", file, "group file")->required();
    brandl->add_option("--x", xs, "x in cycle notation")->required();
    brandl->add_option("--y", ys, "y in cycle notation")->required();

    VerifyFlags vf;
    auto*       verify = app.add_subcommand("verify", "classify a corpus and check the equivalence");
    add_corpus_flags(verify, vf.corpus);
    verify->add_option("--max-order", vf.max_order, "group order bound")->check(CLI::PositiveNumber);
    verify->add_option("--jobs", vf.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--report", vf.report, "write the report here instead of stdout");
    verify->add_option("--timings", vf.timings, "write per-predicate timings (TSV) here");
    verify->add_flag("--json", vf.json, "JSON report instead of TSV");
    verify->add_option("--fault-group", vf.fault_group, "test hook: negate LF_f for this group")
        ->group("");

    std::string in_text, notin_text;
    CorpusFlags wf;
    std::size_t w_max_order = default_order_bound();
    auto*       witness = app.add_subcommand("witness", "smallest group in one class but not another");
    witness->add_option("--in", in_text, "U, X or D")->required();
    witness->add_option("--notin", notin_text, "U, X or D")->required();
    add_corpus_flags(witness, wf);
    witness->add_option("--max-order", w_max_order, "group order bound")->check(CLI::PositiveNumber);

    auto* lattice = app.add_subcommand("lattice", "subgroup census of one group file");
    lattice->add_option("file", file, "group file")->required();

    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitInput;
    }

    try {
      if (*check) {
        return cmd_check(file, json, out);
      }
      if (*brandl) {
        return cmd_brandl(file, xs, ys, out);
      }
      if (*verify) {
        if (vf.corpus.sn == 6 && !vf.corpus.six) {
          throw InputError("--sn 6 requires --allow-s6");
        }
        return cmd_verify(vf, out, err);
      }
      if (*witness) {
        if (wf.sn == 6 && !wf.six) {
          throw InputError("--sn 6 requires --allow-s6");
        }
        return cmd_witness(in_text, notin_text, wf, w_max_order, out);
      }
      if (*lattice) {
        return cmd_lattice(file, out);
      }
    } catch (InputError const& e) {
      err << "input error: " << e.what() << '\n';
      return kExitInput;
    } catch (ResourceError const& e) {
      err << "resource bound: " << e.what() << '\n';
      return kExitResource;
    }
    return kExitInput;
  }

}  // namespace formationlab
