#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "formationlab/cli.hpp"
#include "formationlab/error.hpp"
#include "formationlab/harness.hpp"

using namespace formationlab;

namespace {
  std::string const kData = FORMATIONLAB_TEST_DATA;

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  std::vector<GroupSpec> abelian_corpus() {
    return {cyclic(1), cyclic(8), cyclic(30), direct_product(cyclic(2), cyclic(2)),
            direct_product(cyclic(3), cyclic(3)), direct_product(cyclic(4), cyclic(6))};
  }
}  // namespace

TEST_CASE("verify rows") {
  VerifyOptions opts;
  auto const    row = verify_one(alternating(4), opts);
  CHECK(row.status == RowStatus::Ok);
  CHECK(row.order == 12);
  REQUIRE(row.report.has_value());
  CHECK(row.report->consistent());

  opts.max_order = 10;
  auto const skip = verify_one(alternating(4), opts);
  CHECK(skip.status == RowStatus::ResourceSkip);
  CHECK_FALSE(skip.order.has_value());
  CHECK(skip.note.find("10") != std::string::npos);

  opts           = {};
  opts.fault_group = "A4";
  CHECK(verify_one(alternating(4), opts).status == RowStatus::Mismatch);
  CHECK(verify_one(symmetric(3), opts).status == RowStatus::Ok);
}

TEST_CASE("abelian corpus is true everywhere") {
  auto const rows = verify_corpus(abelian_corpus(), {});
  for (auto const& r : rows) {
    REQUIRE(r.report.has_value());
    for (auto const* p : {&r.report->supersoluble, &r.report->x, &r.report->b_subgroups,
                          &r.report->b_law, &r.report->lf_f, &r.report->sylow_tower}) {
      CHECK(p->value);
    }
  }
  auto const s = summarize(rows);
  CHECK(s.total == 6);
  CHECK(s.ok == 6);
}

TEST_CASE("reports are independent of the job count") {
  auto specs = subgroups_of_symmetric(4);
  specs.push_back(affine_order_75());
  VerifyOptions one, four;
  four.jobs = 4;
  std::ostringstream a, b, ja, jb;
  auto const         ra = verify_corpus(specs, one);
  auto const         rb = verify_corpus(specs, four);
  write_tsv(ra, a);
  write_tsv(rb, b);
  write_json(ra, ja);
  write_json(rb, jb);
  CHECK(a.str() == b.str());
  CHECK(ja.str() == jb.str());
}

TEST_CASE("TSV and JSON schema") {
  VerifyOptions opts;
  opts.max_order = 20;
  auto const rows = verify_corpus({symmetric(3), alternating(4), symmetric(4)}, opts);
  std::ostringstream tsv;
  write_tsv(rows, tsv);
  std::istringstream in(tsv.str());
  std::string        line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  REQUIRE(lines.size() == 4);
  CHECK(lines[0].rfind("name\tdegree\torder\tprovenance\tstatus\tU\tX", 0) == 0);
  for (auto const& l : lines) {
    CHECK(std::count(l.begin(), l.end(), '\t') == 17);
  }
  CHECK(lines[1].rfind("S3\t3\t6\tnamed-family\tok\t1\t1\t1\t1\t1\t1\t-", 0) == 0);
  CHECK(lines[2].rfind("A4\t4\t12\tnamed-family\tok\t0\t0\t0\t0\t0\t0\tchief factor", 0) == 0);
  CHECK(lines[3].rfind("S4\t4\tNA\tnamed-family\tresource-skip\tNA", 0) == 0);

  std::ostringstream js;
  write_json(rows, js);
  auto const j = nlohmann::json::parse(js.str());
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0]["name"] == "S3");
  CHECK(j[1]["status"] == "ok");
  CHECK(j[2]["status"] == "resource-skip");

  auto const one = nlohmann::json::parse(report_json(*rows[1].report, true));
  CHECK(one["order"] == 12);
}

TEST_CASE("every false predicate has a witness") {
  auto const rows = verify_corpus(subgroups_of_symmetric(4), {});
  for (auto const& r : rows) {
    auto const& rep = *r.report;
    for (auto const* p : {&rep.supersoluble, &rep.x, &rep.b_subgroups, &rep.b_law, &rep.lf_f,
                          &rep.sylow_tower}) {
      CHECK(p->value == p->witness.empty());
    }
  }
}

TEST_CASE("class names and witness search") {
  CHECK(parse_class_name("U") == ClassName::U);
  CHECK(parse_class_name("D") == ClassName::D);
  CHECK_THROWS_AS(parse_class_name("Z"), InputError);

  std::vector<GroupSpec> specs{affine_order_75(), symmetric(4), alternating(4), symmetric(3)};
  auto const dx = search_witness(specs, ClassName::D, ClassName::X, {});
  REQUIRE(dx.witness.has_value());
  CHECK(dx.witness->name == "C5^2:C3");

  auto const xu = search_witness(specs, ClassName::X, ClassName::U, {});
  CHECK_FALSE(xu.witness.has_value());
  CHECK(xu.scanned == 4);
  CHECK(xu.largest_order == 75);
}

TEST_CASE("cli exit codes") {
  auto const s3 = cli({"check", kData + "/s3.grp"});
  CHECK(s3.code == 0);
  CHECK(s3.out.find("theorem       consistent") != std::string::npos);

  auto const a4 = cli({"check", kData + "/a4.grp", "--json"});
  CHECK(a4.code == 0);
  auto const j = nlohmann::json::parse(a4.out);
  CHECK(j["name"] == "A4");

  auto const bad = cli({"check", kData + "/bad_point.grp"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("bad_point.grp:5") != std::string::npos);
  CHECK(cli({"check", kData + "/bad_key.grp"}).code == 2);
  CHECK(cli({"check", kData + "/nope.grp"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);

  ::setenv("FORMATIONLAB_MAX_ORDER", "10", 1);
  auto const big = cli({"check", kData + "/a4.grp"});
  ::unsetenv("FORMATIONLAB_MAX_ORDER");
  CHECK(big.code == 3);
  CHECK(big.err.find("10") != std::string::npos);

  auto const v = cli({"verify", "--corpus", kData + "/corpus"});
  CHECK(v.code == 0);
  CHECK(v.err.find("mismatches 0") != std::string::npos);

  auto const f = cli({"verify", "--corpus", kData + "/corpus", "--fault-group", "A4"});
  CHECK(f.code == 1);
  CHECK(f.err.find("MISMATCH A4") != std::string::npos);

  CHECK(cli({"verify", "--sn", "6"}).code == 2);
  CHECK(cli({"verify", "--jobs", "0"}).code == 2);
  CHECK(cli({"witness", "--in", "Q", "--notin", "U"}).code == 2);
}

TEST_CASE("cli brandl and lattice") {
  auto const t = cli({"brandl", kData + "/s3.grp", "--x", "(1 2)", "--y", "(1 2 3)"});
  CHECK(t.code == 0);
  CHECK(t.out == "u_1 = (1 3 2)\nu_2 = (1 2 3)\nu_3 = (1 2 3)\nu_4 = ()\nterminates at k = 4\n");

  auto const same = cli({"brandl", kData + "/s3.grp", "--x", "(1 2)", "--y", "(1 2)"});
  CHECK(same.out.find("terminates at k = 1") != std::string::npos);

  auto const cyc = cli({"brandl", kData + "/a4.grp", "--x", "(1 2 3)", "--y", "(1 2 4)"});
  CHECK(cyc.code == 0);
  CHECK(cyc.out.find("cycle detected (cycle length") != std::string::npos);

  CHECK(cli({"brandl", kData + "/a4.grp", "--x", "(1 2)", "--y", "(1 2 4)"}).code == 2);

  auto const lat = cli({"lattice", kData + "/a4.grp"});
  CHECK(lat.code == 0);
  CHECK(lat.out.find("subgroups 10\n") != std::string::npos);
  CHECK(lat.out.find("frattini order 1") != std::string::npos);
  CHECK(lat.out.find("minimal normal subgroups 1\n  order 4") != std::string::npos);
}

TEST_CASE("cli witness") {
  auto const dx = cli({"witness", "--in", "D", "--notin", "X", "--corpus", kData + "/corpus"});
  CHECK(dx.code == 0);
  CHECK(dx.out.find("C5^2:C3") != std::string::npos);

  auto const ux = cli({"witness", "--in", "U", "--notin", "X", "--corpus", kData + "/corpus"});
  CHECK(ux.code == 0);
  CHECK(ux.out.find("none found") != std::string::npos);

  // D \ U is a legitimate difference
  auto const dx_rev = cli({"witness", "--in", "D", "--notin", "U", "--corpus", kData + "/corpus"});
  CHECK(dx_rev.code == 0);
}
