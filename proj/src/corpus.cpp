#include "formationlab/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "formationlab/error.hpp"
#include "formationlab/lattice.hpp"
#include "formationlab/numbers.hpp"

namespace formationlab {

  std::string_view to_string(Provenance p) noexcept {
    switch (p) {
      case Provenance::NamedFamily:
        return "named-family";
      case Provenance::SnSubgroup:
        return "sn-subgroup";
      case Provenance::UserFile:
        return "user-file";
    }
    return "unknown";
  }

  std::vector<Permutation> parse_generators(GroupSpec const& spec) {
    std::vector<Permutation> gens;
    for (auto const& text : spec.generator_texts) {
      gens.push_back(parse_cycles(text, spec.degree));
    }
    return gens;
  }

  GroupPtr build_group(GroupSpec const& spec, std::size_t order_bound) {
    return close_generators(spec.degree, parse_generators(spec), order_bound);
  }

  namespace {
    std::string cycle_text(std::vector<std::uint32_t> const& images) {
      return format_cycles(Permutation::from_images(images));
    }

    // (1 2 ... n) shifted to points first..first+len-1
    std::string long_cycle(std::size_t first, std::size_t len) {
      std::string s = "(";
      for (std::size_t i = 0; i < len; ++i) {
        if (i > 0) {
          s += ' ';
        }
        s += std::to_string(first + i);
      }
      return s + ")";
    }

    std::int64_t mod(std::int64_t a, std::int64_t p) {
      return ((a % p) + p) % p;
    }

    Matrix2 mat_mul(Matrix2 const& a, Matrix2 const& b, std::int64_t p) {
      Matrix2 c{};
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          c[i][j] = mod(a[i][0] * b[0][j] + a[i][1] * b[1][j], p);
        }
      }
      return c;
    }
  }  // namespace

  GroupSpec cyclic(std::size_t n) {
    if (n == 0) {
      throw InputError("cyclic: n must be positive");
    }
    GroupSpec s{"C" + std::to_string(n), n, {}, Provenance::NamedFamily};
    if (n > 1) {
      s.generator_texts.push_back(long_cycle(1, n));
    }
    return s;
  }

  GroupSpec dihedral(std::size_t n) {
    if (n < 3) {
      throw InputError("dihedral: n must be at least 3");
    }
    std::vector<std::uint32_t> reflection(n);
    for (std::size_t i = 0; i < n; ++i) {
      reflection[i] = static_cast<std::uint32_t>(n - i);
    }
    return {"D" + std::to_string(2 * n),
            n,
            {long_cycle(1, n), cycle_text(reflection)},
            Provenance::NamedFamily};
  }

  GroupSpec symmetric(std::size_t n) {
    if (n == 0) {
      throw InputError("symmetric: n must be positive");
    }
    GroupSpec s{"S" + std::to_string(n), n, {}, Provenance::NamedFamily};
    if (n > 1) {
      s.generator_texts.push_back(long_cycle(1, n));
    }
    if (n > 2) {
      s.generator_texts.emplace_back("(1 2)");
    }
    return s;
  }

  GroupSpec alternating(std::size_t n) {
    if (n == 0) {
      throw InputError("alternating: n must be positive");
    }
    GroupSpec s{"A" + std::to_string(n), n, {}, Provenance::NamedFamily};
    if (n >= 3) {
      s.generator_texts.emplace_back("(1 2 3)");
    }
    if (n >= 4) {
      s.generator_texts.push_back(n % 2 == 1 ? long_cycle(1, n) : long_cycle(2, n - 1));
    }
    return s;
  }

  GroupSpec quaternion_generalized(std::size_t m) {
    if (m == 0) {
      throw InputError("quaternion_generalized: m must be positive");
    }
    // Right regular action on a^i x^j, point i + 2m j + 1, with
    // a^{2m} = 1, x^2 = a^m, x a = a^-1 x.
    std::size_t const          n2 = 2 * m;
    std::vector<std::uint32_t> ra(2 * n2), rx(2 * n2);
    auto pt = [&](std::size_t i, std::size_t j) {
      return static_cast<std::uint32_t>(i % n2 + n2 * j + 1);
    };
    for (std::size_t i = 0; i < n2; ++i) {
      ra[i]      = pt(i + 1, 0);
      ra[n2 + i] = pt(i + n2 - 1, 1);
      rx[i]      = pt(i, 1);
      rx[n2 + i] = pt(i + m, 0);
    }
    return {"Q" + std::to_string(4 * m),
            2 * n2,
            {cycle_text(ra), cycle_text(rx)},
            Provenance::NamedFamily};
  }

  GroupSpec direct_product(GroupSpec const& a, GroupSpec const& b) {
    GroupSpec s{a.name + "x" + b.name, a.degree + b.degree, {}, Provenance::NamedFamily};
    for (auto const& g : parse_generators(a)) {
      auto img = g.images();
      for (std::size_t i = a.degree; i < s.degree; ++i) {
        img.push_back(static_cast<std::uint32_t>(i + 1));
      }
      s.generator_texts.push_back(cycle_text(img));
    }
    for (auto const& g : parse_generators(b)) {
      std::vector<std::uint32_t> img(a.degree);
      std::iota(img.begin(), img.end(), 1u);
      for (auto v : g.images()) {
        img.push_back(static_cast<std::uint32_t>(v + a.degree));
      }
      s.generator_texts.push_back(cycle_text(img));
    }
    return s;
  }

  std::uint64_t matrix_order(std::uint64_t p, Matrix2 const& m) {
    auto const pp = static_cast<std::int64_t>(p);
    Matrix2    a{};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        a[i][j] = mod(m[i][j], pp);
      }
    }
    if (mod(a[0][0] * a[1][1] - a[0][1] * a[1][0], pp) == 0) {
      throw InputError("matrix is singular mod " + std::to_string(p));
    }
    Matrix2 const id{{{1, 0}, {0, 1}}};
    Matrix2       x = a;
    std::uint64_t k = 1;
    while (x != id) {
      x = mat_mul(x, a, pp);
      ++k;
    }
    return k;
  }

  GroupSpec affine_semidirect(std::uint64_t p, Matrix2 const& linear) {
    return affine_semidirect(p, std::vector<Matrix2>{linear});
  }

  GroupSpec affine_semidirect(std::uint64_t p, std::vector<Matrix2> const& linear, std::string name) {
    if (!is_prime(p) || p > 43) {
      throw InputError("affine_semidirect: p must be a prime <= 43");
    }
    auto const  pp = static_cast<std::int64_t>(p);
    std::size_t const n  = p * p;
    auto pt = [&](std::int64_t a, std::int64_t b) {
      return static_cast<std::uint32_t>(mod(a, pp) * pp + mod(b, pp) + 1);
    };
    std::vector<std::uint32_t> t1(n), t2(n);
    for (std::int64_t a = 0; a < pp; ++a) {
      for (std::int64_t b = 0; b < pp; ++b) {
        t1[pt(a, b) - 1] = pt(a + 1, b);
        t2[pt(a, b) - 1] = pt(a, b + 1);
      }
    }
    GroupSpec s{name, n, {cycle_text(t1), cycle_text(t2)}, Provenance::NamedFamily};
    std::string suffix;
    for (auto const& m : linear) {
      auto const ord = matrix_order(p, m);  // rejects singular matrices
      suffix += (suffix.empty() ? "" : ",") + std::to_string(ord);
      std::vector<std::uint32_t> img(n);
      for (std::int64_t a = 0; a < pp; ++a) {
        for (std::int64_t b = 0; b < pp; ++b) {
          img[pt(a, b) - 1] = pt(m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b);
        }
      }
      s.generator_texts.push_back(cycle_text(img));
    }
    if (s.name.empty()) {
      s.name = "AGL" + std::to_string(p) + "[" + suffix + "]";
    }
    return s;
  }

  GroupSpec affine_order_75() {
    return affine_semidirect(5, {Matrix2{{{0, -1}, {1, -1}}}}, "C5^2:C3");
  }

  GroupSpec affine_order_294() {
    // <A, S> = S3 with S A S = A^-1; faithful and irreducible on F_7^2
    return affine_semidirect(
        7, {Matrix2{{{0, -1}, {1, -1}}}, Matrix2{{{0, 1}, {1, 0}}}}, "C7^2:S3");
  }

  std::vector<GroupSpec> subgroups_of_symmetric(std::size_t n, bool allow_six) {
    if (n == 0 || n > 6 || (n == 6 && !allow_six)) {
      throw InputError("subgroups_of_symmetric: n must be in 1..5 (6 with the explicit flag)");
    }
    GroupPtr const g   = build_group(symmetric(n), 1000);
    Lattice const  lat = Lattice::build(g);
    std::vector<GroupSpec> out;
    std::size_t const      width = std::to_string(lat.size()).size();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      Subgroup const& s  = lat.at(i);
      std::string     id = std::to_string(i);
      id.insert(0, width - id.size(), '0');
      GroupSpec spec{"S" + std::to_string(n) + "/" + id + "_o" + std::to_string(s.order()),
                     n, {}, Provenance::SnSubgroup};
      for (Elem x : s.generators()) {
        spec.generator_texts.push_back(format_cycles(g->element(x)));
      }
      out.push_back(std::move(spec));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Files
  ////////////////////////////////////////////////////////////////////////

  GroupSpec parse_group_text(std::string_view text, std::string const& source) {
    GroupSpec   spec;
    spec.provenance = Provenance::UserFile;
    bool        have_degree = false;
    std::size_t line_no     = 0;
    std::size_t pos         = 0;
    auto fail = [&](std::string const& msg) {
      throw InputError(source + ":" + std::to_string(line_no) + ": " + msg);
    };
    while (pos <= text.size()) {
      auto const  end  = std::min(text.find('\n', pos), text.size());
      std::string line(text.substr(pos, end - pos));
      pos = end + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      auto const first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      line.erase(0, first);
      auto const  space   = line.find_first_of(" \t");
      std::string keyword = line.substr(0, space);
      std::string rest;
      if (space != std::string::npos) {
        rest = line.substr(line.find_first_not_of(" \t", space) == std::string::npos
                               ? line.size()
                               : line.find_first_not_of(" \t", space));
        while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) {
          rest.pop_back();
        }
      }
      if (!have_degree) {
        if (keyword != "degree") {
          fail("expected \"degree N\" as the first non-comment line");
        }
        std::size_t consumed = 0;
        unsigned long long v = 0;
        try {
          v = std::stoull(rest, &consumed);
        } catch (std::exception const&) {
          fail("invalid degree \"" + rest + "\"");
        }
        if (consumed != rest.size() || v == 0) {
          fail("invalid degree \"" + rest + "\"");
        }
        spec.degree = static_cast<std::size_t>(v);
        have_degree = true;
      } else if (keyword == "name") {
        if (rest.empty()) {
          fail("empty name");
        }
        spec.name = rest;
      } else if (keyword == "gen") {
        try {
          parse_cycles(rest, spec.degree);
        } catch (InputError const& e) {
          fail(e.what());
        }
        spec.generator_texts.push_back(rest);
      } else if (keyword == "degree") {
        fail("duplicate degree line");
      } else {
        fail("unknown keyword \"" + keyword + "\"");
      }
      if (end == text.size()) {
        break;
      }
    }
    if (!have_degree) {
      throw InputError(source + ": missing \"degree N\" line");
    }
    if (spec.name.empty()) {
      spec.name = std::filesystem::path(source).stem().string();
    }
    return spec;
  }

  GroupSpec load_group(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_group_text(buf.str(), path.string());
  }

  std::string format_group_text(GroupSpec const& spec) {
    std::ostringstream out;
    out << "# " << to_string(spec.provenance) << "\n";
    out << "degree " << spec.degree << "\n";
    out << "name " << spec.name << "\n";
    for (auto const& g : spec.generator_texts) {
      out << "gen " << g << "\n";
    }
    return out.str();
  }

  void save_group(GroupSpec const& spec, std::filesystem::path const& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw InputError("cannot write " + path.string());
    }
    out << format_group_text(spec);
    if (!out) {
      throw InputError("write failed: " + path.string());
    }
  }

  std::vector<GroupSpec> load_corpus_dir(std::filesystem::path const& dir) {
    if (!std::filesystem::is_directory(dir)) {
      throw InputError(dir.string() + " is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (auto const& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".grp") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    std::vector<GroupSpec> out;
    for (auto const& f : files) {
      out.push_back(load_group(f));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Corpus
  ////////////////////////////////////////////////////////////////////////

  std::vector<GroupSpec> named_families() {
    std::vector<GroupSpec> out;
    for (std::size_t n = 1; n <= 30; ++n) {
      out.push_back(cyclic(n));
    }
    for (std::size_t n : {32, 36, 48, 60, 64, 81, 100, 128, 210, 243, 256, 300}) {
      out.push_back(cyclic(n));
    }
    for (std::size_t n = 3; n <= 30; ++n) {
      out.push_back(dihedral(n));
    }
    for (std::size_t n : {32, 45, 50, 64, 75, 100, 150}) {
      out.push_back(dihedral(n));
    }
    for (std::size_t m = 2; m <= 12; ++m) {
      out.push_back(quaternion_generalized(m));
    }
    for (std::size_t m : {16, 25, 32, 75}) {
      out.push_back(quaternion_generalized(m));
    }
    for (std::size_t n = 1; n <= 5; ++n) {
      out.push_back(symmetric(n));
    }
    for (std::size_t n = 3; n <= 5; ++n) {
      out.push_back(alternating(n));
    }
    auto const C2 = cyclic(2), C3 = cyclic(3), C5 = cyclic(5), C7 = cyclic(7);
    auto const S3 = symmetric(3), S4 = symmetric(4), A4 = alternating(4), A5 = alternating(5);
    auto const Q8 = quaternion_generalized(2), D8 = dihedral(4);
    out.push_back(direct_product(C2, C2));
    out.push_back(direct_product(direct_product(C2, C2), C2));
    out.push_back(direct_product(direct_product(direct_product(C2, C2), C2), C2));
    out.push_back(direct_product(C3, C3));
    out.push_back(direct_product(direct_product(C3, C3), C3));
    out.push_back(direct_product(C5, C5));
    out.push_back(direct_product(C7, C7));
    out.push_back(direct_product(S3, C2));
    out.push_back(direct_product(S3, C3));
    out.push_back(direct_product(S3, C5));
    out.push_back(direct_product(S3, S3));
    out.push_back(direct_product(direct_product(S3, S3), C2));
    out.push_back(direct_product(A4, C2));
    out.push_back(direct_product(A4, C3));
    out.push_back(direct_product(A4, S3));
    out.push_back(direct_product(A4, A4));
    out.push_back(direct_product(S4, C2));
    out.push_back(direct_product(S4, C3));
    out.push_back(direct_product(S4, S3));
    out.push_back(direct_product(A5, C2));
    out.push_back(direct_product(Q8, C3));
    out.push_back(direct_product(Q8, C2));
    out.push_back(direct_product(D8, C3));
    out.push_back(direct_product(D8, C2));
    out.push_back(direct_product(dihedral(5), C3));
    out.push_back(direct_product(dihedral(7), dihedral(3)));
    return out;
  }

  std::vector<GroupSpec> standard_corpus(CorpusOptions const& opts) {
    std::vector<GroupSpec> out;
    for (std::size_t n = 4; n <= opts.sn; ++n) {
      auto subs = subgroups_of_symmetric(n, opts.allow_six);
      out.insert(out.end(), subs.begin(), subs.end());
    }
    auto named = named_families();
    out.insert(out.end(), named.begin(), named.end());
    out.push_back(affine_order_75());
    out.push_back(affine_order_294());
    return out;
  }

}  // namespace formationlab
