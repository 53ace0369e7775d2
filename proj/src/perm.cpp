#include "formationlab/perm.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "formationlab/error.hpp"

namespace formationlab {

  namespace {
    void check_same_degree(Permutation const& a,
                           Permutation const& b,
                           char const*        what) {
      if (a.degree() != b.degree()) {
        std::ostringstream msg;
        msg << what << ": degree mismatch (" << a.degree() << " vs "
            << b.degree() << ")";
        throw InputError(msg.str());
      }
    }
  }  // namespace

  Permutation::Permutation(std::size_t degree) : _images(degree) {
    if (degree == 0) {
      throw InputError("permutation degree must be positive");
    }
    std::iota(_images.begin(), _images.end(), 0u);
  }

  Permutation Permutation::from_images(std::vector<std::uint32_t> const& images) {
    if (images.empty()) {
      throw InputError("permutation degree must be positive");
    }
    Permutation       result;
    std::vector<bool> seen(images.size(), false);
    result._images.reserve(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::uint32_t v = images[i];
      if (v == 0 || v > images.size()) {
        throw InputError("image " + std::to_string(v) + " of point "
                         + std::to_string(i + 1) + " out of range");
      }
      if (seen[v - 1]) {
        throw InputError("image " + std::to_string(v) + " repeated");
      }
      seen[v - 1] = true;
      result._images.push_back(v - 1);
    }
    return result;
  }

  std::uint32_t Permutation::operator()(std::uint32_t point) const {
    if (point == 0 || point > _images.size()) {
      throw InputError("point " + std::to_string(point) + " out of range");
    }
    return _images[point - 1] + 1;
  }

  std::vector<std::uint32_t> Permutation::images() const {
    std::vector<std::uint32_t> out(_images);
    for (auto& v : out) {
      ++v;
    }
    return out;
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::size_t Permutation::hash() const noexcept {
    // FNV-1a over the image words
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : _images) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  bool operator==(Permutation const& a, Permutation const& b) {
    check_same_degree(a, b, "comparison");
    return a._images == b._images;
  }

  bool operator<(Permutation const& a, Permutation const& b) {
    check_same_degree(a, b, "comparison");
    return a._images < b._images;
  }

  Permutation compose(Permutation const& a, Permutation const& b) {
    check_same_degree(a, b, "compose");
    auto const               ra = a.raw();
    auto const               rb = b.raw();
    std::vector<std::uint32_t> img(ra.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
      img[i] = rb[ra[i]] + 1;
    }
    return Permutation::from_images(img);
  }

  Permutation inverse(Permutation const& a) {
    auto const                 ra = a.raw();
    std::vector<std::uint32_t> img(ra.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
      img[ra[i]] = static_cast<std::uint32_t>(i) + 1;
    }
    return Permutation::from_images(img);
  }

  Permutation power(Permutation const& a, std::int64_t e) {
    auto const ord = static_cast<std::int64_t>(order_of(a));
    auto       r   = ((e % ord) + ord) % ord;
    // walk each cycle and shift by r
    auto const                 ra = a.raw();
    std::size_t const          n  = ra.size();
    std::vector<std::uint32_t> img(n);
    std::vector<bool>          done(n, false);
    std::vector<std::uint32_t> cycle;
    for (std::size_t start = 0; start < n; ++start) {
      if (done[start]) {
        continue;
      }
      cycle.clear();
      for (auto p = static_cast<std::uint32_t>(start); !done[p]; p = ra[p]) {
        done[p] = true;
        cycle.push_back(p);
      }
      std::size_t const len = cycle.size();
      for (std::size_t j = 0; j < len; ++j) {
        img[cycle[j]] = cycle[(j + static_cast<std::size_t>(r % static_cast<std::int64_t>(len))) % len] + 1;
      }
    }
    return Permutation::from_images(img);
  }

  Permutation commutator(Permutation const& a, Permutation const& b) {
    check_same_degree(a, b, "commutator");
    return compose(compose(inverse(a), inverse(b)), compose(a, b));
  }

  std::uint64_t order_of(Permutation const& a) {
    auto const        ra = a.raw();
    std::vector<bool> done(ra.size(), false);
    std::uint64_t     result = 1;
    for (std::size_t start = 0; start < ra.size(); ++start) {
      if (done[start]) {
        continue;
      }
      std::uint64_t len = 0;
      for (auto p = static_cast<std::uint32_t>(start); !done[p]; p = ra[p]) {
        done[p] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  Permutation parse_cycles(std::string_view text, std::size_t degree) {
    if (degree == 0) {
      throw InputError("permutation degree must be positive");
    }
    auto fail = [&](std::size_t pos, std::string const& what) {
      throw InputError("cycle notation, position " + std::to_string(pos + 1)
                       + ": " + what);
    };
    std::vector<std::uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    std::vector<bool> used(degree, false);

    std::size_t i    = 0;
    auto        skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    skip();
    if (i == text.size()) {
      fail(i, "empty text");
    }
    while (i < text.size()) {
      if (text[i] != '(') {
        fail(i, "expected '('");
      }
      ++i;
      std::vector<std::uint32_t> cycle;
      skip();
      while (i < text.size() && text[i] != ')') {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
          fail(i, std::string("unexpected character '") + text[i] + "'");
        }
        std::size_t const start = i;
        std::uint64_t     v     = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (v > degree) {
            // keep scanning so the message names the whole number
            v = degree + 1;
          }
          ++i;
        }
        if (v == 0 || v > degree) {
          fail(start,
               "point " + std::string(text.substr(start, i - start))
                   + " out of range 1.." + std::to_string(degree));
        }
        if (used[v - 1]) {
          fail(start, "point " + std::to_string(v) + " repeated");
        }
        used[v - 1] = true;
        cycle.push_back(static_cast<std::uint32_t>(v - 1));
        if (i < text.size() && text[i] != ')'
            && !std::isspace(static_cast<unsigned char>(text[i]))) {
          fail(i, std::string("unexpected character '") + text[i] + "'");
        }
        skip();
      }
      if (i == text.size()) {
        fail(i, "unterminated cycle");
      }
      ++i;  // ')'
      for (std::size_t j = 0; j < cycle.size(); ++j) {
        img[cycle[j]] = cycle[(j + 1) % cycle.size()];
      }
      skip();
    }
    for (auto& v : img) {
      ++v;
    }
    return Permutation::from_images(img);
  }

  std::string format_cycles(Permutation const& a) {
    auto const        ra = a.raw();
    std::vector<bool> done(ra.size(), false);
    std::string       out;
    for (std::size_t start = 0; start < ra.size(); ++start) {
      if (done[start] || ra[start] == start) {
        continue;
      }
      out += '(';
      bool first = true;
      for (auto p = static_cast<std::uint32_t>(start); !done[p]; p = ra[p]) {
        done[p] = true;
        if (!first) {
          out += ' ';
        }
        out += std::to_string(p + 1);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  std::ostream& operator<<(std::ostream& os, Permutation const& a) {
    return os << format_cycles(a);
  }

}  // namespace formationlab
