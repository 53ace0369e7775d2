#ifndef FORMATIONLAB_PERM_HPP_
#define FORMATIONLAB_PERM_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace formationlab {

  // A bijection of {1..n}.
  //
  // Products are read left to right: compose(a, b) applies a first and then
  // b, so the image of i is b(a(i)). The commutator is [a, b] = a^-1 b^-1 a b
  // under the same convention.
  //
  // Equality between permutations of different degree is not "false": it is
  // an input error, since it always means two group contexts got mixed.
  class Permutation {
   public:
    // Identity of the given degree; degree must be positive.
    explicit Permutation(std::size_t degree);

    // From 1-based images: images[i - 1] is the image of point i.
    static Permutation from_images(std::vector<std::uint32_t> const& images);

    static Permutation identity(std::size_t degree) {
      return Permutation(degree);
    }

    std::size_t degree() const noexcept {
      return _images.size();
    }

    // 1-based image of a 1-based point.
    std::uint32_t operator()(std::uint32_t point) const;

    std::vector<std::uint32_t> images() const;

    // 0-based image table, for hot loops.
    std::span<std::uint32_t const> raw() const noexcept {
      return _images;
    }

    bool is_identity() const noexcept;

    std::size_t hash() const noexcept;

    friend bool operator==(Permutation const& a, Permutation const& b);

    // Lexicographic on the image sequence; same-degree only.
    friend bool operator<(Permutation const& a, Permutation const& b);

   private:
    Permutation() = default;
    std::vector<std::uint32_t> _images;  // 0-based
  };

  Permutation compose(Permutation const& a, Permutation const& b);
  Permutation inverse(Permutation const& a);
  // a^e for any integer e, reduced modulo order_of(a).
  Permutation power(Permutation const& a, std::int64_t e);
  Permutation commutator(Permutation const& a, Permutation const& b);
  std::uint64_t order_of(Permutation const& a);

  // Disjoint-cycle notation, e.g. "(1 2 3)(4 5)"; "()" is the identity.
  Permutation parse_cycles(std::string_view text, std::size_t degree);
  // Cycles sorted by least moved point, each starting at its least point;
  // fixed points omitted.
  std::string format_cycles(Permutation const& a);

  std::ostream& operator<<(std::ostream& os, Permutation const& a);

}  // namespace formationlab

template <>
struct std::hash<formationlab::Permutation> {
  std::size_t operator()(formationlab::Permutation const& p) const noexcept {
    return p.hash();
  }
};

#endif  // FORMATIONLAB_PERM_HPP_
