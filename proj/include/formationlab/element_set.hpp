#ifndef FORMATIONLAB_ELEMENT_SET_HPP_
#define FORMATIONLAB_ELEMENT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace formationlab {

  // Fixed-universe bitset over the element indices of one GroupTable.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : _universe(universe), _words((universe + 63) / 64, 0) {}

    std::size_t universe() const noexcept {
      return _universe;
    }

    bool test(std::size_t i) const noexcept {
      return (_words[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) noexcept {
      _words[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    void reset(std::size_t i) noexcept {
      _words[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : _words) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }

    bool is_subset_of(ElementSet const& other) const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if (_words[i] & ~other._words[i]) {
          return false;
        }
      }
      return true;
    }

    ElementSet& operator&=(ElementSet const& other) noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] &= other._words[i];
      }
      return *this;
    }

    ElementSet& operator|=(ElementSet const& other) noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] |= other._words[i];
      }
      return *this;
    }

    friend ElementSet operator&(ElementSet a, ElementSet const& b) noexcept {
      return a &= b;
    }

    friend bool operator==(ElementSet const& a, ElementSet const& b) noexcept {
      return a._universe == b._universe && a._words == b._words;
    }

    // Lexicographic order on the ascending index sequences, for sets of
    // equal cardinality: the set holding the least differing index is
    // smaller.
    friend bool lex_less(ElementSet const& a, ElementSet const& b) noexcept {
      for (std::size_t i = 0; i < a._words.size(); ++i) {
        std::uint64_t const diff = a._words[i] ^ b._words[i];
        if (diff != 0) {
          std::uint64_t const low = diff & (~diff + 1);
          return (a._words[i] & low) != 0;
        }
      }
      return false;
    }

    // Calls f(index) for every member in ascending order.
    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t w = 0; w < _words.size(); ++w) {
        std::uint64_t bits = _words[w];
        while (bits != 0) {
          auto const b = static_cast<std::size_t>(std::countr_zero(bits));
          f(w * 64 + b);
          bits &= bits - 1;
        }
      }
    }

    std::vector<std::uint32_t> indices() const {
      std::vector<std::uint32_t> out;
      out.reserve(count());
      for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
      return out;
    }

    std::size_t hash() const noexcept {
      std::uint64_t h = 1469598103934665603ull ^ _universe;
      for (auto w : _words) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }

   private:
    std::size_t                _universe = 0;
    std::vector<std::uint64_t> _words;
  };

}  // namespace formationlab

template <>
struct std::hash<formationlab::ElementSet> {
  std::size_t operator()(formationlab::ElementSet const& s) const noexcept {
    return s.hash();
  }
};

#endif  // FORMATIONLAB_ELEMENT_SET_HPP_
