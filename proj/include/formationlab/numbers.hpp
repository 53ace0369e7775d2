#ifndef FORMATIONLAB_NUMBERS_HPP_
#define FORMATIONLAB_NUMBERS_HPP_

#include <cstdint>
#include <vector>

namespace formationlab {

  inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  // Distinct prime divisors, ascending.
  inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        while (n % d == 0) {
          n /= d;
        }
      }
    }
    if (n > 1) {
      out.push_back(n);
    }
    return out;
  }

  // p^k with k >= 1.
  inline bool is_prime_power(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    std::uint64_t p = 2;
    while (n % p != 0) {
      ++p;
    }
    while (n % p == 0) {
      n /= p;
    }
    return n == 1;
  }

  // Largest power of p dividing n.
  inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) noexcept {
    std::uint64_t r = 1;
    while (n % p == 0) {
      n /= p;
      r *= p;
    }
    return r;
  }

}  // namespace formationlab

#endif  // FORMATIONLAB_NUMBERS_HPP_
