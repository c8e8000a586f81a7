#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hodge {

inline constexpr std::size_t kMaxVars = 16;

// Exponent vector over at most kMaxVars variables. Unused slots stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  std::uint16_t operator[](std::size_t i) const { return e[i]; }
  std::uint16_t& operator[](std::size_t i) { return e[i]; }

  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    return r;
  }
  // Requires divides(*this, o) in the sense o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
  }
  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    return r;
  }
  static Monomial var(std::size_t i, std::uint16_t power = 1) {
    Monomial r;
    r.e[i] = power;
    return r;
  }

  // Coarse divisibility filter: bit set for each nonzero exponent.
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i]) m |= 1u << i;
      if (e[i] > 1) m |= 1u << (i + 16);
    }
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.e) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace hodge
