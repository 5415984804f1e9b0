#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace k3 {

// All lattice arithmetic is exact. We use 64-bit integers with mandatory
// overflow detection: any operation that would wrap throws std::overflow_error
// instead of silently corrupting a classification. Inputs with n, d <= 1e6,
// g <= 1e9 and coordinates |x|, |y| <= 1e6 stay far inside the checked range.
using Int = std::int64_t;

[[noreturn]] inline void throw_overflow(const char* op) {
  throw std::overflow_error(std::string("integer overflow in ") + op);
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("multiplication");
  return r;
}

// Least non-negative residue of a modulo m, for m > 0.
inline Int mod_floor(Int a, Int m) {
  if (m <= 0) throw std::domain_error("mod_floor: modulus must be positive");
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

inline bool divides(Int a, Int b) { return a != 0 && b % a == 0; }

// Exact floor of sqrt(v). The double seed is corrected with division-only
// steps, so the result is exact over the whole int64 range.
inline Int isqrt(Int v) {
  if (v < 0) throw std::domain_error("isqrt: negative argument");
  if (v == 0) return 0;
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(v)));
  if (r < 1) r = 1;
  while (r > v / r) --r;
  while (r + 1 <= v / (r + 1)) ++r;
  return r;
}

inline std::optional<Int> perfect_square_root(Int v) {
  if (v < 0) return std::nullopt;
  const Int r = isqrt(v);
  if (r * r != v) return std::nullopt;
  return r;
}

}  // namespace k3
