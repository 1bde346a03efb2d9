#include "barriers/coding.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace barriers {

std::uint64_t pair(std::uint64_t x, std::uint64_t y) {
  Color z = pair(Color(x), Color(y));
  if (z > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("pair exceeds 64 bits");
  return z.convert_to<std::uint64_t>();
}

Color pair(const Color& x, const Color& y) {
  const Color sum = x + y;
  return sum * (sum + 1) / 2 + x;
}

std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t z) {
  // Largest w with w(w+1)/2 <= z.
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(z) + 1) - 1) / 2);
  auto tri = [](std::uint64_t v) { return static_cast<unsigned __int128>(v) * (v + 1) / 2; };
  while (tri(w) > z) --w;
  while (tri(w + 1) <= z) ++w;
  const auto x = static_cast<std::uint64_t>(z - tri(w));
  return {x, w - x};
}

namespace {

// Pairs the codes of [lo, mid) and [mid, hi). The tree shape depends only on
// the length, and the bit length grows linearly in it.
Color fold(const Seq& s, std::size_t lo, std::size_t hi) {
  if (hi == lo) return 0;
  if (hi - lo == 1) return Color(s[lo]);
  const std::size_t mid = lo + (hi - lo) / 2;
  return pair(fold(s, lo, mid), fold(s, mid, hi));
}

}  // namespace

Color code_seq(const Seq& s) { return pair(Color(s.size()), fold(s, 0, s.size())); }

}  // namespace barriers
