#pragma once

#include <cstdint>
#include <utility>

#include "barriers/seq.hpp"
#include "barriers/types.hpp"

namespace barriers {

/// Cantor pairing <x, y> = (x + y)(x + y + 1)/2 + x. Throws
/// std::overflow_error past 64 bits.
std::uint64_t pair(std::uint64_t x, std::uint64_t y);
Color pair(const Color& x, const Color& y);
/// Inverse of pair.
std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t z);

/// Injective code of a finite sequence: <length, fold> where fold pairs the
/// codes of the two halves, fold(()) = 0 and fold((x)) = x.
Color code_seq(const Seq& s);

}  // namespace barriers
