#pragma once

#include <cstdint>

#include "lvb/error.hpp"

namespace lvb {

using Entry = std::int64_t;

inline Entry checked_add(Entry a, Entry b) {
  Entry out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline Entry checked_sub(Entry a, Entry b) {
  Entry out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline Entry checked_mul(Entry a, Entry b) {
  Entry out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

}  // namespace lvb
