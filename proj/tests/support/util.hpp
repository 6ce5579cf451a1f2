#pragma once

#include <optional>
#include <string_view>

#include "gtb/words.hpp"

namespace testutil {

inline gtb::LinearWord lw(std::string_view s, int n = 3) { return gtb::parse_word(s, {n}); }
inline gtb::CyclicWord cw(std::string_view s, int n = 3) { return gtb::CyclicWord::parse(s, {n}); }

/// Kind of the gtb::Error thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<gtb::ErrorKind> error_of(F&& f) {
  try {
    f();
  } catch (const gtb::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace testutil
