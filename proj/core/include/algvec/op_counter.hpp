#pragma once

#include <cstdint>

namespace algvec {

/// Field-operation and entry-visit counts for one instrumented run.
struct OpCounter {
  std::uint64_t field_adds = 0;
  std::uint64_t field_muls = 0;
  std::uint64_t entries_touched = 0;

  void add() noexcept { ++field_adds; }
  void mul() noexcept { ++field_muls; }
  void touch() noexcept { ++entries_touched; }
  void reset() noexcept { *this = OpCounter{}; }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

/// Stand-in used by the uninstrumented entry points; compiles away.
struct NoCount {
  constexpr void add() const noexcept {}
  constexpr void mul() const noexcept {}
  constexpr void touch() const noexcept {}
};

template <class C>
concept OpCounting = requires(C& c) {
  c.add();
  c.mul();
  c.touch();
};

}  // namespace algvec
