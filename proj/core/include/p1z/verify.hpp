#pragma once

// Built-in invariant suites: randomized and grid checks of the identities
// every module is expected to satisfy. Runs are deterministic for a given
// seed.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace p1z {

enum class Suite { Charfun, Sections, Volume, Zariski, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s) noexcept;

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  std::size_t failures() const noexcept;
};

inline constexpr std::uint64_t kDefaultVerifySeed = 20240607;

VerifyReport run_verify(Suite suite, std::uint64_t seed = kDefaultVerifySeed);

}  // namespace p1z
