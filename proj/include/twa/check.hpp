#pragma once

#include <cstddef>
#include <string>
#include <utility>

namespace twa {

/// Outcome of one exhaustive verification: how many individual assertions
/// were evaluated and the first one that failed.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;

  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  /// Counts one assertion. The witness callback only runs on the first failure.
  template <typename Witness>
  bool expect(bool ok, Witness&& describe) {
    ++cases;
    if (!ok && passed) {
      passed = false;
      witness = describe();
    }
    return ok;
  }

  void fail(std::string w) {
    if (passed) {
      passed = false;
      witness = std::move(w);
    }
  }

  void absorb(const CheckResult& other) {
    cases += other.cases;
    if (!other.passed) fail(other.name.empty() ? other.witness : other.name + ": " + other.witness);
  }
};

}  // namespace twa
