#pragma once

#include <functional>
#include <string>
#include <vector>

namespace octa {

enum class VerifyLevel { Quick, Full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Quick: exhaustive b <= 1 plus sampled properties. Full: exhaustive b <= 2,
/// series to n = 2000, singularity and asymptotics, 10^4-sample properties.
/// Exceptions inside a check count as failures.
VerifyReport run_verification(VerifyLevel level,
                              const std::function<void(const CheckResult&)>& on_check = {});

}  // namespace octa
