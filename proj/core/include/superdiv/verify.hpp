#pragma once

// Desk-scale verification suites. Each suite recomputes one structural
// result exactly over F_p and reports pass/fail with a short detail line
// and optional diagnostic notes.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace superdiv {

struct CriterionResult {
  int id = 0;
  std::string suite;
  std::string title;
  bool passed = false;
  std::string detail;
  std::vector<std::string> notes;
};

/// Suite ids in criterion order.
const std::vector<std::string_view>& suite_ids();

/// Runs one suite; std::nullopt for an unknown id. The seed drives the
/// random spot checks some suites add on top of the exhaustive ones.
std::optional<CriterionResult> run_suite(std::string_view id, std::uint64_t seed = 0);

std::vector<CriterionResult> run_all(std::uint64_t seed = 0);

}  // namespace superdiv
