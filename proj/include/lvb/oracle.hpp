#pragma once

// Brute-force machinery for small windows.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lvb/diagram.hpp"

namespace lvb {

struct EnumerationWindow {
  std::size_t n = 1;
  Entry entry_min = 0;
  Entry entry_max = 0;

  bool contains(const WeightDiagram& x) const;
};

/// Throws DomainError on an empty or inverted window.
void validate(const EnumerationWindow& w);

/// 10^7 unless LVB_ENUM_BUDGET holds a positive integer.
std::uint64_t enumeration_budget();

/// Diagrams with n boxes, rows in every order (one per composition of n),
/// entries in the window: 2^(n-1) * width^n of them. Saturates at UINT64_MAX.
std::uint64_t count_diagrams(const EnumerationWindow& w);

/// Visits each diagram once. Throws BudgetError if the count exceeds the
/// budget. Stops early when the visitor returns false.
void for_each_diagram(const EnumerationWindow& w,
                      const std::function<bool(const WeightDiagram&)>& visit,
                      std::uint64_t budget = enumeration_budget());

/// [min lambda - n, max lambda + n].
EnumerationWindow window_around(const DominantWeight& lambda);

/// The distinguished diagram in the window whose tau is lambda. Searches E-arrays
/// directly, which is sound because distinguished diagrams have strictly
/// decreasing column-1 E-values and zigzag rows. Throws BijectivityError if two
/// preimages are found.
std::optional<WeightDiagram> invert_tau_bruteforce(const DominantWeight& lambda,
                                                   const EnumerationWindow& w);

struct AuditReport {
  EnumerationWindow window;
  std::uint64_t diagrams = 0;
  std::uint64_t distinguished = 0;
  std::uint64_t boundary_exits = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Runs distinguish on every diagram of the window and checks that tau and
/// kappa are injective on the distinguished ones. Endpoints leaving the window
/// count as boundary exits rather than violations.
AuditReport audit_bijection(const EnumerationWindow& w,
                            std::uint64_t budget = enumeration_budget());

}  // namespace lvb
