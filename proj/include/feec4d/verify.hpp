#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feec4d/refgeom.hpp"

namespace feec4d {

/// Outcome of one verification case.  `s` and `k` are -1 when the case is
/// not tied to a single form degree or polynomial order.
struct CheckRecord {
  std::string cell;  // "pentatope", "prism", or "-"
  int s = -1;
  int k = -1;
  std::string check;
  bool pass = false;
  std::string witness;
};

struct VerifyReport {
  std::vector<CheckRecord> records;
  bool all_pass() const;
};

/// Test-harness hook: adds 1 to one stored coefficient of one basis member
/// of the primary space construction for (cell, s, k).  `member` wraps
/// modulo the basis size and `term` modulo the member's nonzero coefficient
/// count, so every index pair addresses a real coefficient.
struct CorruptSpec {
  CellKind cell = CellKind::pentatope;
  int s = 0;
  int k = 1;
  int member = 0;
  int term = 0;
};

/// The supported check names, in canonical report order:
/// dims, exactness, unisolvency, bubbles, traces, tensor-vs-nrt, pullback.
const std::vector<std::string>& check_names();

struct VerifyOptions {
  bool pentatope = true;
  bool prism = true;
  int max_k = 3;
  std::vector<std::string> checks;  // empty = all; else subset of check_names()
  int threads = 0;                  // <= 0: FEEC4D_THREADS, else hardware
  std::optional<CorruptSpec> corrupt;
};

/// Runs the requested check suites over both cells for k = 1..max_k.
/// Record order is deterministic (sorted by cell, s, k, check) and
/// independent of the worker-pool schedule.  Throws on unknown check names.
VerifyReport run_verify(const VerifyOptions& opt);

/// The primary space basis, with the corruption hook applied when a request
/// matches; exposed so tests can address specific coefficients.
std::vector<FormPoly> primary_space(CellKind cell, int k, int s,
                                    const std::optional<CorruptSpec>& corrupt);

}  // namespace feec4d
