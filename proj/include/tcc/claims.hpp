#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tcc/group.hpp"

namespace tcc {

/// One checked statement: what was expected, what was computed.
struct Claim {
  std::string tag;
  std::string anchor;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ClaimOptions {
  std::uint64_t seed = 20240607;
  /// Box half-width for the free nilpotent sweeps; the wreath witness
  /// search uses it as the bound on |l|.
  int bound = 5;
  /// Tags to run; empty means all.
  std::set<std::string> only;
};

struct ClaimReport {
  std::vector<Claim> claims;
  /// Observations that are reported but not asserted.
  std::vector<std::string> findings;

  bool all_pass() const;
};

/// Tags in run order: s3, a4, simple, order8, free-nil2, free-nil3, wreath,
/// invariants.
const std::vector<std::string>& claim_tags();

/// Throws std::invalid_argument on an unknown tag in `only`.
ClaimReport run_claims(const ClaimOptions& options = {});

/// "{e,(123),(132)}": identity first, remaining labels sorted.
std::string format_set(const FiniteGroup& g, const Subset& s);
std::vector<std::string> sorted_labels(const FiniteGroup& g, const Subset& s);

}  // namespace tcc
