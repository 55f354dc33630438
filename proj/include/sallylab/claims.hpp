#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sallylab/sally.hpp"
#include "sallylab/spec.hpp"

namespace sallylab {

enum class ClaimStatus { Pass, Fail, Skip };
std::string to_string(ClaimStatus status);

struct ClaimResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::Skip;
  /// "stated": the value is quoted with the example; "derived": obtained by an
  /// independent computation chain; "identity": a general theorem instance.
  std::string provenance;
};

/// Everything a claim may look at, computed once per fixture.
struct ClaimContext {
  const IdealSpec& spec;
  const MonomialIdeal& q;
  const MonomialIdeal& ideal;
  const SallyProfile& profile;
  const InequalityReport& inequalities;
  const std::optional<ClosedFormReport>& closed_form;
};

struct Claim {
  std::string id;
  std::string description;
  std::string provenance;
  std::function<std::string(const ClaimContext&)> expected;
  std::function<std::string(const ClaimContext&)> computed;
};

struct Fixture {
  IdealSpec spec;
  std::size_t window;
  std::vector<Claim> claims;
};

/// The worked examples: the two-variable family for l = 1, 2, 3, the free
/// rank-two example, the three rank-two/three examples with s_1 in {3, 4},
/// and the three-variable example outside both classifications.
std::vector<Fixture> builtin_fixtures();

/// Runs every claim; a fixture whose profile cannot be built fails all of
/// its claims with the error as the computed value.
std::vector<ClaimResult> run_claims(const std::vector<Fixture>& fixtures);

}  // namespace sallylab
