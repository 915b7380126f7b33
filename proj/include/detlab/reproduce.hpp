#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "detlab/field.hpp"

namespace detlab {

struct Claim {
  std::string label;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct ReproduceOptions {
  std::uint64_t seed = 1;
  /// Overrides the size parameter of scripts that have one.
  std::optional<std::size_t> n;
  Field field;
};

struct ReproduceResult {
  std::string id;
  std::uint64_t seed = 0;
  std::string field;
  std::vector<Claim> claims;

  bool passed() const;
  /// First failing claim, or nullptr.
  const Claim* first_failure() const;
};

/// Runs one scripted example; throws PreconditionError for unknown ids.
ReproduceResult reproduce(const std::string& id, const ReproduceOptions& opts = {});
std::vector<std::string> reproduce_ids();

nlohmann::json to_json(const ReproduceResult& r);

}  // namespace detlab
