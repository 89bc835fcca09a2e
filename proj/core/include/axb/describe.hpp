#pragma once

#include <string>
#include <vector>

namespace axb {

struct OperationInfo {
  std::string name;
  std::string module;
  std::string summary;
  std::string topic;  ///< subject area, or "artifact plumbing"
};

const std::vector<OperationInfo>& operation_registry();

std::vector<std::string> operation_names();

/// Multi-line text for one operation; throws UnknownName.
std::string describe(const std::string& name);

}  // namespace axb
