#pragma once

#include <string>
#include <vector>

namespace cosmash {

/// One verified identity. `witness` names the first basis element (or degree)
/// where it failed and is empty on success.
struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
  std::string detail;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string witness = {}, std::string detail = {});
  void append(const Report& other, const std::string& prefix = {});

  bool ok() const;
  /// First failing check, or nullptr.
  const Check* first_failure() const;
  std::string summary() const;
};

}  // namespace cosmash
