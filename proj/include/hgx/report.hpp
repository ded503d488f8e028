#pragma once

#include <string>
#include <vector>

namespace hgx {

/// Outcome of one named check. `Observed` records a fact that is not
/// asserted (e.g. a rank on a fixture where the theorem's hypothesis fails);
/// `Skipped` marks a theorem test whose precondition does not hold.
enum class Status { Pass, Fail, Observed, Skipped };

std::string status_name(Status s);

struct CheckItem {
  std::string name;
  Status status = Status::Pass;
  std::string detail;  // witness or observation, exact coordinates
};

struct Report {
  std::string title;
  std::vector<CheckItem> items;

  void add(const std::string& name, bool ok, const std::string& detail = "");
  void observe(const std::string& name, const std::string& detail);
  void skip(const std::string& name, const std::string& detail);
  void merge(const Report& sub);

  bool all_passed() const;
  size_t failures() const;
  std::string to_string() const;
};

}  // namespace hgx
