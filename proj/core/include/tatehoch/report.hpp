#pragma once

// Machine-readable reports with matching human renderings.  JSON key
// order is fixed so identical inputs give byte-identical output.

#include <json.hpp>

#include <string>

namespace tatehoch {

struct Report {
  nlohmann::ordered_json j;

  void set(const std::string& key, const nlohmann::ordered_json& v) { j[key] = v; }
  void add_check(const std::string& name, bool pass);
  bool all_checks_pass() const;

  std::string to_json() const { return j.dump(2) + "\n"; }
  /// Plain-text rendering of the same data.
  std::string to_text() const;
  /// One CSV block per table-valued key (degree tables).
  std::string to_csv() const;
};

}  // namespace tatehoch
