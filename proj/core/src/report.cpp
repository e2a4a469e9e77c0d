#include "tatehoch/report.hpp"

#include <sstream>

namespace tatehoch {

void Report::add_check(const std::string& name, bool pass) {
  if (!j.contains("checks")) j["checks"] = nlohmann::ordered_json::array();
  j["checks"].push_back({{"name", name}, {"pass", pass}});
}

bool Report::all_checks_pass() const {
  if (!j.contains("checks")) return true;
  for (const auto& c : j["checks"])
    if (!c["pass"].get<bool>()) return false;
  return true;
}

namespace {

std::string scalar_str(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const auto& v = it.value();
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << key << ":\n";
      // collect column names in first-seen order
      std::vector<std::string> cols;
      for (const auto& row : v)
        for (auto cit = row.begin(); cit != row.end(); ++cit)
          if (std::find(cols.begin(), cols.end(), cit.key()) == cols.end())
            cols.push_back(cit.key());
      std::vector<size_t> width(cols.size());
      for (size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : v) {
        std::vector<std::string> line;
        for (size_t c = 0; c < cols.size(); ++c) {
          std::string s = row.contains(cols[c]) ? scalar_str(row[cols[c]]) : "";
          width[c] = std::max(width[c], s.size());
          line.push_back(std::move(s));
        }
        cells.push_back(std::move(line));
      }
      os << " ";
      for (size_t c = 0; c < cols.size(); ++c)
        os << " " << cols[c] << std::string(width[c] - cols[c].size(), ' ');
      os << "\n";
      for (const auto& line : cells) {
        os << " ";
        for (size_t c = 0; c < cols.size(); ++c)
          os << " " << line[c] << std::string(width[c] - line[c].size(), ' ');
        os << "\n";
      }
    } else if (v.is_object() || v.is_array()) {
      os << key << ": " << v.dump() << "\n";
    } else {
      os << key << ": " << scalar_str(v) << "\n";
    }
  }
  return os.str();
}

std::string Report::to_csv() const {
  std::ostringstream os;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (!(v.is_array() && !v.empty() && v.front().is_object())) continue;
    std::vector<std::string> cols;
    for (const auto& row : v)
      for (auto cit = row.begin(); cit != row.end(); ++cit)
        if (std::find(cols.begin(), cols.end(), cit.key()) == cols.end())
          cols.push_back(cit.key());
    os << "# " << it.key() << "\n";
    for (size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
    os << "\n";
    for (const auto& row : v) {
      for (size_t c = 0; c < cols.size(); ++c)
        os << (c ? "," : "") << (row.contains(cols[c]) ? scalar_str(row[cols[c]]) : "");
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace tatehoch
