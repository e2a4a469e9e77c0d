#include "tatehoch/specfile.hpp"

#include <fstream>
#include <sstream>

namespace tatehoch {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

Rat parse_scalar(const std::string& tok, int line) {
  try {
    auto slash = tok.find('/');
    if (slash == std::string::npos) return Rat(boost::multiprecision::cpp_int(tok));
    boost::multiprecision::cpp_int num(tok.substr(0, slash));
    boost::multiprecision::cpp_int den(tok.substr(slash + 1));
    if (den == 0) throw ParseError(line, "zero denominator in '" + tok + "'");
    return Rat(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError(line, "cannot read number '" + tok + "'");
  }
}

}  // namespace

AlgebraSpec parse_algebra_spec(const std::string& text) {
  AlgebraSpec spec;
  spec.source_text = text;

  std::vector<std::string> lines;
  {
    std::istringstream is(text);
    std::string l;
    while (std::getline(is, l)) lines.push_back(l);
  }

  std::string section;
  bool have_field = false, have_basis = false, have_table = false, have_functional = false;
  std::vector<std::pair<int, std::vector<Rat>>> table_rows;
  bool reading_table = false;

  for (int li = 0; li < static_cast<int>(lines.size()); ++li) {
    int ln = li + 1;
    std::string raw = lines[li];
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string l = strip(raw);
    if (l.empty()) continue;

    if (l.front() == '[') {
      if (l.back() != ']') throw ParseError(ln, "unterminated section header");
      section = l.substr(1, l.size() - 2);
      reading_table = false;
      if (section != "algebra" && section != "frobenius" && section != "options")
        throw ParseError(ln, "unknown section [" + section + "]");
      continue;
    }

    auto eq = l.find('=');
    if (eq == std::string::npos) {
      if (reading_table) {
        auto toks = split_ws(l);
        std::vector<Rat> row;
        for (auto& t : toks) row.push_back(parse_scalar(t, ln));
        table_rows.emplace_back(ln, std::move(row));
        continue;
      }
      throw ParseError(ln, "expected 'key = value'");
    }
    std::string key = strip(l.substr(0, eq));
    std::string value = strip(l.substr(eq + 1));
    reading_table = false;

    if (section == "algebra") {
      if (key == "name") {
        spec.name = value;
      } else if (key == "field") {
        if (value == "Q") {
          spec.field = Field::Q();
        } else if (value.size() > 1 && value[0] == 'F') {
          long long p;
          try {
            p = std::stoll(value.substr(1));
          } catch (...) {
            throw ParseError(ln, "bad field '" + value + "'");
          }
          try {
            spec.field = Field::Fp(p);
          } catch (const MathError& e) {
            throw ParseError(ln, e.what());
          }
        } else {
          throw ParseError(ln, "field must be Q or F<p>");
        }
        have_field = true;
      } else if (key == "basis") {
        spec.basis = split_ws(value);
        if (spec.basis.empty()) throw ParseError(ln, "empty basis");
        have_basis = true;
      } else if (key == "table") {
        if (!value.empty()) throw ParseError(ln, "table rows start on the following lines");
        reading_table = true;
        have_table = true;
      } else {
        throw ParseError(ln, "unknown key '" + key + "' in [algebra]");
      }
    } else if (section == "frobenius") {
      if (key == "functional") {
        for (auto& t : split_ws(value)) spec.functional.push_back(parse_scalar(t, ln));
        have_functional = true;
      } else {
        throw ParseError(ln, "unknown key '" + key + "' in [frobenius]");
      }
    } else if (section == "options") {
      if (key == "window") {
        try {
          spec.window = std::stoi(value);
        } catch (...) {
          throw ParseError(ln, "bad window '" + value + "'");
        }
        if (spec.window < 1) throw ParseError(ln, "window must be positive");
      } else if (key == "engine") {
        if (value != "formula" && value != "stable" && value != "both")
          throw ParseError(ln, "engine must be formula, stable or both");
        spec.engine = value;
      } else {
        throw ParseError(ln, "unknown key '" + key + "' in [options]");
      }
    } else {
      throw ParseError(ln, "content before any section header");
    }
  }

  if (!have_field) throw ParseError(static_cast<int>(lines.size()), "missing field");
  if (!have_basis) throw ParseError(static_cast<int>(lines.size()), "missing basis");
  if (!have_table) throw ParseError(static_cast<int>(lines.size()), "missing table");
  if (!have_functional)
    throw ParseError(static_cast<int>(lines.size()), "missing [frobenius] functional");

  int d = static_cast<int>(spec.basis.size());
  if (static_cast<int>(table_rows.size()) != d * d)
    throw ParseError(table_rows.empty() ? static_cast<int>(lines.size()) : table_rows.back().first,
                     "table needs " + std::to_string(d * d) + " rows, found " +
                         std::to_string(table_rows.size()));
  spec.table.assign(d, std::vector<Vec>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto& [ln, row] = table_rows[i * d + j];
      if (static_cast<int>(row.size()) != d)
        throw ParseError(ln, "table row needs " + std::to_string(d) + " entries");
      Vec v(d, 1);
      for (int k = 0; k < d; ++k) v.at(k, 0) = row[k];
      spec.table[i][j] = std::move(v);
    }
  if (static_cast<int>(spec.functional.size()) != d)
    throw ParseError(static_cast<int>(lines.size()),
                     "functional needs " + std::to_string(d) + " entries");
  return spec;
}

AlgebraSpec load_algebra_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra_spec(ss.str());
}

}  // namespace tatehoch
