#include "monideal/io.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace monideal {

namespace {

using nlohmann::json;

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

void skip_ws(const std::string& text, size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

int parse_positive_int(const std::string& text, size_t& pos, const char* what) {
  size_t start = pos;
  long value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 1000000) throw ParseError(std::string(what) + " too large", start);
    ++pos;
  }
  if (pos == start) throw ParseError(std::string("expected ") + what, pos);
  return static_cast<int>(value);
}

}  // namespace

Monomial parse_monomial(const Ring& ring, const std::string& text) {
  std::vector<int> exponents(static_cast<size_t>(ring.arity()), 0);
  size_t pos = 0;
  skip_ws(text, pos);
  if (pos == text.size()) throw ParseError("empty monomial", pos);
  for (;;) {
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '1') {
      ++pos;  // the unit factor
    } else if (pos < text.size() && name_start(text[pos])) {
      size_t start = pos;
      while (pos < text.size() && name_char(text[pos])) ++pos;
      std::string name = text.substr(start, pos - start);
      auto idx = ring.index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      int k = 1;
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws(text, pos);
        k = parse_positive_int(text, pos, "exponent");
        if (k < 1) throw ParseError("exponent must be >= 1", pos);
      }
      exponents[static_cast<size_t>(*idx)] += k;
    } else {
      throw ParseError("expected a variable or '1'", pos);
    }
    skip_ws(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != '*') throw ParseError("expected '*' between factors", pos);
    ++pos;
  }
  return Monomial(ring, std::move(exponents));
}

std::string format_monomial(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (int j = 0; j < m.ring().arity(); ++j) {
    int e = m.exponent(j);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += m.ring().var(j);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

json parse_json_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    int line = 1, column = 1;
    for (size_t k = 0; k < byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(e.what(), byte, line, column);
  }
}

Ring make_ring(std::vector<std::string> names, size_t position) {
  try {
    return Ring(std::move(names));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), position);
  }
}

Ring ring_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("\"vars\" must be an array of names", 0);
  std::vector<std::string> names;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError("\"vars\" entries must be strings", 0);
    names.push_back(v.get<std::string>());
  }
  return make_ring(std::move(names), 0);
}

}  // namespace

MonomialIdeal parse_ideal_json(const std::string& text) {
  json j = parse_json_or_throw(text);
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens"))
    throw ParseError("ideal JSON needs \"vars\" and \"gens\"", 0);
  Ring ring = ring_from_json(j["vars"]);
  if (!j["gens"].is_array()) throw ParseError("\"gens\" must be an array", 0);
  std::vector<Monomial> gens;
  for (const auto& g : j["gens"]) {
    if (!g.is_array() || static_cast<int>(g.size()) != ring.arity())
      throw ParseError("each generator must list one exponent per variable", 0);
    std::vector<int> e;
    for (const auto& v : g) {
      if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError("exponents must be nonnegative integers", 0);
      if (v.get<long long>() > 1000000) throw ParseError("exponent too large", 0);
      e.push_back(v.get<int>());
    }
    gens.emplace_back(ring, std::move(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::string format_ideal_json(const MonomialIdeal& I, bool pretty) {
  json j;
  j["vars"] = I.ring().vars();
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(g.exponents());
  j["gens"] = std::move(gens);
  return j.dump(pretty ? 2 : -1);
}

MonomialIdeal parse_ideal_text(const std::string& text) {
  std::istringstream stream(text);
  std::string line;
  size_t offset = 0;
  int line_no = 0;
  bool have_ring = false;
  Ring ring;
  std::vector<Monomial> gens;
  auto fail = [&](const std::string& msg, size_t line_start, size_t pos) {
    return ParseError(msg, line_start + pos, line_no, static_cast<int>(pos) + 1);
  };
  while (std::getline(stream, line)) {
    size_t line_start = offset;
    offset += line.size() + 1;
    ++line_no;
    size_t pos = 0;
    skip_ws(line, pos);
    if (pos == line.size() || line[pos] == '#') continue;
    if (!have_ring) {
      constexpr std::string_view header = "vars:";
      if (line.compare(pos, header.size(), header) != 0)
        throw fail("expected 'vars:' header line", line_start, pos);
      pos += header.size();
      std::vector<std::string> names;
      for (;;) {
        while (pos < line.size() &&
               (std::isspace(static_cast<unsigned char>(line[pos])) || line[pos] == ','))
          ++pos;
        if (pos == line.size()) break;
        if (!name_start(line[pos]))
          throw fail("bad variable name", line_start, pos);
        size_t start = pos;
        while (pos < line.size() && name_char(line[pos])) ++pos;
        names.push_back(line.substr(start, pos - start));
      }
      if (names.empty()) throw fail("no variables listed", line_start, pos);
      try {
        ring = Ring(std::move(names));
      } catch (const std::invalid_argument& e) {
        throw fail(e.what(), line_start, 0);
      }
      have_ring = true;
      continue;
    }
    try {
      gens.push_back(parse_monomial(ring, line));
    } catch (const ParseError& e) {
      throw fail(e.message(), line_start, e.position());
    }
  }
  if (!have_ring) throw ParseError("missing 'vars:' header line", 0, line_no, 1);
  return MonomialIdeal(ring, std::move(gens));
}

std::string format_ideal_text(const MonomialIdeal& I) {
  std::string out = "vars:";
  for (const auto& name : I.ring().vars()) out += " " + name;
  out += "\n";
  for (const auto& g : I.generators()) out += format_monomial(g) + "\n";
  return out;
}

MonomialIdeal read_ideal(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open ideal file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  size_t pos = 0;
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == '{') return parse_ideal_json(text);
  return parse_ideal_text(text);
}

SplittingMap parse_splitting_json(const Ring& source, const std::string& text) {
  json j = parse_json_or_throw(text);
  if (!j.is_object()) throw ParseError("splitting JSON must be an object", 0);
  for (const auto& [key, value] : j.items())
    if (key != "split" && key != "default")
      throw ParseError("unknown splitting key \"" + key + "\"", 0);
  int fallback = 1;
  if (j.contains("default")) {
    if (!j["default"].is_number_integer() || j["default"].get<long long>() < 1)
      throw ParseError("\"default\" must be an integer >= 1", 0);
    fallback = j["default"].get<int>();
  }
  std::vector<int> arities(static_cast<size_t>(source.arity()), fallback);
  if (j.contains("split")) {
    if (!j["split"].is_object())
      throw ParseError("\"split\" must map variable names to part counts", 0);
    for (const auto& [name, value] : j["split"].items()) {
      auto idx = source.index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "' in splitting", 0);
      if (!value.is_number_integer() || value.get<long long>() < 1)
        throw ParseError("part count for '" + name + "' must be an integer >= 1", 0);
      arities[static_cast<size_t>(*idx)] = value.get<int>();
    }
  }
  return SplittingMap(source, std::move(arities));
}

std::string format_betti_table_text(const BettiTable& table) {
  if (table.entries().empty()) return "(empty)\n";
  int min_row = INT_MAX, max_row = INT_MIN, max_col = 0;
  for (const auto& [key, count] : table.entries()) {
    min_row = std::min(min_row, key.first);
    max_row = std::max(max_row, key.first);
    max_col = std::max(max_col, key.second);
  }
  std::vector<long long> totals(static_cast<size_t>(max_col) + 1, 0);
  for (const auto& [key, count] : table.entries())
    totals[static_cast<size_t>(key.second)] += count;

  auto cell = [](long long v) { return std::to_string(v); };
  std::vector<size_t> width(static_cast<size_t>(max_col) + 1, 1);
  for (int c = 0; c <= max_col; ++c) {
    width[static_cast<size_t>(c)] =
        std::max({std::to_string(c).size(), cell(totals[static_cast<size_t>(c)]).size()});
    for (int r = min_row; r <= max_row; ++r) {
      long long v = table.at(r, c);
      if (v != 0)
        width[static_cast<size_t>(c)] = std::max(width[static_cast<size_t>(c)], cell(v).size());
    }
  }
  size_t label_width = std::string("total:").size();
  for (int r = min_row; r <= max_row; ++r)
    label_width = std::max(label_width, std::to_string(r).size() + 1);

  std::ostringstream out;
  auto pad = [&](const std::string& s, size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  out << pad("", label_width);
  for (int c = 0; c <= max_col; ++c)
    out << "  " << pad(std::to_string(c), width[static_cast<size_t>(c)]);
  out << "\n" << pad("total:", label_width);
  for (int c = 0; c <= max_col; ++c)
    out << "  " << pad(cell(totals[static_cast<size_t>(c)]), width[static_cast<size_t>(c)]);
  out << "\n";
  for (int r = min_row; r <= max_row; ++r) {
    out << pad(std::to_string(r) + ":", label_width);
    for (int c = 0; c <= max_col; ++c) {
      long long v = table.at(r, c);
      out << "  " << pad(v == 0 ? "." : cell(v), width[static_cast<size_t>(c)]);
    }
    out << "\n";
  }
  return out.str();
}

std::string format_betti_table_json(const BettiTable& table, bool pretty) {
  json entries = json::array();
  for (const auto& [key, count] : table.entries()) {
    json e;
    e["i"] = key.second;
    e["degree"] = key.first + key.second;  // total degree |a|
    e["count"] = count;
    entries.push_back(std::move(e));
  }
  json j;
  j["entries"] = std::move(entries);
  return j.dump(pretty ? 2 : -1);
}

std::string format_betti_data_json(const BettiData& data, bool pretty) {
  json entries = json::array();
  for (const auto& [key, count] : data.entries()) {
    json e;
    e["i"] = key.first;
    e["multidegree"] = key.second;
    e["count"] = count;
    entries.push_back(std::move(e));
  }
  json j;
  j["vars"] = data.ring().vars();
  j["entries"] = std::move(entries);
  return j.dump(pretty ? 2 : -1);
}

}  // namespace monideal
