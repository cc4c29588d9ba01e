#include "bistellar/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bistellar/error.hpp"

namespace bistellar {

std::vector<std::vector<std::int64_t>> read_facet_rows(std::istream& in) {
  std::vector<std::vector<std::int64_t>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::vector<std::int64_t> row;
    const char* p = line.data() + first;
    const char* end = line.data() + line.size();
    while (p < end) {
      if (*p == ' ' || *p == '\t') {
        ++p;
        continue;
      }
      std::int64_t value = 0;
      auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc{} || (next < end && *next != ' ' && *next != '\t')) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": '" + line + "'");
      }
      row.push_back(value);
      p = next;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Triangulation read_triangulation(std::istream& in, Relabel relabel) {
  return Triangulation::from_rows(read_facet_rows(in), relabel);
}

Triangulation load_triangulation(const std::string& path, Relabel relabel) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return read_triangulation(in, relabel);
}

void write_facets(std::ostream& out, const Triangulation& t) { out << facets_to_string(t); }

std::string facets_to_string(const Triangulation& t) {
  std::string s;
  s.reserve(t.facets().size() * 12);
  for (const auto& f : t.facets()) {
    s += std::to_string(f[0]);
    for (std::size_t i = 1; i < 4; ++i) {
      s += ' ';
      s += std::to_string(f[i]);
    }
    s += '\n';
  }
  return s;
}

}  // namespace bistellar
