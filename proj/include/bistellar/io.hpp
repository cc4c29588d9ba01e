#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bistellar/triangulation.hpp"

namespace bistellar {

// Facet-list text format: '#' lines and blank lines are ignored, every other
// line holds whitespace-separated positive integers (one facet per line).
// Arity is not checked here; Triangulation::from_rows does that.
std::vector<std::vector<std::int64_t>> read_facet_rows(std::istream& in);

Triangulation read_triangulation(std::istream& in, Relabel relabel = Relabel::Preserve);
Triangulation load_triangulation(const std::string& path, Relabel relabel = Relabel::Preserve);

// One sorted facet per line, LF endings, no comments.
void write_facets(std::ostream& out, const Triangulation& t);
std::string facets_to_string(const Triangulation& t);

}  // namespace bistellar
