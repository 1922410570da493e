#pragma once

#include <iosfwd>
#include <string>

#include "nilbohr/setcore.hpp"

namespace nilbohr {

// Set text format, shared by every tool in the repo:
//
//   #window <lo> <hi>
//   <n>            single member
//   <a>-<b>        inclusive range of members
//
// The header is mandatory and comes first. Blank lines and further lines
// starting with '#' are ignored on input. Overlapping ranges union.
// serialize emits a canonical form (maximal runs, ascending) so that
// parse(serialize(s)) == s exactly.

WindowedSet parse_set_text(std::istream& in);
void serialize_set_text(const WindowedSet& s, std::ostream& out);

WindowedSet load_set_file(const std::string& path);
void save_set_file(const WindowedSet& s, const std::string& path);

std::string set_to_text(const WindowedSet& s);
WindowedSet set_from_text(const std::string& text);

}  // namespace nilbohr
