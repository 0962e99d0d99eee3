#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ferrers/graph.hpp"

namespace ferrers::cli {

/// Parses family tokens such as {"kmn-minus-matching", "4", "4", "2"} or
/// {"union", "cycle", "8", "path", "4"}. Throws InputError.
FamilySpec parse_family(const std::vector<std::string>& tokens);

/// Edge-list text when the first meaningful line starts with `bip`, matrix text otherwise.
BipartiteGraph parse_graph_text(const std::string& text);

/// Runs one subcommand; `args` excludes the program name. Returns the exit status.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ferrers::cli
