#pragma once

#include <string_view>
#include <vector>

#include "gsynt/labelled_graph.hpp"

namespace gsynt::cli {

/// Compiles a regular expression into a complete normalized Dfa over
/// `alphabet`. Letters are tokens over [A-Za-z0-9_@-]; concatenation is
/// the explicit '.', union is '+', Kleene star is '*', parentheses
/// group. Example: ((0.1.0.1.0.1)*+(0.-1.0.-1.0.-1)*).0
labels::Dfa compile_regexp(std::string_view expr, const std::vector<std::string>& alphabet);

}  // namespace gsynt::cli
