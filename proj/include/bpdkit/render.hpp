#pragma once

#include <string>

#include "bpdkit/bpd.hpp"
#include "bpdkit/pipedream.hpp"
#include "bpdkit/tableau.hpp"

namespace bpdkit {

/// One line per row, tile characters as stored.
std::string render_ascii(const BumplessPipeDream& b);
/// Rows of entries separated by spaces.
std::string render_ascii(const Tableau& t);

/// tikzpicture using the tile macros \nowire \vwire \hwire \are \jay \cross
/// \bump, with column labels below and exit labels on the right.
std::string render_tikz(const BumplessPipeDream& b);
/// Staircase drawing with \cross, \bump and \jay for the closing elbows.
std::string render_tikz(const PipeDream& p);
/// ytableau environment.
std::string render_tikz(const Tableau& t);

/// Definitions of the tile macros, for wrapping the pictures in a document.
std::string tikz_macros();
/// A standalone LaTeX document around `body`.
std::string tikz_document(const std::string& body);

}  // namespace bpdkit
