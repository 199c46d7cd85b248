#include "bpdkit/render.hpp"

#include <sstream>

namespace bpdkit {

namespace {

const char* macro(Tile t) {
  switch (t) {
    case Tile::Blank: return "\\nowire";
    case Tile::Vertical: return "\\vwire";
    case Tile::Horizontal: return "\\hwire";
    case Tile::R: return "\\are";
    case Tile::J: return "\\jay";
    case Tile::Cross: return "\\cross";
    case Tile::Bump: return "\\bump";
  }
  return "\\nowire";
}

}  // namespace

std::string render_ascii(const BumplessPipeDream& b) {
  std::string out;
  for (const auto& row : b.rows()) out += row + "\n";
  return out;
}

std::string render_ascii(const Tableau& t) {
  std::ostringstream os;
  for (const auto& row : t.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
    os << '\n';
  }
  return os.str();
}

// Node (x, y) holds cell (n - y, x + 1), as in the usual drawings.
std::string render_tikz(const BumplessPipeDream& b) {
  const int n = b.n();
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=0.4]\n";
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) os << "\\node at (" << x << "," << y << ") {" << macro(b.at(n - y, x + 1)) << "};\n";
    os << "\n";
  }
  os << "\\draw[thick] (-0.5,-0.5) -- (-0.5," << n - 0.5 << ") -- (" << n - 0.5 << "," << n - 0.5 << ") -- ("
     << n - 0.5 << ",-0.5) -- (-0.5,-0.5);\n\n";
  for (int x = 0; x < n; ++x) os << "\\node at (" << x << ",-1) {" << x + 1 << "};\n";
  const auto check = validate_bpd(b, true);
  if (check.ok()) {
    const Routing r = route(b);
    std::vector<int> exit(n + 1, 0);
    for (int label = 1; label <= n; ++label) exit[r.paths[label - 1].back().row] = label;
    os << "\n";
    for (int row = 1; row <= n; ++row) os << "\\node at (" << n << "," << n - row << ") {" << exit[row] << "};\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string render_tikz(const PipeDream& p) {
  const int n = p.n();
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=0.4]\n";
  for (int y = 0; y < n; ++y) {
    const int row = n - y;
    for (int x = 0; x + row <= n; ++x) {
      const Cell c{row, x + 1};
      const char* m = row + c.col == n + 1 ? "\\jay" : (p.has_cross(c) ? "\\cross" : "\\bump");
      os << "\\node at (" << x << "," << y << ") {" << m << "};\n";
    }
    os << "\n";
  }
  os << "\\draw[thick] (-0.5,-0.5) -- (-0.5," << n - 0.5 << ") -- (" << n - 0.5 << "," << n - 0.5 << ");\n\n";
  for (int x = 0; x < n; ++x) os << "\\node at (" << x << "," << n << ") {" << x + 1 << "};\n";
  os << "\n";
  const auto w = pd_permutation(p);
  for (int row = 1; row <= n; ++row) os << "\\node at (-1," << n - row << ") {" << w(row) << "};\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string render_tikz(const Tableau& t) {
  std::ostringstream os;
  os << "\\begin{ytableau}\n";
  for (const auto& row : t.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " & " : "") << row[k];
    os << " \\\\\n";
  }
  os << "\\end{ytableau}\n";
  return os.str();
}

std::string tikz_macros() {
  // Each tile is a unit square centred on its node.
  return R"(\newcommand{\tile}[1]{\tikz[baseline=-0.5ex,scale=0.4]{\path (-0.5,-0.5) rectangle (0.5,0.5); #1}}
\newcommand{\nowire}{\tile{}}
\newcommand{\vwire}{\tile{\draw[thick] (0,-0.5) -- (0,0.5);}}
\newcommand{\hwire}{\tile{\draw[thick] (-0.5,0) -- (0.5,0);}}
\newcommand{\are}{\tile{\draw[thick] (0,-0.5) arc (180:90:0.5);}}
\newcommand{\jay}{\tile{\draw[thick] (-0.5,0) arc (270:360:0.5);}}
\newcommand{\cross}{\tile{\draw[thick] (0,-0.5) -- (0,0.5); \draw[thick] (-0.5,0) -- (0.5,0);}}
\newcommand{\bump}{\tile{\draw[thick] (0,-0.5) arc (180:90:0.5); \draw[thick] (-0.5,0) arc (270:360:0.5);}}
)";
}

std::string tikz_document(const std::string& body) {
  return "\\documentclass[tikz]{standalone}\n\\usepackage{ytableau}\n" + tikz_macros() +
         "\\begin{document}\n" + body + "\\end{document}\n";
}

}  // namespace bpdkit
