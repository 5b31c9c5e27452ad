#include "core/render.hpp"

#include <cstdlib>
#include <sstream>

namespace braidforge {

std::string render_ascii(const BraidWord& w) {
  int n = w.strands();
  std::ostringstream out;
  auto strand_row = [&]() {
    for (int j = 0; j < n; ++j) out << (j ? " |" : "|");
    out << "\n";
  };
  strand_row();
  for (int e : w.letters()) {
    int i = std::abs(e);  // crossing spans columns i, i+1 (1-based)
    for (int j = 1; j <= n; ++j) {
      if (j > 1) out << " ";
      if (j == i)
        out << (e > 0 ? "\\" : "/");
      else if (j == i + 1)
        out << (e > 0 ? "/" : "\\");
      else
        out << "|";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace braidforge
