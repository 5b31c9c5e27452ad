#pragma once

#include <string>

#include "core/braid.hpp"

namespace braidforge {

// Deterministic ASCII grid, one row per letter. Strands are '|' columns;
// the crossing of letter +i renders "\ /" across columns i, i+1 and letter
// -i renders "/ \".
std::string render_ascii(const BraidWord& w);

}  // namespace braidforge
