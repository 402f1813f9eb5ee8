#pragma once

#include "tangentia/cli.hpp"
#include "tangentia/error.hpp"

namespace tangentia::cli {

/// Re-anchors a ParseError raised on a fragment that starts at `origin`.
ParseError relocate(const ParseError& e, const SourcePos& origin);

}  // namespace tangentia::cli
