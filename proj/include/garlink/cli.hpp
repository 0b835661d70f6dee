#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace garlink::cli {

// Dispatches a full command line (without argv[0]). Exit status: 0 on full
// pass, 1 on a failed check, 2 on input errors, 3 on divergence or an
// exhausted budget. Output is deterministic for a fixed (args, seed).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace garlink::cli
