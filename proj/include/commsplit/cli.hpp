#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace commsplit::cli {

// Exit codes: 0 success, 1 usage error, 2 internal-consistency failure,
// 3 numerical classification failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream* in = nullptr);

}  // namespace commsplit::cli
