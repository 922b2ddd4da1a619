#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotcalc {

// Full command tree, args without the program name. Exit code 0 on success,
// 1 on a domain error (message on err), 2 on a usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace knotcalc
