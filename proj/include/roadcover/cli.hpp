#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace roadcover {

// Command-line entry point. args excludes the program name. Exit status:
// 0 success, 2 verification found uncovered roads, 64 usage error, 65
// malformed or unsupported instance, 66 file error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roadcover
