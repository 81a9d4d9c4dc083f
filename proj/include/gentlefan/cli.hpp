#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gf::cli {

// exit codes: 0 ok / yes, 1 negative verdict, 2 usage or input error, 3 internal error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace gf::cli
