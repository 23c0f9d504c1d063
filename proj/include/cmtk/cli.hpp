#ifndef CMTK_CLI_HPP
#define CMTK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cmtk {

/// Runs one command line. Exit codes: 0 success, 1 usage error, 2 domain
/// error, 3 budget exhausted. JSON goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cmtk");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cmtk

#endif  // CMTK_CLI_HPP
