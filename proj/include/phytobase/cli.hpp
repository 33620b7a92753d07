#pragma once
// Operator command line: import, export, validate, query, search, report,
// narrate, serve.

#include <ostream>
#include <string>
#include <vector>

namespace phytobase {

// `args` excludes the program name. Returns 0 on success, 1 on a domain
// error, 2 on a usage error. `serve` blocks until SIGINT or SIGTERM.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phytobase
