#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbound::cli {

/// Runs one command line (without argv[0]). Exit codes: 0 success,
/// 1 domain error, 2 usage error, 3 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The text rendering of a result document (the exact non-JSON output).
std::string render_text(const std::string& json_document);

} // namespace gbound::cli
