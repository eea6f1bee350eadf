#ifndef RCS_CLI_RUN_HPP
#define RCS_CLI_RUN_HPP

#include "config.hpp"

namespace rcs::cli {

/// Verbosity from the RCS_LOG environment variable: quiet|warn|info|debug.
int log_level();
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

/// Executes a validated RunConfig. Returns the process exit status:
/// 0 success, 3 when tracked bound/resonance families carry match-failure
/// flags (results are still written). Config errors (1) and numerical
/// failures (2) surface as exceptions handled by the caller.
int run_job(const RunConfig& rc);

} // namespace rcs::cli

#endif
