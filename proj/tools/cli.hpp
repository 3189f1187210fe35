#pragma once

namespace orbtop::cli {

/// Parses argv and runs one subcommand. Exit code 0 on success, 1 on a
/// domain/validation error (structured error object on stdout), 2 on a
/// usage error.
int run(int argc, char** argv);

}  // namespace orbtop::cli
