#pragma once

namespace cabletract {

/// Parses argv and regenerates the requested tables and figure data. Returns the exit status.
int run_cli(int argc, char** argv);

}  // namespace cabletract
