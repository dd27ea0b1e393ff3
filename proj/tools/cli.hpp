#pragma once

#include <ostream>

#include "epq/verification.hpp"

namespace epq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Body of `verify-paper`; the finder can be swapped to inject faults.
int verify_paper(std::ostream& out, WitnessFinder finder = {});

}  // namespace epq::cli
