#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace framepot::cli {

inline constexpr const char *kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Runs one command. args excludes the program name. Returns the process exit
/// code: 0 on success, 2 for usage or parse errors, 1 for computation errors.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int dispatch(int argc, const char *const *argv);

}  // namespace framepot::cli
