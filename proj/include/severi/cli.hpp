#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace severi {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInconsistent = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// usage text and progress to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace severi
