#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "beilc/ideal_poset.hpp"

namespace beilc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMismatch = 2;

/// The `beilc` command line: analyze | poset | sweep | cutsets.
/// `args` excludes the program name. Input "-" reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Hasse diagram in DOT: one node per element plus TOP, one edge per cover, lower -> upper.
std::string poset_to_dot(const IdealPoset& p);

}  // namespace beilc
