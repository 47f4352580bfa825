#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace potkit::cli {

inline constexpr int exit_ok = 0;
/// A refutation was found while --expect-valid was given.
inline constexpr int exit_refuted = 1;
inline constexpr int exit_usage = 2;

/// Runs one command. `args` excludes the program name; `in` is read when a JSON input is "-".
///
///   parse      --formula F
///   check      --formula F --frame FILE        (a model file checks its own valuation)
///   frame      props --frame FILE | enumerate --size N --class C [--exact]
///   decide     --formula F --theory T --bound N
///   system     build NAME | report | certify | refute | compare
///   ordinal    EXPR [--add X] [--mul X] [--closed-below G]
///   finstruct  automorphisms | definable | closure | top-down --structure FILE
///
/// Every command accepts --json; frame and system outputs also accept --dot.
int run( const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err );

} // namespace potkit::cli
