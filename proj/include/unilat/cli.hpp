#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "unilat/lattice.hpp"
#include "unilat/op_table.hpp"

namespace unilat {

/// Exit statuses of every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInputError = 2;

/// Resolves "meet", "join", "drastic" or "index:<k>" (0-based, in
/// enumeration order) to a t-norm on [0,e] or a t-conorm on [e,1].
/// Throws RoleMismatch for meet/join on the wrong role and IndexOutOfRange.
OpTable resolve_sub_op(const BoundedLattice& L, Elem e, NormRole role, std::string_view spec);

/// Runs one command; `args` excludes the program name. Output is written to
/// `out` in one piece after the command has finished.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace unilat
