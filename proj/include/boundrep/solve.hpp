#ifndef BOUNDREP_SOLVE_HPP
#define BOUNDREP_SOLVE_HPP

#include "boundrep/instance.hpp"

namespace boundrep {

/// Dispatches on the instance's class.
SolveResult solve(const Instance& inst);

} // namespace boundrep

#endif
