#include "boundrep/solve.hpp"

#include "boundrep/interval_solver.hpp"
#include "boundrep/proper_solver.hpp"

namespace boundrep {

SolveResult solve(const Instance& inst) {
    return inst.cls == GraphClass::ProperInterval ? solve_bounded_proper(inst) : solve_bounded_interval(inst);
}

} // namespace boundrep
