#ifndef BOUNDREP_ORACLE_CHECK_HPP
#define BOUNDREP_ORACLE_CHECK_HPP

#include "boundrep/oracle.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace boundrep {

struct OracleCheckOptions {
    GraphClass cls = GraphClass::Interval;
    std::uint64_t seed = 1;
    SmallInstanceCounts counts;
    int threads = 0; // 0: all hardware threads
    /// Self-test: the solver under check ignores the bounds of the last
    /// vertex, which the comparison must notice.
    bool inject_bug = false;
};

struct OracleCheckReport {
    std::size_t checked = 0;
    std::size_t sat = 0; // according to the oracle
    std::size_t mismatches = 0;
    /// Lowest-numbered mismatching instance, so the result does not depend
    /// on the thread count.
    std::optional<Instance> first_counterexample;
};

/// Worker count: `requested` (or the hardware count when 0), capped by the
/// BOUNDREP_THREADS environment variable when that is a positive integer.
int worker_count(int requested);

/// Runs the solver and the exhaustive oracle on every enumerated instance.
/// A mismatch is a different SAT/UNSAT answer or an invalid representation.
OracleCheckReport oracle_check(const OracleCheckOptions& opt);

} // namespace boundrep

#endif
