#ifndef BOUNDREP_ORACLE_HPP
#define BOUNDREP_ORACLE_HPP

#include "boundrep/instance.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace boundrep {

class TooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exhaustive decision procedure for small instances.
///
/// Only the relative order of interval endpoints and bound endpoints
/// matters, so the search sweeps the line over the distinct finite bound
/// endpoints and the open gaps between them. At each endpoint it decides
/// which intervals start and which end there; inside a gap it may create
/// any number of further event points (at most 2n are ever useful).
/// Dead states are memoized.
struct OracleResult {
    bool sat = false;
    std::optional<Representation> witness;
};

OracleResult brute_force_solve(const Instance& inst, int limit = 6);

/// Place of one interval endpoint found by the oracle. `cell` uses the
/// numbering of Line (0 = ray left of all endpoints, 2a+1 = endpoint a,
/// 2a+2 = gap right of it); `step` orders event points inside a gap
/// (1, 2, ...) and is 0 at endpoints.
struct EndpointSlot {
    int cell = 0;
    int step = 0;
    friend auto operator<=>(const EndpointSlot&, const EndpointSlot&) = default;
};

struct OracleSolution {
    std::vector<EndpointSlot> left;
    std::vector<EndpointSlot> right;
};

/// Every representation up to order-equivalence, stopping after `cap`.
std::vector<OracleSolution> brute_force_all(const Instance& inst, std::size_t cap, int limit = 6);

struct SmallInstanceCounts {
    int per_graph_tiny = 10;  // bound sets per labeled graph for n = 1..3
    int per_graph_n4 = 100;   // bound sets per labeled graph for n = 4 (64 graphs)
    int n5 = 500;             // sampled (graph, bounds) pairs
    int n6 = 0;
};

/// Deterministic stream of small instances for equivalence tests. Bounds use
/// integers 0..5 and infinities, and include degenerate and overlapping cases.
std::vector<Instance> enumerate_small_instances(std::uint64_t seed, const SmallInstanceCounts& counts,
                                                GraphClass cls);

/// Random bounds for a fixed graph, drawn like enumerate_small_instances.
Instance random_small_bounds(const Graph& g, GraphClass cls, std::uint64_t seed);

} // namespace boundrep

#endif
