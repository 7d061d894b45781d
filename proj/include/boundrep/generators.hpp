#ifndef BOUNDREP_GENERATORS_HPP
#define BOUNDREP_GENERATORS_HPP

#include "boundrep/instance.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace boundrep {

/// Intersection graph of closed intervals, by a sweep over sorted left ends.
Graph graph_of_intervals(std::span<const Interval> intervals);

enum class GenKind { RandomInterval, RandomProper, Repext, Adversarial };

GenKind parse_gen_kind(std::string_view text);
std::string to_string(GenKind k);

struct GenOptions {
    GenKind kind = GenKind::RandomInterval;
    int n = 10;
    std::uint64_t seed = 1;
    bool sat_only = false;
    /// Class written into the instance; random-proper always uses proper-int.
    GraphClass cls = GraphClass::Interval;
};

/// Deterministic per seed (same bytes on every platform). Graphs come from
/// random intervals, so they are interval graphs (proper ones for
/// random-proper). Bounds are drawn around those intervals; without
/// `sat_only` some of them are shifted away, which may make the instance
/// UNSAT.
Instance generate(const GenOptions& opt);

/// The intervals the last bounds were drawn around, for tests.
struct Generated {
    Instance instance;
    std::vector<Interval> witness;
};
Generated generate_with_witness(const GenOptions& opt);

} // namespace boundrep

#endif
