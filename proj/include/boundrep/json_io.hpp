#ifndef BOUNDREP_JSON_IO_HPP
#define BOUNDREP_JSON_IO_HPP

#include "boundrep/instance.hpp"
#include "boundrep/interval_solver.hpp"
#include "boundrep/proper_solver.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace boundrep {

/// Malformed or inconsistent JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"n", "edges", "class", "bounds": [{"L": [lo, hi], "R": [lo, hi]}]}, with
/// rationals written as "p/q" strings (plain integers are accepted too).
/// A missing "class" means "int"; missing "bounds" means unbounded.
Instance parse_instance(std::string_view text);
std::string instance_to_json(const Instance& inst);

/// Accepts a solver result ({"status": "sat", "intervals": ...}) or just an
/// object with "intervals". Throws ParseError on UNSAT results.
Representation parse_representation(std::string_view text);

/// {"status", "intervals"} or {"status", "reason", "detail"}; `trace_json`
/// (a JSON document) is attached under "trace" when not empty.
std::string result_to_json(const SolveResult& result, const std::string& trace_json = {});

std::string trace_to_json(const IntervalTrace& trace);
std::string trace_to_json(const ProperTrace& trace);

} // namespace boundrep

#endif
