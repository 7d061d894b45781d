#ifndef BOUNDREP_RENDER_HPP
#define BOUNDREP_RENDER_HPP

#include "boundrep/instance.hpp"

#include <string>

namespace boundrep {

/// One row per vertex: the interval as a thick segment, its left and right
/// bounds as thin whiskers above and below it. Infinite bound ends run to
/// the border. The output depends only on the input.
/// Throws std::invalid_argument if the sizes differ.
std::string render_svg(const Instance& inst, const Representation& rep);

} // namespace boundrep

#endif
