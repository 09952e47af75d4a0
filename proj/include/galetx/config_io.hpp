#pragma once

// Text format for point configurations:
//
//   field rational            # or: field prime 101
//   dim 2                     # r
//   points 6                  # gamma
//   1 0 0
//   ...                       # gamma rows of r+1 scalars
//
// '#' starts a comment; blank lines are ignored.

#include <string>
#include <string_view>
#include <vector>

#include "galetx/pointconfig.hpp"

namespace galetx {

FieldSpec parse_field(std::string_view text);

PointConfiguration parse_configuration(std::string_view text);
PointConfiguration read_configuration_file(const std::string& path);

// `comments` are emitted as leading '# ' lines.
std::string format_configuration(const PointConfiguration& cfg,
                                 const std::vector<std::string>& comments = {});

std::string format_vector(std::span<const Scalar> v);

}  // namespace galetx
