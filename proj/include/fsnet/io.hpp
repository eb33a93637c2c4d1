#pragma once

#include <string>

#include "fsnet/bounds.hpp"
#include "fsnet/lattice.hpp"
#include "fsnet/synth.hpp"
#include "fsnet/verify.hpp"

namespace fsnet {

// schema version 1, fixed key order, newline-terminated
std::string network_to_json(const SwapNetwork& net);
SwapNetwork network_from_json(const std::string& text);

// one line per layer
std::string network_to_text(const SwapNetwork& net);

// interaction graph with covered edges annotated by first covering layer
std::string network_to_dot(const SwapNetwork& net, const InteractionGraph& ig);

std::string bounds_to_json(const BoundsReport& rep);
std::string coverage_to_json(const CoverageReport& rep, const InteractionGraph& ig);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace fsnet
