#pragma once

#include <optional>
#include <span>
#include <string>

#include "graybox/crossover.hpp"
#include "graybox/ea.hpp"

namespace graybox {

// Tuned parameter sets as published for DRILS, EA and iDPX (irace output of
// the original study, shipped as-is, not re-tuned here). Preset names look
// like "drils-dpx-nkq-k2" or "ea-px-maxsat-weighted"; iDPX has "idpx-nkq"
// and "idpx-maxsat".
struct Preset {
    std::string name;
    std::string algorithm; // "drils", "ea" or "idpx"
    CrossoverOp op = CrossoverOp::Dpx;
    int beta = 0;           // meaningful for DPX and iDPX presets
    double alpha = 0.0;     // drils
    double p_m = 0.0;       // ea
    Selection selection = Selection::Tournament; // ea
    int popsize = 0;        // ea
};

std::span<const Preset> all_presets();
std::optional<Preset> find_preset(const std::string& name);

} // namespace graybox
