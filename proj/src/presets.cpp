#include "graybox/presets.hpp"

#include <array>

namespace graybox {

namespace {

const std::array<Preset, 42> kPresets = {{
    // DRILS on NKQ, K = 2
    {"drils-dpx-nkq-k2", "drils", CrossoverOp::Dpx, 1, 0.2219, 0, Selection::Tournament, 0},
    {"drils-apx-nkq-k2", "drils", CrossoverOp::Apx, 0, 0.1873, 0, Selection::Tournament, 0},
    {"drils-px-nkq-k2", "drils", CrossoverOp::Px, 0, 0.1240, 0, Selection::Tournament, 0},
    {"drils-nx-nkq-k2", "drils", CrossoverOp::Nx, 0, 0.0154, 0, Selection::Tournament, 0},
    {"drils-ux-nkq-k2", "drils", CrossoverOp::Ux, 0, 0.0159, 0, Selection::Tournament, 0},
    // DRILS on NKQ, K = 5
    {"drils-dpx-nkq-k5", "drils", CrossoverOp::Dpx, 3, 0.0462, 0, Selection::Tournament, 0},
    {"drils-apx-nkq-k5", "drils", CrossoverOp::Apx, 0, 0.0231, 0, Selection::Tournament, 0},
    {"drils-px-nkq-k5", "drils", CrossoverOp::Px, 0, 0.0191, 0, Selection::Tournament, 0},
    {"drils-nx-nkq-k5", "drils", CrossoverOp::Nx, 0, 0.0268, 0, Selection::Tournament, 0},
    {"drils-ux-nkq-k5", "drils", CrossoverOp::Ux, 0, 0.0238, 0, Selection::Tournament, 0},
    // EA on NKQ, K = 2
    {"ea-dpx-nkq-k2", "ea", CrossoverOp::Dpx, 3, 0, 0.0044, Selection::Roulette, 61},
    {"ea-apx-nkq-k2", "ea", CrossoverOp::Apx, 0, 0, 0.0172, Selection::Roulette, 72},
    {"ea-px-nkq-k2", "ea", CrossoverOp::Px, 0, 0, 0.0084, Selection::Rank, 47},
    {"ea-nx-nkq-k2", "ea", CrossoverOp::Nx, 0, 0, 0.0007, Selection::Roulette, 37},
    {"ea-ux-nkq-k2", "ea", CrossoverOp::Ux, 0, 0, 0.0003, Selection::Rank, 41},
    // EA on NKQ, K = 5
    {"ea-dpx-nkq-k5", "ea", CrossoverOp::Dpx, 2, 0, 0.0080, Selection::Rank, 15},
    {"ea-apx-nkq-k5", "ea", CrossoverOp::Apx, 0, 0, 0.0002, Selection::Roulette, 27},
    {"ea-px-nkq-k5", "ea", CrossoverOp::Px, 0, 0, 0.0034, Selection::Rank, 70},
    {"ea-nx-nkq-k5", "ea", CrossoverOp::Nx, 0, 0, 0.0008, Selection::Rank, 54},
    {"ea-ux-nkq-k5", "ea", CrossoverOp::Ux, 0, 0, 0.0006, Selection::Roulette, 14},
    // DRILS on MAX-SAT, unweighted
    {"drils-dpx-maxsat-unweighted", "drils", CrossoverOp::Dpx, 4, 0.0582, 0, Selection::Tournament, 0},
    {"drils-apx-maxsat-unweighted", "drils", CrossoverOp::Apx, 0, 0.0941, 0, Selection::Tournament, 0},
    {"drils-px-maxsat-unweighted", "drils", CrossoverOp::Px, 0, 0.0482, 0, Selection::Tournament, 0},
    {"drils-nx-maxsat-unweighted", "drils", CrossoverOp::Nx, 0, 0.0299, 0, Selection::Tournament, 0},
    {"drils-ux-maxsat-unweighted", "drils", CrossoverOp::Ux, 0, 0.0571, 0, Selection::Tournament, 0},
    // DRILS on MAX-SAT, weighted
    {"drils-dpx-maxsat-weighted", "drils", CrossoverOp::Dpx, 2, 0.1832, 0, Selection::Tournament, 0},
    {"drils-apx-maxsat-weighted", "drils", CrossoverOp::Apx, 0, 0.1870, 0, Selection::Tournament, 0},
    {"drils-px-maxsat-weighted", "drils", CrossoverOp::Px, 0, 0.0996, 0, Selection::Tournament, 0},
    {"drils-nx-maxsat-weighted", "drils", CrossoverOp::Nx, 0, 0.0241, 0, Selection::Tournament, 0},
    {"drils-ux-maxsat-weighted", "drils", CrossoverOp::Ux, 0, 0.0214, 0, Selection::Tournament, 0},
    // EA on MAX-SAT, unweighted
    {"ea-dpx-maxsat-unweighted", "ea", CrossoverOp::Dpx, 5, 0, 0.0038, Selection::Rank, 18},
    {"ea-apx-maxsat-unweighted", "ea", CrossoverOp::Apx, 0, 0, 0.0096, Selection::Tournament, 19},
    {"ea-px-maxsat-unweighted", "ea", CrossoverOp::Px, 0, 0, 0.0051, Selection::Tournament, 27},
    {"ea-nx-maxsat-unweighted", "ea", CrossoverOp::Nx, 0, 0, 0.0047, Selection::Rank, 18},
    {"ea-ux-maxsat-unweighted", "ea", CrossoverOp::Ux, 0, 0, 0.0019, Selection::Rank, 18},
    // EA on MAX-SAT, weighted
    {"ea-dpx-maxsat-weighted", "ea", CrossoverOp::Dpx, 2, 0, 0.0018, Selection::Rank, 52},
    {"ea-apx-maxsat-weighted", "ea", CrossoverOp::Apx, 0, 0, 0.0069, Selection::Tournament, 24},
    {"ea-px-maxsat-weighted", "ea", CrossoverOp::Px, 0, 0, 0.0086, Selection::Rank, 20},
    {"ea-nx-maxsat-weighted", "ea", CrossoverOp::Nx, 0, 0, 0.0020, Selection::Rank, 27},
    {"ea-ux-maxsat-weighted", "ea", CrossoverOp::Ux, 0, 0, 0.0012, Selection::Tournament, 78},
    // iDPX
    {"idpx-nkq", "idpx", CrossoverOp::Dpx, 5, 0, 0, Selection::Tournament, 0},
    {"idpx-maxsat", "idpx", CrossoverOp::Dpx, 5, 0, 0, Selection::Tournament, 0},
}};

} // namespace

std::span<const Preset> all_presets() { return kPresets; }

std::optional<Preset> find_preset(const std::string& name) {
    for (const Preset& p : kPresets)
        if (p.name == name)
            return p;
    return std::nullopt;
}

} // namespace graybox
