#ifndef SHOULDER_CSPACE_HPP
#define SHOULDER_CSPACE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "shoulder/anatomy.hpp"

namespace shoulder {

enum class Weighting { SolidAngle, Flat };

/// Reachability classification of the (azimuth, polar) sphere grid.
struct CSpaceGrid {
    int n_azimuth = 0;
    int n_polar = 0;
    Weighting weighting = Weighting::SolidAngle;
    std::vector<std::uint8_t> inside;  // row-major, polar rows x azimuth cols

    double cell_weight(int polar_row) const;
    double total_weight() const;
    double coverage() const;
};

/// Classifies every cell center against the cone. Resolution must be at
/// least 16 x 16.
CSpaceGrid rasterize(const ReachCone& cone, int n_azimuth = 360, int n_polar = 180,
                     Weighting weighting = Weighting::SolidAngle);

/// Mutually exclusive region fractions of two same-resolution grids; the four
/// fractions sum to 1.
struct OverlapReport {
    double a_only = 0.0;
    double b_only = 0.0;
    double both = 0.0;
    double neither = 0.0;
};

OverlapReport compare(const CSpaceGrid& a, const CSpaceGrid& b);

/// Binary PGM mask (P5, inside = 255). Byte-identical across runs.
void write_pgm(const CSpaceGrid& grid, const std::string& path);

} // namespace shoulder

#endif
