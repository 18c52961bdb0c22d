#include "shoulder/cspace.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "shoulder/errors.hpp"
#include "shoulder/limits.hpp"

namespace shoulder {

double CSpaceGrid::cell_weight(int polar_row) const {
    if (weighting == Weighting::Flat)
        return 1.0 / (static_cast<double>(n_azimuth) * n_polar);
    double lo = kPi * polar_row / n_polar;
    double hi = kPi * (polar_row + 1) / n_polar;
    return (std::cos(lo) - std::cos(hi)) * (2.0 * kPi / n_azimuth);
}

double CSpaceGrid::total_weight() const {
    double acc = 0.0;
    for (int j = 0; j < n_polar; ++j) acc += cell_weight(j) * n_azimuth;
    return acc;
}

double CSpaceGrid::coverage() const {
    double acc = 0.0, tot = 0.0;
    for (int j = 0; j < n_polar; ++j) {
        double w = cell_weight(j);
        for (int i = 0; i < n_azimuth; ++i) {
            tot += w;
            if (inside[static_cast<size_t>(j) * n_azimuth + i]) acc += w;
        }
    }
    return acc / tot;
}

CSpaceGrid rasterize(const ReachCone& cone, int n_azimuth, int n_polar, Weighting weighting) {
    if (n_azimuth < 16 || n_polar < 16)
        throw RangeError("grid resolution must be at least 16 x 16");
    CSpaceGrid grid;
    grid.n_azimuth = n_azimuth;
    grid.n_polar = n_polar;
    grid.weighting = weighting;
    grid.inside.assign(static_cast<size_t>(n_azimuth) * n_polar, 0);
    for (int j = 0; j < n_polar; ++j) {
        double polar = kPi * (j + 0.5) / n_polar;
        for (int i = 0; i < n_azimuth; ++i) {
            double az = 2.0 * kPi * (i + 0.5) / n_azimuth;
            Vec3 L = direction_az_polar(az, polar);
            grid.inside[static_cast<size_t>(j) * n_azimuth + i] =
                point_in_cone(cone, L).inside ? 1 : 0;
        }
    }
    return grid;
}

OverlapReport compare(const CSpaceGrid& a, const CSpaceGrid& b) {
    if (a.n_azimuth != b.n_azimuth || a.n_polar != b.n_polar || a.weighting != b.weighting)
        throw ResolutionMismatch("grids differ in resolution or weighting");
    OverlapReport rep;
    double tot = 0.0;
    for (int j = 0; j < a.n_polar; ++j) {
        double w = a.cell_weight(j);
        for (int i = 0; i < a.n_azimuth; ++i) {
            size_t idx = static_cast<size_t>(j) * a.n_azimuth + i;
            bool ia = a.inside[idx], ib = b.inside[idx];
            tot += w;
            if (ia && ib) rep.both += w;
            else if (ia) rep.a_only += w;
            else if (ib) rep.b_only += w;
            else rep.neither += w;
        }
    }
    rep.a_only /= tot;
    rep.b_only /= tot;
    rep.both /= tot;
    rep.neither /= tot;
    return rep;
}

void write_pgm(const CSpaceGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    char header[64];
    int len = std::snprintf(header, sizeof(header), "P5\n%d %d\n255\n", grid.n_azimuth,
                            grid.n_polar);
    out.write(header, len);
    std::vector<unsigned char> row(grid.n_azimuth);
    for (int j = 0; j < grid.n_polar; ++j) {
        for (int i = 0; i < grid.n_azimuth; ++i)
            row[i] = grid.inside[static_cast<size_t>(j) * grid.n_azimuth + i] ? 255 : 0;
        out.write(reinterpret_cast<const char*>(row.data()), row.size());
    }
}

} // namespace shoulder
