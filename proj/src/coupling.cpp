#include "shoulder/coupling.hpp"

#include <cmath>

#include "shoulder/errors.hpp"
#include "shoulder/limits.hpp"

namespace shoulder {

ConeFamily make_cone_family(const std::vector<CouplingRow>& rows, int n_points,
                            InterpolationScheme scheme, FamilyInterpolation interp) {
    if (rows.empty()) throw RangeError("cone family needs at least one coupling row");
    for (size_t i = 1; i < rows.size(); ++i)
        if (!(rows[i - 1].gamma_deg < rows[i].gamma_deg))
            throw RangeError("coupling gammas must be strictly increasing");
    ConeFamily fam;
    fam.interpolation = interp;
    for (const CouplingRow& row : rows) {
        fam.keys_gamma_deg.push_back(row.gamma_deg);
        fam.cones.push_back(build_reach_cone(row.limits, n_points, scheme));
    }
    return fam;
}

ConeFamily default_family_for(const SubjectProfile& profile, int n_points,
                              InterpolationScheme scheme) {
    if (!profile.coupling.empty())
        return make_cone_family(profile.coupling, n_points, scheme);
    std::vector<CouplingRow> rows{{profile.humeral_medial_deg, profile.limits},
                                  {profile.humeral_lateral_deg, profile.limits}};
    return make_cone_family(rows, n_points, scheme);
}

ReachCone cone_at(const ConeFamily& family, double gamma_deg) {
    const auto& keys = family.keys_gamma_deg;
    if (keys.empty()) throw OutOfRange("empty cone family");
    if (gamma_deg < keys.front() || gamma_deg > keys.back())
        throw OutOfRange("gamma " + std::to_string(gamma_deg) + " outside key span [" +
                         std::to_string(keys.front()) + ", " + std::to_string(keys.back()) + "]");
    for (size_t i = 0; i < keys.size(); ++i)
        if (gamma_deg == keys[i]) return family.cones[i];

    size_t hi = 1;
    while (keys[hi] < gamma_deg) ++hi;
    size_t lo = hi - 1;
    double t = (gamma_deg - keys[lo]) / (keys[hi] - keys[lo]);

    if (family.interpolation == FamilyInterpolation::NearestKey)
        return t <= 0.5 ? family.cones[lo] : family.cones[hi];

    const ReachCone& a = family.cones[lo];
    const ReachCone& b = family.cones[hi];
    if (a.size() != b.size())
        throw RangeError("family cones disagree on boundary size");
    std::vector<Vec3> boundary(a.size());
    for (int i = 0; i < a.size(); ++i)
        boundary[i] = normalized(slerp(a.boundary_points[i], b.boundary_points[i], t));
    const Vec3 hints[2] = {a.visible_point, b.visible_point};
    return assemble_reach_cone(std::move(boundary), a.scheme, hints);
}

double activation_onset(const ConeFamily& family, double gamma_deg, double max_abduction_deg) {
    ReachCone cone = cone_at(family, gamma_deg);
    auto outside_at = [&cone](double abduction_deg) {
        Vec3 L = arm_direction(0.0, deg2rad(abduction_deg));
        return !point_in_cone(cone, L).inside;
    };

    // coarse scan for the first exterior bracket, then bisection to 0.01 deg
    double prev = 0.0;
    double bracket_lo = -1.0, bracket_hi = -1.0;
    for (double s = 1.0; s <= max_abduction_deg + 1e-12; s += 1.0) {
        double cur = std::min(s, max_abduction_deg);
        if (outside_at(cur)) {
            bracket_lo = prev;
            bracket_hi = cur;
            break;
        }
        prev = cur;
    }
    if (bracket_hi < 0.0)
        throw NeverActivates("pure-abduction arc stays interior up to " +
                             std::to_string(max_abduction_deg) + " deg");
    while (bracket_hi - bracket_lo > 0.01) {
        double mid = 0.5 * (bracket_lo + bracket_hi);
        (outside_at(mid) ? bracket_hi : bracket_lo) = mid;
    }
    return bracket_hi;
}

} // namespace shoulder
