#ifndef SHOULDER_COUPLING_HPP
#define SHOULDER_COUPLING_HPP

#include <vector>

#include "shoulder/anatomy.hpp"

namespace shoulder {

/// How cone_at behaves between keyed humeral orientations: pointwise slerp
/// of corresponding boundary vertices, or a literal nearest-key step.
enum class FamilyInterpolation { Slerp, NearestKey };

/// Reach cones keyed by humeral rotation; the coupled joint-limit model.
struct ConeFamily {
    std::vector<double> keys_gamma_deg;  // strictly increasing
    std::vector<ReachCone> cones;        // one per key, shared N and scheme
    FamilyInterpolation interpolation = FamilyInterpolation::Slerp;
};

ConeFamily make_cone_family(const std::vector<CouplingRow>& rows, int n_points = 64,
                            InterpolationScheme scheme = InterpolationScheme::Linear,
                            FamilyInterpolation interp = FamilyInterpolation::Slerp);

/// Family for a subject: its [coupling] rows when present, otherwise a
/// constant family holding the base limits across the humeral range.
ConeFamily default_family_for(const SubjectProfile& profile, int n_points = 64,
                              InterpolationScheme scheme = InterpolationScheme::Linear);

/// Cone at an arbitrary humeral angle. Keyed angles return the stored cone
/// exactly; in between, bracketing cones interpolate per the family strategy.
/// Throws OutOfRange outside the key span.
ReachCone cone_at(const ConeFamily& family, double gamma_deg);

/// Smallest abduction angle (degrees) at which the pure-abduction arc from
/// rest leaves cone_at(gamma); bisected to 0.01 deg. Throws NeverActivates
/// when the whole arc stays interior.
double activation_onset(const ConeFamily& family, double gamma_deg,
                        double max_abduction_deg = 180.0);

} // namespace shoulder

#endif
