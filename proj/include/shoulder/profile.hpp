#ifndef SHOULDER_PROFILE_HPP
#define SHOULDER_PROFILE_HPP

#include <iosfwd>
#include <string>

#include "shoulder/anatomy.hpp"
#include "shoulder/harness.hpp"

namespace shoulder {

/// Parses the sectioned key-value profile document. Unknown sections or keys
/// are rejected (SchemaError); malformed lines raise ParseError with the line
/// number; invariant violations raise RangeError.
SubjectProfile load_subject_profile(std::istream& in);
SubjectProfile load_subject_profile_file(const std::string& path);
SubjectProfile parse_subject_profile(const std::string& text);

/// Full-precision round-trippable serialization of a profile.
std::string serialize_subject_profile(const SubjectProfile& profile);

/// Trajectory documents share the profile syntax: a [trajectory] section and
/// repeated waypoint rows, plus an optional [grasp] section.
struct TrajectoryFile {
    Trajectory trajectory;
    GraspModel grasp;
    bool has_grasp = false;
};
TrajectoryFile load_trajectory_file(const std::string& path);
TrajectoryFile parse_trajectory(const std::string& text);

} // namespace shoulder

#endif
