#ifndef SHOULDER_IO_HPP
#define SHOULDER_IO_HPP

#include <string>

#include "shoulder/anatomy.hpp"
#include "shoulder/harness.hpp"

namespace shoulder {

/// Plain-text cone artifact, full precision; reloads bit-exactly.
void write_cone_artifact(const ReachCone& cone, const std::string& path);
ReachCone load_cone_artifact(const std::string& path);

/// Fixed-schema CSV: '.' decimal, comma separator, LF line endings.
/// Columns: t,flexion_rad,abduction_rad,humeral_rad,omega_f,omega_a,omega_h,
/// tau_f_Ncm,tau_a_Ncm,tau_h_Ncm,fx_N,fy_N,fz_N,stau_f_Ncm,stau_a_Ncm,
/// stau_h_Ncm,regime,slip
void write_log_csv(const TrajectoryLog& log, const std::string& path);

/// JSON run summary (peak torques, energy totals, slip count, first tendon
/// contact).
void write_log_summary_json(const TrajectoryLog& log, const std::string& path);

std::string format_full(double v);  // %.17g

} // namespace shoulder

#endif
