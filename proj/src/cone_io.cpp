#include <cstdio>
#include <fstream>
#include <sstream>

#include "shoulder/errors.hpp"
#include "shoulder/io.hpp"

#include "json.hpp"

namespace shoulder {

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void write_vec_line(std::ostream& out, const char* tag, const Vec3& v) {
    out << tag << " " << format_full(v.x) << " " << format_full(v.y) << " "
        << format_full(v.z) << "\n";
}

Vec3 read_vec(std::istringstream& ss, const std::string& path) {
    Vec3 v;
    if (!(ss >> v.x >> v.y >> v.z))
        throw ParseError("malformed vector line in cone artifact " + path);
    return v;
}

} // namespace

void write_cone_artifact(const ReachCone& cone, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << "reach-cone-artifact v1\n";
    out << "n " << cone.size() << "\n";
    out << "scheme "
        << (cone.scheme == InterpolationScheme::Linear ? "linear" : "ellipse") << "\n";
    for (const Vec3& p : cone.boundary_points) write_vec_line(out, "vertex", p);
    write_vec_line(out, "visible", cone.visible_point);
    for (const Vec3& b : cone.edge_normals_B) write_vec_line(out, "edge_normal", b);
    for (const Vec3& s : cone.wedge_normals_S) write_vec_line(out, "wedge_normal", s);
}

ReachCone load_cone_artifact(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open cone artifact: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "reach-cone-artifact v1")
        throw ParseError("not a cone artifact: " + path);

    int n = 0;
    InterpolationScheme scheme = InterpolationScheme::Linear;
    std::vector<Vec3> vertices;
    Vec3 visible;
    std::vector<Vec3> edge_normals, wedge_normals;
    bool saw_visible = false;

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "n") {
            if (!(ss >> n) || n < 4) throw ParseError("bad vertex count in " + path);
        } else if (tag == "scheme") {
            std::string s;
            ss >> s;
            if (s == "linear") scheme = InterpolationScheme::Linear;
            else if (s == "ellipse") scheme = InterpolationScheme::EllipseQuadrant;
            else throw ParseError("unknown scheme '" + s + "' in " + path);
        } else if (tag == "vertex") {
            vertices.push_back(read_vec(ss, path));
        } else if (tag == "visible") {
            visible = read_vec(ss, path);
            saw_visible = true;
        } else if (tag == "edge_normal") {
            edge_normals.push_back(read_vec(ss, path));
        } else if (tag == "wedge_normal") {
            wedge_normals.push_back(read_vec(ss, path));
        } else {
            throw ParseError("unknown tag '" + tag + "' in " + path);
        }
    }
    if (static_cast<int>(vertices.size()) != n || !saw_visible ||
        edge_normals.size() != vertices.size() || wedge_normals.size() != vertices.size())
        throw ParseError("incomplete cone artifact: " + path);

    // rebuild the wedge tables from the stored boundary and visible point;
    // recomputing from identical doubles reproduces the stored normals
    // bit-exactly, which the check below confirms
    ReachCone cone = assemble_with_visible(std::move(vertices), visible, scheme);
    for (size_t i = 0; i < edge_normals.size(); ++i) {
        if (norm(cone.edge_normals_B[i] - edge_normals[i]) > 1e-12 ||
            norm(cone.wedge_normals_S[i] - wedge_normals[i]) > 1e-12)
            throw ParseError("stored normals disagree with the stored boundary in " + path);
    }
    return cone;
}

void write_log_csv(const TrajectoryLog& log, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << "t,flexion_rad,abduction_rad,humeral_rad,omega_f,omega_a,omega_h,"
           "tau_f_Ncm,tau_a_Ncm,tau_h_Ncm,fx_N,fy_N,fz_N,"
           "stau_f_Ncm,stau_a_Ncm,stau_h_Ncm,regime,slip\n";
    for (const LogRow& r : log.rows) {
        out << format_full(r.t) << "," << format_full(r.pose.theta_flexion) << ","
            << format_full(r.pose.phi_abduction) << "," << format_full(r.pose.gamma_humeral);
        for (double w : r.pose.omega) out << "," << format_full(w);
        for (double t : r.torque.tau_Ncm) out << "," << format_full(t);
        for (double f : r.sensed_force_N) out << "," << format_full(f);
        for (double t : r.sensed_torque_Ncm) out << "," << format_full(t);
        out << "," << (r.regime == Regime::TendonStretch ? "tendon_stretch" : "free_rom");
        out << "," << (r.slip ? 1 : 0) << "\n";
    }
}

void write_log_summary_json(const TrajectoryLog& log, const std::string& path) {
    nlohmann::json j;
    j["rate_hz"] = log.rate_hz;
    j["rows"] = log.rows.size();
    j["peak_joint_torque_Ncm"] = log.summary.peak_joint_torque_Ncm;
    j["peak_motor_torque_Ncm"] = log.summary.peak_motor_torque_Ncm;
    j["manipulator_work_Ncm_rad"] = log.summary.manipulator_work_Ncm_rad;
    j["damping_dissipation_Ncm_rad"] = log.summary.damping_dissipation_Ncm_rad;
    j["slip_count"] = log.summary.slip_count;
    j["first_tendon_contact_abduction_deg"] =
        log.summary.first_tendon_contact_abduction_deg;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

} // namespace shoulder
