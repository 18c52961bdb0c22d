#include "shoulder/profile.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "shoulder/errors.hpp"

namespace shoulder {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& text, int line_no) {
    size_t pos = 0;
    double v;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected a number, got '" +
                         text + "'");
    }
    if (pos != text.size())
        throw ParseError("line " + std::to_string(line_no) + ": trailing characters after '" +
                         text + "'");
    return v;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct KeyValue {
    std::string section;
    std::string key;
    std::string value;
    int line_no;
};

// shared scanner for all sectioned documents
std::vector<KeyValue> scan_document(std::istream& in) {
    std::vector<KeyValue> out;
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("line " + std::to_string(line_no) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ParseError("line " + std::to_string(line_no) + ": empty section name");
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ParseError("line " + std::to_string(line_no) + ": empty key");
        if (section.empty())
            throw SchemaError("line " + std::to_string(line_no) + ": key '" + key +
                              "' outside any section");
        out.push_back({section, key, value, line_no});
    }
    return out;
}

std::vector<double> parse_row(const std::string& value, size_t expected, int line_no) {
    std::istringstream ss(value);
    std::vector<double> vals;
    std::string tok;
    while (ss >> tok) vals.push_back(parse_number(tok, line_no));
    if (vals.size() != expected)
        throw ParseError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(expected) + " numbers, got " +
                         std::to_string(vals.size()));
    return vals;
}

} // namespace

SubjectProfile load_subject_profile(std::istream& in) {
    SubjectProfile p;
    bool have_limits[4] = {false, false, false, false};
    bool saw_limits_section = false;

    for (const KeyValue& kv : scan_document(in)) {
        const std::string& s = kv.section;
        const std::string& k = kv.key;
        if (s == "profile") {
            if (k == "name") p.name = kv.value;
            else throw SchemaError("line " + std::to_string(kv.line_no) +
                                   ": unknown key '" + k + "' in [profile]");
        } else if (s == "limits") {
            saw_limits_section = true;
            double v = parse_number(kv.value, kv.line_no);
            if (k == "flexion_max_deg") { p.limits.flexion_max_deg = v; have_limits[0] = true; }
            else if (k == "extension_max_deg") { p.limits.extension_max_deg = v; have_limits[1] = true; }
            else if (k == "abduction_max_deg") { p.limits.abduction_max_deg = v; have_limits[2] = true; }
            else if (k == "adduction_max_deg") { p.limits.adduction_max_deg = v; have_limits[3] = true; }
            else throw SchemaError("line " + std::to_string(kv.line_no) +
                                   ": unknown key '" + k + "' in [limits]");
        } else if (s == "humeral") {
            double v = parse_number(kv.value, kv.line_no);
            if (k == "medial_deg") p.humeral_medial_deg = v;
            else if (k == "lateral_deg") p.humeral_lateral_deg = v;
            else throw SchemaError("line " + std::to_string(kv.line_no) +
                                   ": unknown key '" + k + "' in [humeral]");
        } else if (s == "arm") {
            double v = parse_number(kv.value, kv.line_no);
            if (k == "upper_arm_length_m") p.upper_arm_length_m = v;
            else if (k == "moment_arm_m") p.moment_arm_m = v;
            else throw SchemaError("line " + std::to_string(kv.line_no) +
                                   ": unknown key '" + k + "' in [arm]");
        } else if (s == "haptics") {
            if (k == "spring_model") {
                if (kv.value == "linear") p.spring.kind = TendonModel::Kind::Linear;
                else if (kv.value == "quadratic") p.spring.kind = TendonModel::Kind::Quadratic;
                else throw ParseError("line " + std::to_string(kv.line_no) +
                                      ": spring_model must be linear or quadratic");
                continue;
            }
            double v = parse_number(kv.value, kv.line_no);
            if (k == "damping_Nms_per_rad") p.damping_Nms_per_rad = v;
            else if (k == "torque_ceiling_Ncm") p.torque_ceiling_Ncm = v;
            else if (k == "k_linear_Ncm_per_deg") p.spring.k_linear_Ncm_per_deg = v;
            else if (k == "quad_a2") p.spring.quad_a2 = v;
            else if (k == "quad_a1") p.spring.quad_a1 = v;
            else if (k == "quad_a0") p.spring.quad_a0 = v;
            else if (k == "clamp_min_Ncm_per_deg") p.spring.clamp_min_Ncm_per_deg = v;
            else if (k == "clamp_max_Ncm_per_deg") p.spring.clamp_max_Ncm_per_deg = v;
            else if (k == "humeral_spring_scale") p.humeral_spring_scale = v;
            else throw SchemaError("line " + std::to_string(kv.line_no) +
                                   ": unknown key '" + k + "' in [haptics]");
        } else if (s == "coupling") {
            if (k != "row")
                throw SchemaError("line " + std::to_string(kv.line_no) +
                                  ": unknown key '" + k + "' in [coupling]");
            std::vector<double> v = parse_row(kv.value, 5, kv.line_no);
            p.coupling.push_back({v[0], {v[1], v[2], v[3], v[4]}});
        } else {
            throw SchemaError("line " + std::to_string(kv.line_no) + ": unknown section [" +
                              s + "]");
        }
    }

    if (!saw_limits_section) throw SchemaError("missing mandatory [limits] section");
    const char* names[4] = {"flexion_max_deg", "extension_max_deg", "abduction_max_deg",
                            "adduction_max_deg"};
    for (int i = 0; i < 4; ++i)
        if (!have_limits[i])
            throw SchemaError(std::string("missing mandatory [limits] key ") + names[i]);

    p.validate();
    return p;
}

SubjectProfile parse_subject_profile(const std::string& text) {
    std::istringstream ss(text);
    return load_subject_profile(ss);
}

SubjectProfile load_subject_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open profile file: " + path);
    return load_subject_profile(in);
}

std::string serialize_subject_profile(const SubjectProfile& p) {
    std::ostringstream out;
    out << "[profile]\n";
    out << "name = " << p.name << "\n\n";
    out << "[limits]\n";
    out << "flexion_max_deg = " << fmt(p.limits.flexion_max_deg) << "\n";
    out << "extension_max_deg = " << fmt(p.limits.extension_max_deg) << "\n";
    out << "abduction_max_deg = " << fmt(p.limits.abduction_max_deg) << "\n";
    out << "adduction_max_deg = " << fmt(p.limits.adduction_max_deg) << "\n\n";
    out << "[humeral]\n";
    out << "medial_deg = " << fmt(p.humeral_medial_deg) << "\n";
    out << "lateral_deg = " << fmt(p.humeral_lateral_deg) << "\n\n";
    out << "[arm]\n";
    out << "upper_arm_length_m = " << fmt(p.upper_arm_length_m) << "\n";
    out << "moment_arm_m = " << fmt(p.moment_arm_m) << "\n\n";
    out << "[haptics]\n";
    out << "damping_Nms_per_rad = " << fmt(p.damping_Nms_per_rad) << "\n";
    out << "torque_ceiling_Ncm = " << fmt(p.torque_ceiling_Ncm) << "\n";
    out << "spring_model = "
        << (p.spring.kind == TendonModel::Kind::Linear ? "linear" : "quadratic") << "\n";
    out << "k_linear_Ncm_per_deg = " << fmt(p.spring.k_linear_Ncm_per_deg) << "\n";
    out << "quad_a2 = " << fmt(p.spring.quad_a2) << "\n";
    out << "quad_a1 = " << fmt(p.spring.quad_a1) << "\n";
    out << "quad_a0 = " << fmt(p.spring.quad_a0) << "\n";
    out << "clamp_min_Ncm_per_deg = " << fmt(p.spring.clamp_min_Ncm_per_deg) << "\n";
    out << "clamp_max_Ncm_per_deg = " << fmt(p.spring.clamp_max_Ncm_per_deg) << "\n";
    out << "humeral_spring_scale = " << fmt(p.humeral_spring_scale) << "\n";
    if (!p.coupling.empty()) {
        out << "\n[coupling]\n";
        for (const CouplingRow& r : p.coupling)
            out << "row = " << fmt(r.gamma_deg) << " " << fmt(r.limits.flexion_max_deg) << " "
                << fmt(r.limits.extension_max_deg) << " " << fmt(r.limits.abduction_max_deg)
                << " " << fmt(r.limits.adduction_max_deg) << "\n";
    }
    return out.str();
}

TrajectoryFile parse_trajectory(const std::string& text) {
    std::istringstream in(text);
    TrajectoryFile tf;
    bool saw_rate = false;

    for (const KeyValue& kv : scan_document(in)) {
        const std::string& s = kv.section;
        const std::string& k = kv.key;
        if (s == "trajectory") {
            if (k == "rate_hz") {
                tf.trajectory.rate_hz = parse_number(kv.value, kv.line_no);
                saw_rate = true;
            } else if (k == "interpolation") {
                if (kv.value == "joint-linear")
                    tf.trajectory.interpolation = TrajInterpolation::JointLinear;
                else if (kv.value == "cartesian-arc")
                    tf.trajectory.interpolation = TrajInterpolation::CartesianArc;
                else
                    throw ParseError("line " + std::to_string(kv.line_no) +
                                     ": interpolation must be joint-linear or cartesian-arc");
            } else {
                throw SchemaError("line " + std::to_string(kv.line_no) + ": unknown key '" +
                                  k + "' in [trajectory]");
            }
        } else if (s == "waypoints") {
            if (k != "row")
                throw SchemaError("line " + std::to_string(kv.line_no) + ": unknown key '" +
                                  k + "' in [waypoints]");
            std::vector<double> v = parse_row(kv.value, 5, kv.line_no);
            tf.trajectory.waypoints.push_back(
                {v[0], v[1], deg2rad(v[2]), deg2rad(v[3]), deg2rad(v[4])});
        } else if (s == "grasp") {
            double v = parse_number(kv.value, kv.line_no);
            tf.has_grasp = true;
            if (k == "grip_radius_m") tf.grasp.grip_radius_m = v;
            else if (k == "linear_compliance_N_per_m") tf.grasp.linear_compliance_N_per_m = v;
            else if (k == "rotational_compliance_Ncm_per_rad")
                tf.grasp.rotational_compliance_Ncm_per_rad = v;
            else if (k == "slip_threshold_N") tf.grasp.slip_threshold_N = v;
            else throw SchemaError("line " + std::to_string(kv.line_no) +
                                   ": unknown key '" + k + "' in [grasp]");
        } else {
            throw SchemaError("line " + std::to_string(kv.line_no) + ": unknown section [" +
                              s + "]");
        }
    }
    if (!saw_rate) throw SchemaError("missing mandatory [trajectory] rate_hz");
    tf.trajectory.validate();
    if (tf.has_grasp) tf.grasp.validate();
    return tf;
}

TrajectoryFile load_trajectory_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open trajectory file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_trajectory(ss.str());
}

} // namespace shoulder
