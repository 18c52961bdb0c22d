#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "shoulder/coupling.hpp"
#include "shoulder/cspace.hpp"
#include "shoulder/errors.hpp"
#include "shoulder/harness.hpp"
#include "shoulder/io.hpp"
#include "shoulder/profile.hpp"

namespace fs = std::filesystem;
using namespace shoulder;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

InterpolationScheme parse_scheme(const std::string& s) {
    if (s == "linear") return InterpolationScheme::Linear;
    if (s == "ellipse") return InterpolationScheme::EllipseQuadrant;
    throw UsageError("scheme must be linear or ellipse");
}

std::pair<int, int> parse_resolution(const std::string& s) {
    int a = 0, b = 0;
    char sep = 0;
    std::istringstream ss(s);
    if (!(ss >> a >> sep >> b) || (sep != 'x' && sep != 'X') || a < 16 || b < 16)
        throw UsageError("resolution must look like 360x180 with both sides >= 16");
    return {a, b};
}

double grid_coverage(const CSpaceGrid& grid, Weighting w) {
    CSpaceGrid g = grid;
    g.weighting = w;
    return g.coverage();
}

int cmd_build_cone(const std::string& profile_path, int n_points, const std::string& scheme,
                   const std::string& out) {
    if (n_points < 4 || n_points % 4 != 0)
        throw UsageError("--n-points must be >= 4 and divisible by 4");
    SubjectProfile p = load_subject_profile_file(profile_path);
    ReachCone cone = build_reach_cone(p.limits, n_points, parse_scheme(scheme));
    write_cone_artifact(cone, out);
    std::cout << "wrote " << out << " (" << cone.size() << " vertices, visible point "
              << format_full(cone.visible_point.x) << " " << format_full(cone.visible_point.y)
              << " " << format_full(cone.visible_point.z) << ")\n";
    return kExitOk;
}

void apply_model_override(SubjectProfile& p, const std::string& model) {
    if (model.empty()) return;
    if (model == "linear") p.spring.kind = TendonModel::Kind::Linear;
    else if (model == "quadratic") p.spring.kind = TendonModel::Kind::Quadratic;
    else throw UsageError("--model must be linear or quadratic");
}

int cmd_check_pose(const std::string& profile_path, double flexion_deg, double abduction_deg,
                   double gamma_deg, const std::string& scheme, const std::string& model) {
    SubjectProfile p = load_subject_profile_file(profile_path);
    apply_model_override(p, model);
    ConeFamily family = default_family_for(p, 64, parse_scheme(scheme));
    ReachCone cone = cone_at(family, gamma_deg);
    Vec3 L = arm_direction(deg2rad(flexion_deg), deg2rad(abduction_deg));
    InclusionResult inc = point_in_cone(cone, L);
    AngularError err = closest_surface_rotation(cone, inc);
    JointPose pose;
    pose.theta_flexion = deg2rad(flexion_deg);
    pose.phi_abduction = deg2rad(abduction_deg);
    pose.gamma_humeral = deg2rad(gamma_deg);
    TorqueCommand cmd = render_torque(pose, err, p.spring, p.damping_Nms_per_rad,
                                      p.torque_ceiling_Ncm);
    std::cout << "inside " << (inc.inside ? "true" : "false") << "\n";
    std::cout << "wedge " << inc.wedge_index << "\n";
    std::cout << "signed_distance_d " << format_full(inc.signed_distance_d) << "\n";
    std::cout << "phi_deg " << format_full(rad2deg(err.rotation_angle_phi)) << "\n";
    std::cout << "error_deg " << format_full(rad2deg(err.flexion_error_rad)) << " "
              << format_full(rad2deg(err.abduction_error_rad)) << " "
              << format_full(rad2deg(err.humeral_error_rad)) << "\n";
    std::cout << "tau_Ncm " << format_full(cmd.tau_Ncm[0]) << " " << format_full(cmd.tau_Ncm[1])
              << " " << format_full(cmd.tau_Ncm[2]) << "\n";
    std::cout << "regime " << (cmd.regime == Regime::TendonStretch ? "tendon_stretch" : "free_rom")
              << "\n";
    return kExitOk;
}

int cmd_cspace(const std::string& profile_a, const std::string& profile_b,
               const std::string& resolution, const std::string& weighting,
               const std::string& out_dir, const std::string& format) {
    auto [naz, npol] = parse_resolution(resolution);
    Weighting w;
    if (weighting == "solid") w = Weighting::SolidAngle;
    else if (weighting == "flat") w = Weighting::Flat;
    else throw UsageError("--weighting must be solid or flat");

    fs::create_directories(out_dir);
    SubjectProfile pa = load_subject_profile_file(profile_a);
    ReachCone ca = build_reach_cone(pa.limits);
    CSpaceGrid ga = rasterize(ca, naz, npol, w);
    write_pgm(ga, out_dir + "/" + pa.name + "_mask.pgm");

    std::ostringstream txt;
    txt << "resolution " << naz << "x" << npol << "\n";
    txt << pa.name << "_coverage_solid " << format_full(grid_coverage(ga, Weighting::SolidAngle))
        << "\n";
    txt << pa.name << "_coverage_flat " << format_full(grid_coverage(ga, Weighting::Flat))
        << "\n";

    nlohmann::json j;
    j["resolution"] = {naz, npol};
    j[pa.name]["coverage_solid"] = grid_coverage(ga, Weighting::SolidAngle);
    j[pa.name]["coverage_flat"] = grid_coverage(ga, Weighting::Flat);

    if (!profile_b.empty()) {
        SubjectProfile pb = load_subject_profile_file(profile_b);
        ReachCone cb = build_reach_cone(pb.limits);
        CSpaceGrid gb = rasterize(cb, naz, npol, w);
        write_pgm(gb, out_dir + "/" + pb.name + "_mask.pgm");
        OverlapReport rep = compare(ga, gb);
        txt << pb.name << "_coverage_solid "
            << format_full(grid_coverage(gb, Weighting::SolidAngle)) << "\n";
        txt << pb.name << "_coverage_flat " << format_full(grid_coverage(gb, Weighting::Flat))
            << "\n";
        txt << "a_only " << format_full(rep.a_only) << "\n";
        txt << "b_only " << format_full(rep.b_only) << "\n";
        txt << "both " << format_full(rep.both) << "\n";
        txt << "neither " << format_full(rep.neither) << "\n";
        j[pb.name]["coverage_solid"] = grid_coverage(gb, Weighting::SolidAngle);
        j[pb.name]["coverage_flat"] = grid_coverage(gb, Weighting::Flat);
        j["overlap"] = {{"a_only", rep.a_only},
                        {"b_only", rep.b_only},
                        {"both", rep.both},
                        {"neither", rep.neither}};
    }

    {
        std::ofstream f(out_dir + "/summary.txt", std::ios::binary);
        f << txt.str();
    }
    if (format == "json") {
        std::ofstream f(out_dir + "/summary.json", std::ios::binary);
        f << j.dump(2) << "\n";
    }
    std::cout << txt.str();
    return kExitOk;
}

int cmd_tendon_curve(const std::string& profile_path, double range_deg,
                     const std::string& out) {
    TendonModel quad = TendonModel::quadratic();
    TendonModel lin = TendonModel::linear();
    if (!profile_path.empty()) {
        SubjectProfile p = load_subject_profile_file(profile_path);
        quad = p.spring;
        quad.kind = TendonModel::Kind::Quadratic;
        lin = p.spring;
        lin.kind = TendonModel::Kind::Linear;
    }
    auto curve_q = ideal_tendon_curve(quad, range_deg);
    auto curve_l = ideal_tendon_curve(lin, range_deg);
    double rmse_linear = curve_rmse(curve_l, curve_q);
    double rmse_quadratic = curve_rmse(curve_q, curve_q);

    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error("cannot open " + out + " for writing");
    f << "theta_e_deg,tau_quadratic_Ncm,tau_linear_Ncm\n";
    for (size_t i = 0; i < curve_q.size(); ++i)
        f << format_full(curve_q[i].first) << "," << format_full(curve_q[i].second) << ","
          << format_full(curve_l[i].second) << "\n";

    std::cout << "rmse_linear_vs_quadratic " << format_full(rmse_linear) << "\n";
    std::cout << "rmse_quadratic_self " << format_full(rmse_quadratic) << "\n";
    return kExitOk;
}

int cmd_simulate(const std::string& profile_path, const std::string& traj_path,
                 const std::string& out_dir, double rate_override, bool passive,
                 double noise_sigma, std::uint64_t seed, bool fail_on_slip,
                 const GraspModel& cli_grasp, bool grasp_from_cli,
                 const std::string& model) {
    SubjectProfile p = load_subject_profile_file(profile_path);
    apply_model_override(p, model);
    TrajectoryFile tf = load_trajectory_file(traj_path);
    if (rate_override > 0.0) tf.trajectory.rate_hz = rate_override;
    GraspModel grasp = (tf.has_grasp && !grasp_from_cli) ? tf.grasp : cli_grasp;

    ConeFamily family = default_family_for(p);
    SimOptions options;
    options.passive = passive;
    options.sensor_noise_sigma = noise_sigma;
    options.seed = seed;

    TrajectoryLog log = run_trajectory(p, family, tf.trajectory, grasp, options);

    fs::create_directories(out_dir);
    write_log_csv(log, out_dir + "/run.csv");
    write_log_summary_json(log, out_dir + "/summary.json");
    std::cout << "rows " << log.rows.size() << "\n";
    std::cout << "peak_joint_torque_Ncm " << format_full(log.summary.peak_joint_torque_Ncm)
              << "\n";
    std::cout << "slip_count " << log.summary.slip_count << "\n";
    if (fail_on_slip && log.summary.slip_count > 0) {
        std::cerr << "error: grasp slipped " << log.summary.slip_count << " times\n";
        return kExitRuntime;
    }
    return kExitOk;
}

int cmd_fit_device(const std::string& human_path, const std::string& out,
                   double target_coverage, double flexion, double extension,
                   double abduction) {
    SubjectProfile human = load_subject_profile_file(human_path);
    ReachCone human_cone = build_reach_cone(human.limits);
    CSpaceGrid human_grid = rasterize(human_cone, 360, 180, Weighting::SolidAngle);

    auto coverage_at = [&](double adduction) {
        GoniometerLimits lims{flexion, extension, abduction, adduction};
        return rasterize(build_reach_cone(lims), 360, 180, Weighting::SolidAngle).coverage();
    };

    double lo = 0.0, hi = 179.5;
    if (coverage_at(hi) < target_coverage)
        throw Error("target coverage unreachable with the given principal maxima");
    for (int i = 0; i < 45; ++i) {
        double mid = 0.5 * (lo + hi);
        (coverage_at(mid) < target_coverage ? lo : hi) = mid;
    }
    double adduction = hi;

    SubjectProfile device;
    device.name = "device_default";
    device.limits = {flexion, extension, abduction, adduction};
    device.humeral_medial_deg = -90.0;
    device.humeral_lateral_deg = 90.0;

    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error("cannot open " + out + " for writing");
    f << serialize_subject_profile(device);

    ReachCone device_cone = build_reach_cone(device.limits);
    CSpaceGrid device_grid = rasterize(device_cone, 360, 180, Weighting::SolidAngle);
    OverlapReport rep = compare(human_grid, device_grid);
    std::cout << "fitted adduction_max_deg " << format_full(adduction) << "\n";
    std::cout << "device_coverage " << format_full(device_grid.coverage()) << "\n";
    std::cout << "human_coverage " << format_full(human_grid.coverage()) << "\n";
    std::cout << "human_only " << format_full(rep.a_only) << "\n";
    std::cout << "device_only " << format_full(rep.b_only) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"haptic shoulder simulator"};
    app.require_subcommand(1);

    std::string profile, profile_b, out = "out", scheme = "linear", resolution = "360x180";
    std::string weighting = "solid", format = "csv", trajectory, model;
    int n_points = 64;
    double flexion = 0.0, abduction = 0.0, gamma = 0.0, range = 20.0;
    double rate = 0.0, noise_sigma = 0.0;
    std::uint64_t seed = 0;
    bool passive = false, fail_on_slip = false;
    GraspModel grasp;
    bool grasp_from_cli = false;
    double target_coverage = 0.7252;
    double dev_flexion = 110.0, dev_extension = 30.0, dev_abduction = 178.0;

    auto* build = app.add_subcommand("build-cone", "build a reach cone artifact");
    build->add_option("--profile", profile)->required();
    build->add_option("--n-points", n_points);
    build->add_option("--scheme", scheme);
    build->add_option("--out", out)->required();

    auto* check = app.add_subcommand("check-pose", "test a pose against the joint limits");
    check->add_option("--profile", profile)->required();
    check->add_option("--flexion", flexion);
    check->add_option("--abduction", abduction);
    check->add_option("--gamma", gamma);
    check->add_option("--scheme", scheme);
    check->add_option("--model", model);

    auto* cspace = app.add_subcommand("cspace", "configuration-space coverage report");
    cspace->add_option("--profile", profile)->required();
    cspace->add_option("--profile-b", profile_b);
    cspace->add_option("--resolution", resolution);
    cspace->add_option("--weighting", weighting);
    cspace->add_option("--format", format);
    cspace->add_option("--out", out);

    auto* tendon = app.add_subcommand("tendon-curve", "sampled spring torque curves");
    tendon->add_option("--profile", profile);
    tendon->add_option("--range", range);
    tendon->add_option("--out", out);

    auto* sim = app.add_subcommand("simulate", "run a drag trajectory");
    sim->add_option("--profile", profile)->required();
    sim->add_option("--trajectory", trajectory)->required();
    sim->add_option("--out", out);
    sim->add_option("--rate", rate);
    sim->add_option("--seed", seed);
    sim->add_option("--noise-sigma", noise_sigma);
    sim->add_flag("--passive", passive);
    sim->add_option("--model", model);
    sim->add_flag("--fail-on-slip", fail_on_slip);
    auto* gr = sim->add_option("--grip-radius", grasp.grip_radius_m);
    auto* gk = sim->add_option("--grasp-k-linear", grasp.linear_compliance_N_per_m);
    auto* gk2 = sim->add_option("--grasp-k-rot", grasp.rotational_compliance_Ncm_per_rad);
    auto* gs = sim->add_option("--slip-threshold", grasp.slip_threshold_N);

    auto* fit = app.add_subcommand("fit-device", "fit a device profile by coverage bisection");
    fit->add_option("--human", profile)->required();
    fit->add_option("--out", out)->required();
    fit->add_option("--target-coverage", target_coverage);
    fit->add_option("--flexion", dev_flexion);
    fit->add_option("--extension", dev_extension);
    fit->add_option("--abduction", dev_abduction);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    grasp_from_cli = gr->count() || gk->count() || gk2->count() || gs->count();

    try {
        if (build->parsed()) return cmd_build_cone(profile, n_points, scheme, out);
        if (check->parsed())
            return cmd_check_pose(profile, flexion, abduction, gamma, scheme, model);
        if (cspace->parsed())
            return cmd_cspace(profile, profile_b, resolution, weighting, out, format);
        if (tendon->parsed()) return cmd_tendon_curve(profile, range, out);
        if (sim->parsed())
            return cmd_simulate(profile, trajectory, out, rate, passive, noise_sigma, seed,
                                fail_on_slip, grasp, grasp_from_cli, model);
        if (fit->parsed())
            return cmd_fit_device(profile, out, target_coverage, dev_flexion, dev_extension,
                                  dev_abduction);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitParse;
    } catch (const RangeError& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
