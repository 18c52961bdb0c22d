// CLI contract checks driven through the real binary: documented exit codes
// and byte-identical reruns. argv[1] = path to the shouldersim binary,
// argv[2] = source tree root.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "shoulder/io.hpp"

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::printf("ok: %s\n", what.c_str());
    } else {
        std::printf("FAILED: %s\n", what.c_str());
        ++failures;
    }
}

int run(const std::string& cmd) {
    int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: cli_tests <shouldersim> <source_dir>\n");
        return 2;
    }
    std::string cli = argv[1];
    std::string src = argv[2];
    std::string human = src + "/profiles/human_reference.profile";
    std::string device = src + "/profiles/device_default.profile";

    expect(run(cli + " build-cone --profile " + human + " --out cli_cone.txt") == 0,
           "build-cone exits 0");
    expect(run(cli + " build-cone --profile " + human + " --n-points 5 --out x.txt") == 2,
           "n-points not divisible by 4 exits 2 (usage)");
    expect(run(cli + " build-cone --profile /nonexistent.profile --out x.txt") == 3,
           "missing profile file exits 3 (parse)");
    expect(run(cli + " build-cone --no-such-flag") == 2, "unknown flag exits 2 (usage)");
    expect(run(cli + " definitely-not-a-subcommand") == 2, "unknown subcommand exits 2");

    // bad profile content: schema error -> 3
    {
        std::ofstream bad("cli_bad.profile");
        bad << "[limits]\nflexion_max_deg = 160\n";
    }
    expect(run(cli + " build-cone --profile cli_bad.profile --out x.txt") == 3,
           "incomplete profile exits 3 (schema)");

    // reruns are byte-identical
    expect(run(cli + " build-cone --profile " + human + " --out cli_cone2.txt") == 0,
           "second build-cone exits 0");
    expect(slurp("cli_cone.txt") == slurp("cli_cone2.txt"),
           "cone artifacts byte-identical across runs");

    // artifact reloads bit-exactly through the library
    {
        shoulder::ReachCone cone = shoulder::load_cone_artifact("cli_cone.txt");
        shoulder::write_cone_artifact(cone, "cli_cone3.txt");
        expect(slurp("cli_cone.txt") == slurp("cli_cone3.txt"),
               "cone artifact reload round-trips bit-exactly");
    }

    // symmetric profile artifact shows 4-fold symmetry
    {
        std::ofstream sym("cli_sym.profile");
        sym << "[profile]\nname = sym\n[limits]\nflexion_max_deg = 90\n"
               "extension_max_deg = 90\nabduction_max_deg = 90\nadduction_max_deg = 90\n";
    }
    expect(run(cli + " build-cone --profile cli_sym.profile --out cli_sym_cone.txt") == 0,
           "symmetric build-cone exits 0");
    {
        shoulder::ReachCone cone = shoulder::load_cone_artifact("cli_sym_cone.txt");
        bool sym_ok = true;
        int n = cone.size();
        for (int i = 0; i < n; ++i) {
            const shoulder::Vec3& p = cone.boundary_points[i];
            const shoulder::Vec3& q = cone.boundary_points[(i + n / 4) % n];
            // quarter-turn about the rest axis maps the boundary onto itself
            shoulder::Vec3 rotated{p.y, -p.x, p.z};
            if (shoulder::norm(rotated - q) > 1e-9) sym_ok = false;
        }
        expect(sym_ok, "symmetric cone artifact has 4-fold symmetry");
    }

    expect(run(cli + " cspace --profile " + human + " --profile-b " + device +
               " --resolution 90x45 --out cli_cs") == 0,
           "cspace exits 0");
    expect(run(cli + " cspace --profile " + human + " --resolution 4x4 --out cli_cs") == 2,
           "resolution below 16x16 exits 2 (usage)");

    expect(run(cli + " tendon-curve --range 20 --out cli_tendon.csv") == 0,
           "tendon-curve exits 0");
    expect(run(cli + " tendon-curve --range -5 --out x.csv") == 3,
           "negative range exits 3 (range)");

    std::string sim_cmd = cli + " simulate --profile " + human + " --trajectory " + src +
                          "/trajectories/interior_hold.traj";
    expect(run(sim_cmd + " --out cli_sim1") == 0, "simulate exits 0");
    expect(run(sim_cmd + " --out cli_sim2") == 0, "simulate rerun exits 0");
    expect(slurp("cli_sim1/run.csv") == slurp("cli_sim2/run.csv"),
           "simulation CSVs byte-identical across runs");
    expect(slurp("cli_sim1/run.csv").find("\r") == std::string::npos,
           "CSV uses LF line endings");

    expect(run(cli + " check-pose --profile " + human +
               " --flexion 0 --abduction 95 --gamma -50") == 0,
           "check-pose exits 0");

    if (failures == 0) std::printf("all cli checks passed\n");
    return failures == 0 ? 0 : 1;
}
