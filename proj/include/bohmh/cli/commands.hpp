#pragma once

#include "bohmh/cli/table_io.hpp"
#include "bohmh/constants.hpp"
#include "bohmh/verify/checks.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bohmh::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kNode = 3 };

/// Parsed command line. Angles are in degrees here and converted at use.
struct RunSpec {
    std::string command;
    int n{2};
    int l{1};
    int m{1};
    double beta_deg{30.0};
    std::optional<double> re_m;
    std::optional<double> phase_deg; // orbit: 0, rotated-orbit: 90
    double theta_deg{90.0};          // m = 0 rest point polar angle
    double periods{1.0};
    long dt_divisor{2048};
    long record_every{1};
    std::string grid;                // "r0:r1:nr,th0:th1:nth,ph0:ph1:nph"
    int ring{0};
    std::string format;              // csv | json (text for report/check)
    std::string out;
    std::string constants;
    std::string suite{"all"};        // check: all | acceptance | invariants
};

Table orbit_table(const RunSpec& spec, const PhysConsts& c);
Table rotated_orbit_table(const RunSpec& spec, const PhysConsts& c);
Table fields_table(const RunSpec& spec, const PhysConsts& c);

Json report_json(const RunSpec& spec, const PhysConsts& c);
std::string report_text(const RunSpec& spec, const PhysConsts& c);

Json check_json(const std::vector<verify::CheckResult>& acceptance,
                const std::vector<verify::CheckResult>& invariants);

/// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bohmh::cli
