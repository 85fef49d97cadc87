#pragma once

// Command implementations behind the hilbrel executable. Each command writes
// its report to `out`, diagnostics to `err`, and returns the exit code:
// 0 all checks pass, 1 some check fails, 2 input error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hilbrel::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_input = 2;

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);

struct GrrOptions {
    std::string path;
    int samples = 50;
    std::uint64_t seed = 1;
    int fuzz_surfaces = 0;
    long bound = 3;  // |coordinates| of sampled m and c
};

int cmd_grr(const GrrOptions& options, std::ostream& out, std::ostream& err);

struct RelateOptions {
    std::string path;
    std::string m;
    std::string c;
    std::string direction = "down";
    std::string input;  // name of a moments block or a form block
};

int cmd_relate(const RelateOptions& options, std::ostream& out, std::ostream& err);

struct AdjunctionOptions {
    std::string path;
    std::string curve;
    long pa = 0;
    std::vector<std::string> basics;
};

int cmd_adjunction(const AdjunctionOptions& options, std::ostream& out, std::ostream& err);

int cmd_os_equiv(const std::string& path, long box, std::ostream& out, std::ostream& err);

/// Full command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbrel::cli
