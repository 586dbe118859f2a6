// Shared helpers for the unit tests and the acceptance binary.
#pragma once

#include "hcc/fixtures.hpp"
#include "hcc/structures.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace hcc::test {

inline SymmetryBundle bundle(const std::string& name) { return *fixture(name).bundle; }

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

/// Runs a shell command, capturing stdout.
inline CommandResult run(const std::string& cmd) {
    CommandResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string hcs(const std::string& args) { return std::string(HCS_BIN) + " " + args; }
inline std::string fixture_path(const std::string& file) { return std::string(FIXTURE_DIR) + "/" + file; }

// Hand model of signA, independent of the engine: basis x^0 = 1, x^1 = x with
// x^2 = 1, and the group element g^c (c in {0, 1}) acting by g·x = -x.
struct SignMonomial {
    int coeff;
    int power;
};
inline SignMonomial sign_mul(SignMonomial a, SignMonomial b) { return {a.coeff * b.coeff, (a.power + b.power) % 2}; }
inline SignMonomial sign_act(int c, SignMonomial a) { return {(c && a.power) ? -a.coeff : a.coeff, a.power}; }

}  // namespace hcc::test
