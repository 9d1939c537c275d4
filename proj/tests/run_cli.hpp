#ifndef UNIREX_TESTS_RUN_CLI_HPP
#define UNIREX_TESTS_RUN_CLI_HPP

// Spawns the CLI binary (path injected by the build) and captures stdout.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace unirex::testing {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

inline CliResult run_cli(const std::string& args) {
    std::string command = std::string(UNIREX_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    std::size_t read = 0;
    while ((read = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, read);
    }
    int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

inline std::string write_temp_graph(const std::string& contents) {
    static int counter = 0;
    std::string path = "/tmp/unirex_test_" + std::to_string(getpid()) + "_" +
                       std::to_string(counter++) + ".graph";
    std::ofstream out(path);
    out << contents;
    return path;
}

} // namespace unirex::testing

#endif // UNIREX_TESTS_RUN_CLI_HPP
