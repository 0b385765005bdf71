// Command-line front end: verification suites, table emission, chart solving,
// orbit sampling.  Subcommands are filled in as the library modules land.
#include <CLI11.hpp>

#include <cstdio>

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for the E6/F4 Rosenfeld-plane constructions"};
    app.require_subcommand(1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems exit 2
    }
    return 0;
}
