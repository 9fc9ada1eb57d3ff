#ifndef glcs_cli_hpp
#define glcs_cli_hpp

#include <ostream>
#include <string>
#include <vector>

namespace glcs {

// exit codes of the command-line tool
enum ExitCode : int {
    exit_ok = 0,
    exit_invalid_input = 1,
    exit_structural = 2,
    exit_too_large = 3
};

/*
 * Runs one command. args excludes the program name. The result goes to out
 * as a single line (graph-printing commands write a whole graph file); every
 * diagnostic goes to err.
 */
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}

#endif /* glcs_cli_hpp */
