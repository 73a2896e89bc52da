#include "siqm/cli/commands.hpp"

int main(int argc, char** argv) { return siqm::cli::run_command(argc, argv); }
