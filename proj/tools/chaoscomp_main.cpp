#include "chaoscomp/cli.hpp"

int main(int argc, char** argv) { return chaoscomp::cli_dispatch(argc, argv); }
