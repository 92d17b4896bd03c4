#include "gswf/cli.hpp"

int main(int argc, char** argv) { return gswf::cli::run(argc, argv); }
