#include "gentlefan/cli.hpp"

int main(int argc, char** argv) { return gf::cli::run(argc, argv); }
