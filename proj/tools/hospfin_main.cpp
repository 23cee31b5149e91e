#include "hospfin/cli.hpp"

int main(int argc, char** argv) { return hospfin::cli::main(argc, argv); }
