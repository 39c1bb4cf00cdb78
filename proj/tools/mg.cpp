#include "mg/cli.hpp"

int main(int argc, char** argv) { return mg::cli::run(argc, argv); }
