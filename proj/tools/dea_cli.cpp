#include "dea/cli.hpp"

int main(int argc, char** argv) { return dea::cli::main(argc, argv); }
