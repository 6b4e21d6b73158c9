#include "p1z/cli.hpp"

int main(int argc, char** argv) { return p1z::cli::run(argc, argv); }
