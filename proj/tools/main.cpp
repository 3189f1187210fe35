#include "cli.hpp"

int main(int argc, char** argv) { return orbtop::cli::run(argc, argv); }
