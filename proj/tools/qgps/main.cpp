#include "qgps/cli.hpp"

int main(int argc, char** argv) { return qgps::cli::run_main(argc, argv); }
