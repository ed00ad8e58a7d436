#include <bmwsq/cli.hpp>

int main(int argc, char** argv) { return bmwsq::cli::run_main(argc, argv); }
