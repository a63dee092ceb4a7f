#include "polyharm/cli.hpp"

int main(int argc, char** argv) { return polyharm::run_cli(argc, argv); }
