#include "framepot/cli.hpp"

int main(int argc, char **argv) { return framepot::cli::dispatch(argc, argv); }
