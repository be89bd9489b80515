#include "tmlab/cli/app.hpp"

int main(int argc, char** argv) { return tmlab::cli::run(argc, argv); }
