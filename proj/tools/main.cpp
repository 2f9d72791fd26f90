#include "cli.hpp"

int main(int argc, char** argv) { return ftsp::cli::run_main(argc, argv); }
