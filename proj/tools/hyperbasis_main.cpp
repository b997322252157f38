#include "hyperbasis/cli_app.hpp"

int main(int argc, char** argv) { return hyperbasis::cli::run(argc, argv); }
