#include "electre_score/cli.hpp"

int main(int argc, char** argv) { return electre_score::cli::run(argc, argv); }
