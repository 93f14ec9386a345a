#include "glsf/experiments.hpp"

int main(int argc, char** argv) { return glsf::run_cli(argc, argv); }
