#include "ncres/report.hpp"

int main(int argc, char** argv) { return ncres::run_cli(argc, argv); }
