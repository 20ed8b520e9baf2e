#include <iostream>

#include "chaincode/io.hpp"

int main(int argc, char** argv) { return chaincode::cli_main(argc, argv, std::cout, std::cerr); }
