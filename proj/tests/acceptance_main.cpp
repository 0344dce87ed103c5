#include <iostream>

#include "efl/selftest.hpp"

int main() { return efl::selftest::run_cli(std::cout); }
