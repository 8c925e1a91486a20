#include <iostream>
#include <string>
#include <vector>

#include "rfdress/app.hpp"

int main(int argc, char** argv) {
  return rfdress::app::main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
