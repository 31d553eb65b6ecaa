#include <iostream>

#include "freemoments/cli.hpp"

int main(int argc, char **argv)
{
  return freemoments::run_cli({argv, argv + argc}, std::cout, std::cerr);
}
