#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <iostream>

#include "../support.hpp"

int main(int argc, char** argv) {
  testing::take_seed(argc, argv);
  std::cout << "seed " << testing::seed() << "\n";
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
