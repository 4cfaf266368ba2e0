#include <iostream>

#include "navsim/navsim.hpp"

int main() {
  std::cout << "navsim placeholder\n";
  return 0;
}
