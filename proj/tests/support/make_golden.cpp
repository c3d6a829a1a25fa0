// Writes the brute-force dihedral step report used as a golden file.
#include <iostream>

#include "oracles.hpp"

int main() {
  std::cout << oracle::dihedral_family({3, 5, 8, 12, 16}).dump(2) << "\n";
  return 0;
}
