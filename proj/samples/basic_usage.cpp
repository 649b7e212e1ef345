// Prints the S_4- and A_4-decompositions of the multilinear component and
// checks the codimension against the elimination oracle.

#include <iostream>

#include "assosym/assosym.hpp"
#include "assosym/io.hpp"
#include "assosym/tideal_oracle.hpp"

int main() {
  using namespace assosym;

  std::cout << format_pretty(sn_decomposition(4)) << "\n";
  std::cout << format_pretty(an_decomposition(4)) << "\n";

  const BigCount oracle = quotient_dim(4);
  std::cout << "oracle " << to_string(oracle) << ", formula "
            << to_string(codimension(4)) << "\n";
  return oracle == codimension(4) ? 0 : 1;
}
