#ifndef TOPGEN_FIBRE_HPP
#define TOPGEN_FIBRE_HPP

#include <string>
#include <vector>

#include "topgen/catalog.hpp"

namespace topgen {

struct FibreCheck {
  bool ok = false;
  long long residual = 0;  // sum(D) + dim G - sum(dim C_i) - dim M
  int p = 0;               // characteristic the dims were resolved at
  std::string detail;
};

// verifies sum dim D_i + dim G - sum dim C_i == dim M, with the C_i dims
// resolved from the catalog at characteristic p
FibreCheck check_fibre_instance(const Catalog& cat, const FibreInstance& inst, int p);

// smallest representative prime admitted by the instance condition
int fibre_instance_prime(const Catalog& cat, const FibreInstance& inst);

}  // namespace topgen

#endif
