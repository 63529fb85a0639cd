#include "topgen/fibre.hpp"

#include "topgen/errors.hpp"

namespace topgen {

FibreCheck check_fibre_instance(const Catalog& cat, const FibreInstance& inst, int p) {
  FibreCheck out;
  out.p = p;
  long long d_sum = 0;
  for (int d : inst.d_dims) {
    if (d <= 0) fail(Errc::NegativeDimension, "fibre instance with nonpositive D-dimension");
    d_sum += d;
  }
  long long x_sum = 0;
  for (const auto& l : inst.x_labels) x_sum += cat.class_dim(inst.group, l, p);
  const long long g_dim = cat.group(inst.group).dim;
  out.residual = d_sum + g_dim - x_sum - inst.dim_M;
  out.ok = out.residual == 0;
  out.detail = "dim Y + dim G - dim X = " + std::to_string(d_sum) + " + " + std::to_string(g_dim) +
               " - " + std::to_string(x_sum) + " = " + std::to_string(d_sum + g_dim - x_sum) +
               " vs dim M = " + std::to_string(inst.dim_M);
  return out;
}

int fibre_instance_prime(const Catalog&, const FibreInstance& inst) {
  for (int p : representative_primes())
    if (inst.cond.admits(p, inst.group)) return p;
  fail(Errc::MissingData, "fibre instance admits no representative prime");
}

}  // namespace topgen
