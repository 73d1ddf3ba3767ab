#include "cliff/kernels.hpp"

#include <omp.h>

#include <vector>

namespace cliff::kernels {

// Reference engine: walk every stored blade pair and accumulate.
Multivector product_serial(const Multivector& a, const Multivector& b) {
  const Signature& sig = a.algebra();
  MultivectorBuilder builder(sig);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const auto [mask, sign] = blade_product(ma, mb, sig);
      Rational term(ca * cb);
      if (sign < 0) term = -term;
      builder.add(mask, term);
    }
  }
  return builder.build();
}

// Dense engine: out[k] = sum_i a[i] * b[i ^ k] * sign(i, i ^ k). Every output
// mask is independent, which makes the loop embarrassingly parallel; rational
// temporaries stay thread-local.
Multivector product_parallel(const Multivector& a, const Multivector& b) {
  const Signature& sig = a.algebra();
  const std::size_t size = sig.blade_count();

  std::vector<Rational> da(size, Rational(0)), db(size, Rational(0));
  std::vector<char> nza(size, 0);
  for (const auto& [m, c] : a.terms()) {
    da[m] = c;
    nza[m] = 1;
  }
  for (const auto& [m, c] : b.terms()) db[m] = c;

  std::vector<Rational> out(size, Rational(0));
  const long long n = static_cast<long long>(size);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long k = 0; k < n; ++k) {
    Rational acc(0);
    const BladeMask target = static_cast<BladeMask>(k);
    for (std::size_t i = 0; i < size; ++i) {
      if (!nza[i]) continue;
      const BladeMask mi = static_cast<BladeMask>(i);
      const BladeMask mj = mi ^ target;
      const Rational& cb = db[mj];
      if (cb == 0) continue;
      const auto [mask, sign] = blade_product(mi, mj, sig);
      if (sign > 0)
        acc += da[i] * cb;
      else
        acc -= da[i] * cb;
    }
    out[k] = std::move(acc);
  }

  MultivectorBuilder builder(sig);
  for (std::size_t k = 0; k < size; ++k)
    if (out[k] != 0) builder.add(static_cast<BladeMask>(k), out[k]);
  return builder.build();
}

}  // namespace cliff::kernels
