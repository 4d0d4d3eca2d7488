#include <cstdlib>

#include "slicecert/covers.hpp"
#include "slicecert/errors.hpp"

namespace slicecert::covers {

BigInt alexander_det(const groups::GroupPresentation& pres) {
  const int n = pres.generators;
  for (int g = 0; g < n; ++g) {
    if (g >= static_cast<int>(pres.meridian.size()) || !pres.meridian[g]) {
      throw InputError("alexander_det needs every generator meridian-marked");
    }
  }
  const int r = static_cast<int>(pres.relators.size());
  if (n == 0) throw InputError("alexander_det needs at least one generator");
  if (r != n && r != n - 1) {
    throw InputError("alexander_det needs a Wirtinger-shaped presentation (" + std::to_string(n) +
                     " generators, " + std::to_string(r) + " relators)");
  }
  // Every generator maps to t = -1. The Fox derivative of a letter x^e with
  // prefix p evaluates to (-1)^{exp(p)} for e = +1 and also for e = -1,
  // since -x^{-1} = 1 at t = -1.
  IntMatrix jac(r, std::vector<BigInt>(n, 0));
  for (int i = 0; i < r; ++i) {
    int prefix = 0;
    for (int letter : pres.relators[i]) {
      int g = std::abs(letter) - 1;
      if (letter > 0) {
        jac[i][g] += prefix % 2 == 0 ? 1 : -1;
        prefix += 1;
      } else {
        prefix -= 1;
        jac[i][g] += (prefix + 1) % 2 == 0 ? 1 : -1;
      }
    }
  }
  IntMatrix minor(n - 1, std::vector<BigInt>(n - 1));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) minor[i][j] = jac[i][j];
  BigInt d = integer_determinant(minor);
  return d < 0 ? BigInt(-d) : d;
}

}  // namespace slicecert::covers
