#ifndef KANTOR_TEST_GENERATORS_HPP
#define KANTOR_TEST_GENERATORS_HPP

#include "kantor/algebra.hpp"

#include <random>

namespace testgen {

inline kantor::Scalar small(std::mt19937_64& rng, int bound = 3) {
  return kantor::Scalar(static_cast<long long>(rng() % (2 * bound + 1)) - bound);
}

inline kantor::Element<kantor::Scalar> element(std::mt19937_64& rng, std::size_t n) {
  kantor::Element<kantor::Scalar> v(n);
  for (auto& c : v) c = small(rng);
  return v;
}

/// Random table with roughly `density` percent nonzero structure constants.
inline kantor::MultTable<kantor::Scalar> table(std::mt19937_64& rng, std::size_t n, unsigned density = 40) {
  kantor::MultTable<kantor::Scalar> t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (rng() % 100 < density) t.set(i, j, k, small(rng));
  return t;
}

inline kantor::Algebra<kantor::Scalar> algebra(std::mt19937_64& rng, std::size_t n, std::vector<std::string> products = {"m"}) {
  kantor::Algebra<kantor::Scalar> a(n, kantor::Field::rational());
  for (const auto& p : products) a.products.emplace(p, table(rng, n));
  return a;
}

}  // namespace testgen

#endif
