#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "flatcyc/growth.hpp"

namespace testgen {

// Random pairing where every column has a nonzero entry and every row has at
// most t nonzero entries.
inline flatcyc::PairingInstance random_pairing(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> tdist(1, 4), cols_dist(1, 12), val(-5, 5);
  flatcyc::PairingInstance inst;
  inst.t = static_cast<std::size_t>(tdist(rng));
  const std::size_t cols = static_cast<std::size_t>(cols_dist(rng));
  std::vector<std::vector<flatcyc::Rational>> rows;
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  // cover all columns first, then add extra rows
  for (std::size_t start = 0; start < cols; start += inst.t) {
    std::vector<flatcyc::Rational> r(cols, 0);
    for (std::size_t i = start; i < std::min(cols, start + inst.t); ++i) {
      int v = 0;
      while (v == 0) v = val(rng);
      r[order[i]] = flatcyc::Rational(v) / static_cast<long>(1 + rng() % 3);
    }
    rows.push_back(r);
  }
  const int extra = static_cast<int>(rng() % 4);
  for (int e = 0; e < extra; ++e) {
    std::vector<flatcyc::Rational> r(cols, 0);
    const std::size_t nz = rng() % (inst.t + 1);
    for (std::size_t i = 0; i < nz; ++i) r[rng() % cols] = val(rng);
    rows.push_back(r);
  }
  std::shuffle(rows.begin(), rows.end(), rng);
  inst.pairing = flatcyc::RatMatrix(rows.size(), cols, flatcyc::Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) inst.pairing(i, j) = rows[i][j];
  return inst;
}

}  // namespace testgen
