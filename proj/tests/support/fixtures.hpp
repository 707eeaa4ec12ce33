#pragma once

// Three-sector economy (shoes, food, light bulbs) with two technologies per
// sector, and its exact solution.

#include <vector>

#include "leontief/linalg.hpp"
#include "leontief/model.hpp"

namespace leontief::testing {

inline DenseMatrix first_technology() {
  return DenseMatrix{{0.6, 0.1, 0.3}, {0.3, 0.6, 0.1}, {0.1, 0.3, 0.6}};
}

inline DenseMatrix second_technology() {
  return DenseMatrix{{0.5, 0.2, 0.3}, {0.4, 0.2, 0.4}, {0.1, 0.6, 0.3}};
}

inline DenseVector sector_demand() { return DenseVector{150, -500, -20}; }

inline GeneralizedLeontiefModel two_technology_model() {
  const DenseMatrix a = first_technology();
  const DenseMatrix b = second_technology();
  const DenseVector h = sector_demand();
  GeneralizedLeontiefModel model;
  model.sectors = 3;
  for (std::size_t j = 0; j < 3; ++j) {
    model.technology_blocks.push_back(DenseMatrix{
        {a(j, 0), a(j, 1), a(j, 2)}, {b(j, 0), b(j, 1), b(j, 2)}});
    model.demand_blocks.push_back(DenseVector{h[j], h[j]});
  }
  return model;
}

// Printed 6x3 vertical matrix of type (2, 2, 2) and the stacked demand.
inline DenseMatrix expected_vertical_matrix() {
  return DenseMatrix{{0.4, -0.1, -0.3},  {0.5, -0.2, -0.3}, {-0.3, 0.4, -0.1},
                     {-0.4, 0.8, -0.4},  {-0.1, -0.3, 0.4}, {-0.1, -0.6, 0.7}};
}

inline DenseVector expected_stacked_demand() {
  return DenseVector{150, 150, -500, -500, -20, -20};
}

// Binding rows 0.4 x1 - 0.3 x3 = 150 and -0.1 x1 + 0.4 x3 = -20.
inline DenseVector exact_solution() {
  return DenseVector{5400.0 / 13.0, 0.0, 700.0 / 13.0};
}

// N x* - b, computed in exact rational arithmetic:
// (0, 540/13, 370, 4060/13, 0, 210/13).
inline DenseVector exact_slack() {
  return DenseVector{0.0, 540.0 / 13.0, 370.0, 4060.0 / 13.0, 0.0, 210.0 / 13.0};
}

}  // namespace leontief::testing
