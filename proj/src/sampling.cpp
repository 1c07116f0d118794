#include "leafcoh/sampling.hpp"

namespace leafcoh {

std::vector<ReprClass> class_grid() {
  std::vector<ReprClass> grid;
  for (int twice_n : {2, 3, 4, 6}) {
    grid.push_back(ReprClass::discrete(twice_n));
    grid.push_back(ReprClass::discrete(-twice_n));
  }
  for (int twice_j : {0, 1})
    for (double nu : {0.5, 1.0, 2.0}) grid.push_back(ReprClass::principal(twice_j, nu));
  for (double sigma : {0.6, 0.75, 0.9}) grid.push_back(ReprClass::complementary(sigma));
  grid.push_back(ReprClass::mock_plus());
  grid.push_back(ReprClass::mock_minus());
  grid.push_back(ReprClass::trivial());
  return grid;
}

CoeffSeq random_coeffs(const ReprClass& cls, std::mt19937_64& rng, int count, int radius) {
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> step(-radius, radius);
  const Weight centre = nearest_weight(cls, Weight(0));
  CoeffSeq v(cls);
  for (int i = 0; i < count; ++i) {
    const Weight m = centre.shifted(step(rng));
    v.accumulate(m, Complex(normal(rng), normal(rng)));
  }
  return v;
}

std::vector<Weight> weights_within(const ReprClass& cls, int bound) {
  std::vector<Weight> out;
  for (int t = -2 * bound; t <= 2 * bound; ++t)
    if (weight_set_contains(cls, Weight(t))) out.push_back(Weight(t));
  return out;
}

}  // namespace leafcoh
