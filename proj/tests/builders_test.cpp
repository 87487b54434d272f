#include <gtest/gtest.h>

#include "toric/builders.hpp"
#include "toric/error.hpp"

namespace toric {
namespace {

using Weights = std::vector<std::int64_t>;

std::vector<Integer> mults_of_max_cones(const Fan& fan) {
  std::vector<Integer> out;
  for (const Cone& c : fan.max_cones()) out.push_back(fan.multiplicity(c));
  return out;
}

TEST(ProjectiveSpace, Examples) {
  const Fan p1 = projective_space(1);
  EXPECT_EQ(p1.rays(), (std::vector<LatticeVector>{{1}, {-1}}));
  EXPECT_EQ(p1.max_cones(), (std::vector<Cone>{Cone({0}), Cone({1})}));

  const Fan p2 = projective_space(2);
  EXPECT_EQ(p2.rays(), (std::vector<LatticeVector>{{1, 0}, {0, 1}, {-1, -1}}));
  EXPECT_EQ(p2.max_cones().size(), 3u);

  const Fan p6 = projective_space(6);
  EXPECT_EQ(p6.ray_count(), 7u);
  EXPECT_EQ(p6.max_cones().size(), 7u);

  EXPECT_THROW(projective_space(0), InputError);
}

TEST(Hirzebruch, Examples) {
  const Fan h5 = hirzebruch(5);
  EXPECT_EQ(h5.rays(), (std::vector<LatticeVector>{{1, 0}, {0, 1}, {-1, 5}, {0, -1}}));
  EXPECT_EQ(h5.max_cones(), (std::vector<Cone>{Cone({0, 1}), Cone({1, 2}), Cone({2, 3}), Cone({0, 3})}));

  const Fan h0 = hirzebruch(0);
  EXPECT_EQ(h0.rays(), (std::vector<LatticeVector>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));

  const Fan h1 = hirzebruch(1);
  EXPECT_TRUE(is_smooth(h1));
  EXPECT_EQ(h1.max_cones().size(), 4u);
}

TEST(WeightedProjective, Examples) {
  const Fan a = weighted_projective(Weights{1, 1, 2});
  EXPECT_EQ(a.rays(), (std::vector<LatticeVector>{{1, 0}, {0, 1}, {-1, -2}}));
  EXPECT_EQ(mults_of_max_cones(a), (std::vector<Integer>{1, 2, 1}));

  EXPECT_EQ(weighted_projective(Weights{1, 1, 1}), projective_space(2));

  const auto m3 = mults_of_max_cones(weighted_projective(Weights{1, 1, 3}));
  EXPECT_NE(std::find(m3.begin(), m3.end(), Integer(3)), m3.end());

  EXPECT_THROW(weighted_projective(Weights{2, 1, 1}), InputError);
  EXPECT_THROW(weighted_projective(Weights{2, 2, 4}), InputError);
  EXPECT_THROW(weighted_projective(Weights{1, 0, 1}), InputError);
  EXPECT_THROW(weighted_projective(Weights{1}), InputError);
}

TEST(Product, Examples) {
  const Fan quadric = product(projective_space(1), projective_space(1));
  EXPECT_EQ(quadric.rays(), (std::vector<LatticeVector>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  EXPECT_EQ(quadric.max_cones().size(), 4u);

  const Fan big = product(projective_space(5), projective_space(6));
  EXPECT_EQ(big.ray_count(), 13u);
  EXPECT_EQ(big.max_cones().size(), 42u);

  const Fan mixed = product(projective_space(1), weighted_projective(Weights{1, 1, 2}));
  EXPECT_EQ(mixed.ambient_dim(), 3u);
  const auto m = mults_of_max_cones(mixed);
  EXPECT_NE(std::find(m.begin(), m.end(), Integer(2)), m.end());
}

TEST(Product, MultiplicitiesMultiply) {
  const std::vector<Fan> factors = {projective_space(2), weighted_projective(Weights{1, 1, 2}),
                                    weighted_projective(Weights{1, 2, 3}), hirzebruch(2)};
  for (const Fan& a : factors) {
    for (const Fan& b : factors) {
      const Fan ab = product(a, b);
      const auto offset = static_cast<RayIndex>(a.ray_count());
      for (const Cone& ca : a.max_cones()) {
        for (const Cone& cb : b.max_cones()) {
          std::vector<RayIndex> joined(ca.rays().begin(), ca.rays().end());
          for (RayIndex i : cb.rays()) joined.push_back(i + offset);
          EXPECT_EQ(ab.multiplicity(Cone(joined)), a.multiplicity(ca) * b.multiplicity(cb));
        }
      }
    }
  }
}

}  // namespace
}  // namespace toric
