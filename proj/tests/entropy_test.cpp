// Copyright 2026 The Hoten Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hoten/entropy.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hoten/error.hpp"

namespace hoten {
namespace {

const EntropyParams kDefaults{};

TEST(EntropyParams, Validation) {
  EXPECT_NO_THROW(kDefaults.validate());
  EXPECT_EQ(kDefaults.alpha + kDefaults.beta + kDefaults.gamma, 1.0);
  EXPECT_THROW((EntropyParams{1e-6, 1e-6, 0.5, 0.5, 0.5}.validate()), Error);
  EXPECT_THROW((EntropyParams{0.0, 1e-6, 1, 0, 0}.validate()), Error);
  EXPECT_THROW((EntropyParams{1e-6, 1e-6, -0.1, 0.6, 0.5}.validate()), Error);
}

TEST(KlDivergence, IdenticalIsZero) { EXPECT_EQ(kl_divergence({{0.5, 0.5}}, {{0.5, 0.5}}, 1e-6), 0.0); }

TEST(KlDivergence, TwoPointExample) {
  const double oracle = 0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0);
  const double kl = kl_divergence({{0.5, 0.5}}, {{0.25, 0.75}}, 1e-6);
  EXPECT_NEAR(kl, 0.1438, 1e-4);
  EXPECT_NEAR(kl, oracle, 1e-15);
}

TEST(KlDivergence, DisjointSupportUsesDelta) {
  const double delta = 1e-6;
  const double oracle = std::log(1.0 / delta) + delta * std::log(delta);
  const double kl = kl_divergence({{1, 0}}, {{0, 1}}, delta);
  EXPECT_NEAR(kl, oracle, 1e-12);
  EXPECT_NEAR(kl, 13.8155, 1e-4);
}

TEST(KlDivergence, LengthMismatch) {
  try {
    kl_divergence({{1.0}}, {{0.5, 0.5}}, 1e-6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(KlDivergence, GibbsBoundUnderSubstitution) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0, 1);
  const double delta = 1e-6;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t k = 2 + trial % 30;
    const auto draw = [&](double zero_rate) {
      std::vector<double> w(k);
      double total = 0;
      for (auto& x : w) total += (x = u(rng) < zero_rate ? 0.0 : u(rng));
      if (total == 0) w[0] = total = 1;
      for (auto& x : w) x /= total;
      return WeightVector{w};
    };
    const auto p = draw(0.0);
    const auto q = draw(0.0);
    EXPECT_GE(kl_divergence(p, q, delta), -1e-12);
    EXPECT_NEAR(kl_divergence(p, p, delta), 0.0, 1e-15);
    const auto ps = draw(0.5);
    const auto qs = draw(0.5);
    EXPECT_GE(kl_divergence(ps, qs, delta), -static_cast<double>(k) * delta * std::log(1 / delta));
  }
}

TEST(Centrality, CappedAtReciprocalFloor) {
  EXPECT_DOUBLE_EQ(centrality({{0.2, 0.8}}, {{0.2, 0.8}}, kDefaults), 1e6);
}

TEST(Centrality, ReciprocalOfDivergence) {
  const double kl = 0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0);
  EXPECT_NEAR(centrality({{0.5, 0.5}}, {{0.25, 0.75}}, kDefaults), 1.0 / kl, 1e-12);
  // 6.954 is 1 / 0.1438, i.e. computed from the rounded divergence.
  EXPECT_NEAR(centrality({{0.5, 0.5}}, {{0.25, 0.75}}, kDefaults), 6.954, 3e-3);
}

TEST(Centrality, ConcentratedOnUnpopularCell) {
  const double c = centrality({{1, 0}}, {{0, 1}}, kDefaults);
  EXPECT_NEAR(c, 1.0 / (std::log(1e6) - 1e-6 * std::log(1e6)), 1e-12);
  EXPECT_NEAR(c, 0.0724, 1e-4);
}

TEST(Similarity, SelfIsMaximal) {
  EXPECT_DOUBLE_EQ(similarity({{0.3, 0.7}}, {{0.3, 0.7}}, kDefaults), 1e6);
}

TEST(Similarity, ExactlySymmetric) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    WeightVector a{std::vector<double>(9)};
    WeightVector b{std::vector<double>(9)};
    for (std::size_t i = 0; i < 9; ++i) {
      a.weights[i] = u(rng) < 0.3 ? 0.0 : u(rng);
      b.weights[i] = u(rng) < 0.3 ? 0.0 : u(rng);
    }
    EXPECT_EQ(similarity(a, b, kDefaults), similarity(b, a, kDefaults));
  }
}

TEST(Similarity, TwoPointExample) {
  const double ab = 0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0);
  const double ba = 0.25 * std::log(0.5) + 0.75 * std::log(1.5);
  const double s = similarity({{0.5, 0.5}}, {{0.25, 0.75}}, kDefaults);
  EXPECT_NEAR(s, 1.0 / (ab + ba), 1e-12);
  EXPECT_NEAR(s, 3.641, 1e-3);
}

TEST(Personality, UniformIsLogK) {
  EXPECT_NEAR(personality({std::vector<double>(8, 0.125)}, kDefaults), std::log(8.0), 1e-15);
}

TEST(Personality, SpikeIsNearZero) {
  std::vector<double> w(10, 0.0);
  w[3] = 1.0;
  EXPECT_NEAR(personality({w}, kDefaults), 9 * 1e-6 * std::log(1e6), 1e-15);
}

TEST(Personality, HalfHalfWithZeros) {
  const double p = personality({{0.5, 0.5, 0, 0}}, kDefaults);
  EXPECT_NEAR(p, std::log(2.0) + 2e-6 * std::log(1e6), 1e-15);
  EXPECT_NEAR(p, 0.6931, 1e-4);
}

TEST(Personality, PermutationInvariantAndMaximizedByUniform) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> raw(6);
    double total = 0;
    for (auto& x : raw) total += (x = u(rng));
    for (auto& x : raw) x /= total;
    WeightVector w{raw};
    auto shuffled = raw;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_NEAR(personality(w, kDefaults), personality({shuffled}, kDefaults), 1e-14);
    EXPECT_LE(personality(w, kDefaults), std::log(6.0) + 1e-12);
  }
}

NodeProfile profile(std::string id, std::vector<double> w, std::size_t k) {
  return make_profile(std::move(id), WeightVector{std::move(w)}, k);
}

TEST(HotenUtility, IdenticalProfilesGiveHalf) {
  const auto i = profile("i", {0.6, 0.3, 0.1, 0.0}, 2);
  const auto j = profile("j", {0.6, 0.3, 0.1, 0.0}, 2);
  const auto d = profile("d", {0.1, 0.1, 0.4, 0.4}, 2);
  const PublicProfile pub{{{0.25, 0.25, 0.25, 0.25}}};
  EXPECT_EQ(hoten_utility(i, j, d, pub, kDefaults), 0.5);
}

TEST(HotenUtility, PairSumsToOne) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0, 1);
  const auto random_w = [&] {
    std::vector<double> w(10);
    double total = 0;
    for (auto& x : w) total += (x = u(rng) < 0.4 ? 0.0 : u(rng));
    if (total == 0) w[0] = total = 1;
    for (auto& x : w) x /= total;
    return w;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const auto i = profile("i", random_w(), 2);
    const auto j = profile("j", random_w(), 2);
    const auto d = profile("d", random_w(), 2);
    const PublicProfile pub{{random_w()}};
    const double ui = hoten_utility(i, j, d, pub, kDefaults);
    const double uj = hoten_utility(j, i, d, pub, kDefaults);
    EXPECT_NEAR(ui + uj, 1.0, 1e-9);
    EXPECT_GE(ui, 0.0);
    EXPECT_LE(ui, 1.0);
    EXPECT_EQ(ui < uj, uj > 0.5);
  }
}

TEST(HotenUtility, CentralityOnly) {
  const EntropyParams only_bet{1e-6, 1e-6, 1.0, 0.0, 0.0};
  EXPECT_NEAR(hoten_utility(UtilityTerms{2, 5, 1}, UtilityTerms{3, 1, 7}, only_bet), 0.4, 1e-15);
}

TEST(HotenUtility, ScaleFreeComponents) {
  const UtilityTerms i{2.0, 0.7, 1.1};
  const UtilityTerms j{3.0, 0.2, 0.4};
  const double base = hoten_utility(i, j, kDefaults);
  for (const double c : {0.5, 4.0, 1e3}) {
    EXPECT_NEAR(hoten_utility({i.centrality * c, i.similarity_to_dest, i.personality},
                              {j.centrality * c, j.similarity_to_dest, j.personality}, kDefaults),
                base, 1e-15);
  }
}

TEST(HotenUtility, ZeroPersonalitiesSplitEvenly) {
  EXPECT_EQ(pair_share(0.0, 0.0), 0.5);
  EXPECT_EQ(hoten_utility(UtilityTerms{1, 1, 0}, UtilityTerms{1, 1, 0}, kDefaults), 0.5);
}

}  // namespace
}  // namespace hoten
