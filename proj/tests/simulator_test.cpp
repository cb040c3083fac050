#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "polarharq/errors.hpp"
#include "polarharq/serialize.hpp"
#include "polarharq/simulator.hpp"

namespace polarharq {
namespace {

SimConfig small_config(Configuration c) {
  SimConfig cfg;
  cfg.configuration = c;
  cfg.setup = make_reproduction_setup(64, 48, 16);
  cfg.eb_n0_db = {1.0, 2.0};
  cfg.stopping = {20, 600};
  cfg.seed = 42;
  cfg.batch_size = 64;
  return cfg;
}

TEST(Wilson, KnownValues) {
  const Interval i = wilson_interval(50, 100);
  EXPECT_NEAR(i.lo, 0.4038, 1e-4);
  EXPECT_NEAR(i.hi, 0.5962, 1e-4);
  const Interval z = wilson_interval(0, 100);
  EXPECT_EQ(z.lo, 0.0);
  EXPECT_NEAR(z.hi, 0.0370, 1e-4);
  EXPECT_TRUE(i.contains(0.5));
  EXPECT_FALSE(i.contains(0.6));
}

TEST(Csv, HeaderAndRow) {
  EXPECT_EQ(fer_csv_header(), "config,eb_n0_db,frames,errors,fer,round1_success_rate,seed");
  FerRecord r{1.5, 1000, 100, 850, 7};
  EXPECT_EQ(fer_csv_row(Configuration::B, r), "B,1.5000,1000,100,1.000000e-01,8.500000e-01,7");
}

TEST(Configuration, Names) {
  for (Configuration c : {Configuration::A, Configuration::B, Configuration::C}) {
    EXPECT_EQ(configuration_from_string(to_string(c)), c);
  }
  EXPECT_THROW(configuration_from_string("D"), ConfigError);
}

TEST(Setup, SharedRate) {
  const auto s = make_reproduction_setup(64, 48, 16);
  EXPECT_DOUBLE_EQ(normalization_rate(s), 32.0 / 128.0);
  EXPECT_EQ(s.single.n, 128u);
  EXPECT_EQ(s.single.info_positions(), s.harq.extended.info_positions());
}

TEST(Frame, DependsOnlyOnSeedAndIndex) {
  const auto setup = make_reproduction_setup(64, 48, 16);
  FrameSimulator a(Configuration::A, setup), b(Configuration::A, setup);
  for (std::uint64_t f = 0; f < 30; ++f) {
    const auto x = a.run(1.0, 9, f);
    const auto y = b.run(1.0, 9, 29 - f);
    (void)y;
    const auto z = b.run(1.0, 9, f);
    EXPECT_EQ(x.error, z.error);
    EXPECT_EQ(x.round1_success, z.round1_success);
  }
}

TEST(Frame, HighSnrNeverFails) {
  const auto setup = make_reproduction_setup(64, 48, 16);
  for (Configuration c : {Configuration::A, Configuration::B, Configuration::C}) {
    FrameSimulator sim(c, setup);
    for (std::uint64_t f = 0; f < 50; ++f) EXPECT_FALSE(sim.run(12.0, 3, f).error);
  }
}

TEST(RunFer, WorkerCountDoesNotChangeResults) {
  for (Configuration c : {Configuration::A, Configuration::C}) {
    SimConfig one = small_config(c);
    SimConfig many = one;
    many.workers = 3;
    const auto r1 = run_fer(one);
    const auto r3 = run_fer(many);
    ASSERT_EQ(r1.size(), 2u);
    EXPECT_EQ(r1, r3);
    for (std::size_t i = 0; i < r1.size(); ++i) {
      EXPECT_EQ(fer_csv_row(c, r1[i]), fer_csv_row(c, r3[i]));
    }
  }
}

TEST(RunFer, StoppingRule) {
  SimConfig cfg = small_config(Configuration::A);
  cfg.eb_n0_db = {-2.0, 15.0};
  const auto r = run_fer(cfg);
  EXPECT_EQ(r[0].frame_errors, 20u);
  EXPECT_LE(r[0].frames, 600u);
  EXPECT_EQ(r[1].frames, 600u);
  EXPECT_EQ(r[1].frame_errors, 0u);
  EXPECT_EQ(r[1].round1_successes, 600u);
  EXPECT_EQ(r[0].seed, 42u);
}

TEST(RunFer, SeedChangesResults) {
  SimConfig a = small_config(Configuration::B);
  SimConfig b = a;
  b.seed = 43;
  EXPECT_NE(run_fer(a), run_fer(b));
}

TEST(Serialize, CodeSpecRoundTrip) {
  const auto setup = make_reproduction_setup(64, 48, 16);
  const nlohmann::json j = setup.single;
  EXPECT_FALSE(is_extended_spec(j));
  EXPECT_EQ(parse_code_spec(j), setup.single);
  const nlohmann::json e = setup.harq;
  EXPECT_TRUE(is_extended_spec(e));
  EXPECT_EQ(parse_extended_spec(e), setup.harq);
  const auto text = e.dump();
  EXPECT_EQ(parse_extended_spec(nlohmann::json::parse(text)), setup.harq);
}

TEST(Serialize, BitTypeShape) {
  const nlohmann::json j = BitType::pc_frozen(5);
  EXPECT_EQ(j.at("kind"), "pc_frozen");
  EXPECT_EQ(j.at("partner"), 5);
  EXPECT_EQ(nlohmann::json(BitType::info()).at("kind"), "info");
}

TEST(Serialize, MalformedInputs) {
  EXPECT_THROW(parse_code_spec(nlohmann::json::parse(R"({"n": 4})")), ConfigError);
  auto j = nlohmann::json(make_reproduction_setup(64, 48, 16).single);
  j["bit_types"][0] = {{"kind", "mystery"}};
  EXPECT_THROW(parse_code_spec(j), ConfigError);
  j = nlohmann::json(make_reproduction_setup(64, 48, 16).single);
  j["k"] = 3;
  EXPECT_THROW(parse_code_spec(j), Error);
}

TEST(Serialize, ProfileKeys) {
  TraversalProfile p;
  p.record(NodeClass::Rep, 4);
  p.record(NodeClass::Generic, 1);
  const auto j = profile_to_json(p);
  EXPECT_EQ(j.at("REP"), 1);
  EXPECT_EQ(j.at("LEAF"), 1);
  EXPECT_EQ(j.at("Total"), 2);
  for (const char* key : {"R0", "R1", "REP2", "SPC", "SPC2", "PCR", "RPC"}) EXPECT_EQ(j.at(key), 0);
}

}  // namespace
}  // namespace polarharq
