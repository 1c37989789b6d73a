#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "steiner/errors.hpp"
#include "steiner/io.hpp"

using namespace steiner;
using nlohmann::json;

namespace {

const Gauge kExample1{3, 15, 1, 4};
const Gauge kHexagon{6, 3, 1, 0};

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(FormatNumber, RoundTripsShortest) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(4.0), "4");
  EXPECT_EQ(format_number(-2.0 / 15.0), "-0.13333333333333333");
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    const double v = dist(rng);
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
}

TEST(ChainJson, Layout) {
  const json doc = json::parse(chain_to_json(chain_at_phase(kExample1, 0.0)));
  EXPECT_EQ(doc["gauge"]["n"], 3);
  EXPECT_EQ(doc["gauge"]["R"], 15.0);
  EXPECT_EQ(doc["gauge"]["d"], 4.0);
  EXPECT_EQ(doc["phase"], 0.0);
  ASSERT_EQ(doc["circles"].size(), 3u);
  EXPECT_NEAR(doc["circles"][0]["x"].get<double>(), 10.0, 1e-12);
  EXPECT_NEAR(doc["circles"][0]["radius"].get<double>(), 9.0, 1e-12);
}

TEST(ChainJson, RoundTripIsExact) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    const int n = 3 + i % 5;
    const SteinerChain chain = chain_at_phase(oracle::random_gauge(rng, n), oracle::random_phase(rng, n));
    const SteinerChain back = chain_from_json(chain_to_json(chain));
    EXPECT_EQ(back.gauge.n, chain.gauge.n);
    EXPECT_EQ(back.gauge.d, chain.gauge.d);
    EXPECT_EQ(back.phase, chain.phase);
    ASSERT_EQ(back.circles.size(), chain.circles.size());
    for (std::size_t k = 0; k < chain.circles.size(); ++k) {
      EXPECT_EQ(back.circles[k].center, chain.circles[k].center);
      EXPECT_EQ(back.circles[k].radius, chain.circles[k].radius);
    }
  }
}

TEST(ChainJson, MalformedDocumentsAreInvalidInput) {
  EXPECT_THROW(chain_from_json("{"), InvalidInput);
  EXPECT_THROW(chain_from_json("[]"), InvalidInput);
  EXPECT_THROW(chain_from_json(R"({"gauge":{"n":3,"R":15,"r":1,"d":4},"phase":0})"), InvalidInput);
  EXPECT_THROW(chain_from_json(R"({"gauge":{"n":"three","R":15,"r":1,"d":4},"phase":0,"circles":[]})"),
               InvalidInput);
}

TEST(ChainJson, TamperedDocumentsFailRevalidation) {
  json doc = json::parse(chain_to_json(chain_at_phase(kExample1, 0.0)));
  json moved = doc;
  moved["circles"][1]["x"] = moved["circles"][1]["x"].get<double>() + 0.01;
  EXPECT_THROW(chain_from_json(moved.dump()), ChainValidationError);

  json dropped = doc;
  dropped["circles"].erase(2);
  EXPECT_THROW(chain_from_json(dropped.dump()), ChainValidationError);

  json off_gauge = doc;
  off_gauge["gauge"]["d"] = 4.5;
  EXPECT_THROW(chain_from_json(off_gauge.dump()), ChainValidationError);
}

TEST(ChainJson, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "steiner_io_roundtrip.json";
  const SteinerChain chain = chain_at_phase(kHexagon, 0.2);
  write_text_file(path.string(), chain_to_json(chain));
  const SteinerChain back = read_chain_file(path.string());
  EXPECT_EQ(back.circles.size(), 6u);
  EXPECT_EQ(back.circles[3].center, chain.circles[3].center);
  std::filesystem::remove(path);
  EXPECT_THROW(read_chain_file(path.string()), InvalidInput);
}

TEST(SweepCsv, HeaderColumns) {
  EXPECT_EQ(sweep_csv_header(3),
            "phase,I1,I2,I3,ReJ0_0,ImJ0_0,ReJ1_0,ImJ1_0,ReJ1_1,ImJ1_1,ReJ2_0,ImJ2_0,ReJ2_1,ImJ2_1,ReJ2_2,"
            "ImJ2_2");
}

TEST(SweepCsv, RowsMatchSamples) {
  const auto rows = sweep_samples(kExample1, 5);
  std::ostringstream os;
  write_sweep_csv(os, 3, rows);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, sweep_csv_header(3));
  int count = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 15);
    const double phase = std::stod(line.substr(0, line.find(',')));
    EXPECT_EQ(phase, rows[std::size_t(count)].phase);
    ++count;
  }
  EXPECT_EQ(count, 5);
}

TEST(Svg, HexagonHasEightCircles) {
  const std::string svg = render_svg(chain_at_phase(kHexagon, 0.0));
  EXPECT_EQ(count_of(svg, "<circle"), 8u);
  EXPECT_EQ(count_of(svg, "class=\"chain\""), 6u);
  EXPECT_EQ(count_of(svg, "class=\"outer-parent\""), 1u);
  EXPECT_EQ(count_of(svg, "class=\"inner-parent\""), 1u);
  EXPECT_NE(svg.find("viewBox=\"-3.3 -3.3 6.6 6.6\""), std::string::npos);
}

TEST(Svg, Example1Geometry) {
  const std::string svg = render_svg(chain_at_phase(kExample1, 0.0));
  EXPECT_NE(svg.find("class=\"outer-parent\" cx=\"4\" cy=\"0\" r=\"15\""), std::string::npos);
  EXPECT_NE(svg.find("class=\"inner-parent\" cx=\"0\" cy=\"0\" r=\"1\""), std::string::npos);
  const std::regex chain_re("class=\"chain\" cx=\"([^\"]+)\" cy=\"([^\"]+)\" r=\"([^\"]+)\"");
  std::vector<std::array<double, 3>> got;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), chain_re); it != std::sregex_iterator(); ++it)
    got.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3])});
  ASSERT_EQ(got.size(), 3u);
  EXPECT_NEAR(got[0][0], 10.0, 1e-12);
  EXPECT_NEAR(got[0][2], 9.0, 1e-12);
  EXPECT_NEAR(got[1][0], -3.5, 1e-12);
  EXPECT_NEAR(std::abs(got[1][1]), 5.625, 1e-12);
}

TEST(Svg, OutputIsDeterministic) {
  const SteinerChain chain = chain_at_phase(kExample1, 0.3);
  EXPECT_EQ(render_svg(chain), render_svg(chain));
  EXPECT_EQ(render_svg(chain), render_svg(chain_from_json(chain_to_json(chain))));
}
