#include <gtest/gtest.h>

#include <sstream>

#include "capfre/io.hpp"
#include "support.hpp"

namespace capfre {
namespace {

using io::InputError;
using io::json;

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(Numbers, ShortestRoundTrip) {
  EXPECT_EQ(io::format_number(0.15), "0.15");
  EXPECT_EQ(io::format_number(1.0), "1");
  EXPECT_EQ(io::format_number(3 * 0.05), "0.15000000000000002");
  EXPECT_EQ(io::parse_number(" 0.25 ", "here"), 0.25);
  EXPECT_EQ(io::parse_number_list("0.15,0.2,0.3", "x"), (std::vector<double>{0.15, 0.2, 0.3}));
  EXPECT_NE(error_of([] { io::parse_number("0.2x", "CSV line 3, column x2"); }).find("CSV line 3, column x2"),
            std::string::npos);
  EXPECT_NE(error_of([] { io::parse_number_list("0.1,,0.3", "--x"); }).find("entry 2"), std::string::npos);
}

TEST(ScaleOption, Forms) {
  EXPECT_FALSE(io::parse_scale_option("unit").is_chain());
  EXPECT_EQ(io::parse_scale_option("uniform:20"), Scale::uniform_chain(20));
  EXPECT_EQ(io::parse_scale_option("0,0.5,1").levels(), (std::vector<double>{0, 0.5, 1}));
  EXPECT_THROW(io::parse_scale_option("0.5,1"), InputError);
  EXPECT_THROW(io::parse_scale_option("uniform:zero"), InputError);
}

TEST(CapacityJson, ByteIdenticalRoundTrip) {
  testing::Random rnd(1);
  for (int t = 0; t < 100; ++t) {
    const auto mu = rnd.capacity(rnd.uniform_int(1, 5), 20);
    const std::string text = io::to_json(mu).dump(2);
    const auto back = io::capacity_from_json(json::parse(text));
    EXPECT_EQ(back, mu);
    EXPECT_EQ(io::to_json(back).dump(2), text);
  }
  const Capacity odd(2, Scale::unit_interval(), {0, 0.1 + 0.2, 1.0 / 3.0, 1});
  const std::string text = io::to_json(odd).dump();
  EXPECT_EQ(io::to_json(io::capacity_from_json(json::parse(text))).dump(), text);
}

TEST(CapacityJson, Errors) {
  const auto bad = json::parse(R"({"n": 2, "scale": {"kind": "unit_interval"}, "values": [0, 0.6, 0.2, 0.5]})");
  EXPECT_THROW(io::capacity_from_json(bad), CapacityError);
  const auto raw = io::raw_capacity_from_json(bad);
  EXPECT_EQ(capacity_violations(raw.values, raw.n, raw.scale).size(), 2u);
  EXPECT_THROW(io::capacity_from_json(json::parse(R"({"n": 2, "values": [0, 1]})")), InputError);
  const auto short_values = json::parse(R"({"n": 2, "scale": {"kind": "unit_interval"}, "values": [0, 1]})");
  EXPECT_NE(error_of([&] { io::capacity_from_json(short_values); }).find("expected 4 values"), std::string::npos);
}

const char* kCsv =
    "x1,x2,x3,alpha\n"
    "0.15,0.2,0.3,0.2\n"
    "0.5,0.25,0.3,0.3\n"
    "0.4,0.7,0.35,0.4\n";

TEST(TrainingData, CsvAndJsonAgree) {
  std::istringstream in(kCsv);
  const auto from_csv = io::training_set_from_csv(in, Scale::uniform_chain(20));
  EXPECT_EQ(from_csv, testing::three_criteria_data());
  const auto from_json = io::training_set_from_json(io::to_json(from_csv));
  EXPECT_EQ(from_json, from_csv);
  EXPECT_EQ(io::to_csv(from_csv), kCsv);
}

TEST(TrainingData, CsvErrorsNameTheLocation) {
  auto load = [](const std::string& text, const Scale& scale) {
    return error_of([&] {
      std::istringstream in(text);
      io::training_set_from_csv(in, scale);
    });
  };
  const auto chain = Scale::uniform_chain(20);
  EXPECT_NE(load("x1,x2,alpha\n0.1,abc,0.2\n", chain).find("CSV line 2, column x2"), std::string::npos);
  EXPECT_NE(load("x1,x2,alpha\n0.1,0.2,0.2\n0.1,0.33,0.2\n", chain).find("CSV line 3, column x2"),
            std::string::npos);
  EXPECT_NE(load("x1,x2,alpha\n0.1,0.2\n", chain).find("expected 3 fields"), std::string::npos);
  EXPECT_NE(load("x1,y,alpha\n", chain).find("expected x2"), std::string::npos);
  EXPECT_NE(load("x1,x2\n", chain).find("header"), std::string::npos);
  EXPECT_NE(load("x1,x2,alpha\n0.1,1.5,0.2\n", Scale::unit_interval()).find("column x2"), std::string::npos);
  EXPECT_FALSE(load("x1,x2,alpha\n", chain).empty());  // no items
}

TEST(TrainingData, JsonErrors) {
  const auto dims = json::parse(
      R"({"n": 2, "scale": {"kind": "unit_interval"}, "items": [{"x": [0.1, 0.2], "alpha": 0.1},
          {"x": [0.1], "alpha": 0.1}]})");
  EXPECT_NE(error_of([&] { io::training_set_from_json(dims); }).find("item 2"), std::string::npos);
  EXPECT_THROW(io::training_set_from_json(json::parse(R"({"n": 2})")), InputError);
}

TEST(SystemJson, RoundTripAndDefaults) {
  const auto sys = build_maxmin_system(testing::three_criteria_data(), 2);
  const auto back = io::system_from_json(io::to_json(sys));
  EXPECT_EQ(back.matrix(), sys.matrix());
  EXPECT_EQ(back.rhs(), sys.rhs());
  EXPECT_EQ(back.labels(), sys.labels());
  EXPECT_EQ(back.scale(), sys.scale());

  const auto bare = io::system_from_json(json::parse(R"({"kind": "minmax", "matrix": [[0.5, 0.2]], "rhs": [0.3]})"));
  EXPECT_EQ(bare.kind(), Composition::MinMax);
  EXPECT_EQ(bare.labels(), (std::vector<ColumnLabel>{0, 1}));
  EXPECT_FALSE(bare.scale().is_chain());
  EXPECT_THROW(io::system_from_json(json::parse(R"({"kind": "maxmax", "matrix": [[0.5]], "rhs": [0.3]})")),
               InputError);
  EXPECT_THROW(io::system_from_json(json::parse(R"({"kind": "maxmin", "matrix": [[0.5]], "rhs": [0.3, 0.1]})")),
               InputError);
}

TEST(Reports, LearnReportFields) {
  const auto r = learn_qmax(testing::three_criteria_data(), 1);
  const auto j = io::to_json(r);
  EXPECT_EQ(j["mode"], "qmax");
  EXPECT_EQ(j["q"], 1);
  EXPECT_TRUE(j["capacity"].is_null());
  EXPECT_EQ(j["witness"]["subset"], "{2}");
  EXPECT_EQ(j["witness"]["value"], 0.4);
}

}  // namespace
}  // namespace capfre
