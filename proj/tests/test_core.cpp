#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dea/dataset.hpp"
#include "helpers.hpp"

using namespace dea;

namespace {

Dataset from_text(const std::string& text) {
  std::istringstream in(text);
  return validate_dataset(parse_csv(in));
}

}  // namespace

TEST_CASE("minimal dataset parses") {
  const auto ds = from_text("dmu,name,x_a,y_b\n1,solo,1,1\n");
  CHECK(ds.n() == 1);
  CHECK(ds.m == 1);
  CHECK(ds.s == 1);
  CHECK(ds.dmus[0].name == "solo");
  CHECK(ds.input_labels[0] == "a");
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(from_text("dmu,name,x_a,y_b\n"), EmptyDataset);
  CHECK_THROWS_AS(from_text("dmu,name,x_a,y_b\n1,a,1,0\n"), ZeroVector);
  CHECK_THROWS_AS(
      from_text("dmu,name,x_a,y_b,y_c,y_d\n1,a,1,0,0,0\n"), ZeroVector);
  CHECK_THROWS_AS(from_text("dmu,name,x_a,y_b\n1,a,0,1\n"), ZeroVector);
  CHECK_THROWS_AS(from_text("dmu,name,x_a,y_b\n1,a,-1,1\n"), NegativeValue);
  CHECK_THROWS_AS(from_text("dmu,name,x_a,y_b\n1,a,nope,1\n"), NonFiniteValue);
  CHECK_THROWS_AS(from_text("dmu,name,x_a,y_b\n1,a,inf,1\n"), NonFiniteValue);
  CHECK_THROWS_AS(
      from_text("dmu,name,x_a,y_b\n1,a,1,1\n2,a,2,2\n"), DuplicateName);
  CHECK_THROWS_AS(
      from_text("dmu,name,x_a,y_b\n2,a,1,1\n"), DataError);  // ids must be 1..n
  CHECK_THROWS_AS(from_text("dmu,name,y_b,x_a\n1,a,1,1\n"), DataError);
}

TEST_CASE("index sets are exact sign partitions") {
  Dmu d;
  d.x = {1.0, 2.0, 3.0};
  d.y = {4.0, 5.0, 6.0};
  auto sets = index_sets(d);
  CHECK(sets.positive_inputs == std::vector<std::size_t>{0, 1, 2});
  CHECK(sets.positive_outputs == std::vector<std::size_t>{0, 1, 2});

  d.y = {0.0, 0.0, 1.0};  // the Zambia pattern
  sets = index_sets(d);
  CHECK(sets.positive_outputs == std::vector<std::size_t>{2});

  d.y = {1.0, 0.0, 0.0};  // the Pakistan pattern
  sets = index_sets(d);
  CHECK(sets.positive_outputs == std::vector<std::size_t>{0});
}

TEST_CASE("index sets depend on sign only") {
  Dmu d;
  d.x = {0.0, 3.5, 1e-300};
  d.y = {2.0, 0.0};
  const auto base = index_sets(d);
  for (double c : {0.5, 2.0, 1e6, 1e-6}) {
    Dmu scaled = d;
    for (auto& v : scaled.x) v *= c;
    for (auto& v : scaled.y) v *= c;
    const auto s = index_sets(scaled);
    CHECK(s.positive_inputs == base.positive_inputs);
    CHECK(s.positive_outputs == base.positive_outputs);
  }
  // Idempotence: recomputing changes nothing.
  const auto again = index_sets(d);
  CHECK(again.positive_inputs == base.positive_inputs);
  CHECK(again.positive_outputs == base.positive_outputs);
}

TEST_CASE("bundled case-study table loads") {
  const auto ds = load_dataset(testing::data_dir() + "/paris2024.csv");
  CHECK(ds.n() == 90);
  CHECK(ds.m == 3);
  CHECK(ds.s == 3);
  // Spot checks against the published table.
  const Dmu& usa = ds.by_id(1);
  CHECK(usa.name == "USA");
  CHECK(usa.x == std::vector<double>{81632.0, 334915.0, 619.0});
  CHECK(usa.y == std::vector<double>{40.0, 44.0, 42.0});
  const Dmu& nz = ds.by_id(11);
  CHECK(nz.x[1] == doctest::Approx(5228.1));
  const Dmu& zambia = ds.by_id(90);
  CHECK(zambia.name == "Zambia");
  CHECK(zambia.x == std::vector<double>{1381.0, 20500.0, 31.0});
  CHECK(zambia.y == std::vector<double>{0.0, 0.0, 1.0});
  const Dmu& pakistan = ds.by_id(63);
  CHECK(pakistan.y == std::vector<double>{1.0, 0.0, 0.0});

  // Every accepted row has a positive entry on both sides.
  for (const Dmu& d : ds.dmus) {
    CHECK(*std::max_element(d.x.begin(), d.x.end()) > 0.0);
    CHECK(*std::max_element(d.y.begin(), d.y.end()) > 0.0);
  }
}

TEST_CASE("technology construction guards") {
  TradeoffSpec to;
  to.columns.push_back(testing::column("c", {1.0}, {1.0}));
  CHECK_THROWS_AS(
      Technology(testing::make_dataset({{1.0}}, {{1.0}}), to, Rts::kCrs), DataError);
  TradeoffSpec bad;
  bad.columns.push_back(testing::column("c", {1.0, 2.0}, {1.0}));
  CHECK_THROWS_AS(
      Technology(testing::make_dataset({{1.0}}, {{1.0}}), bad, Rts::kVrsTradeoffs),
      DimensionMismatch);
}
