#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "graphfair/config.hpp"
#include "graphfair/instances.hpp"
#include "graphfair/io.hpp"
#include "graphfair/valuation.hpp"

using namespace graphfair;

namespace {

Instance path_instance() {
  Graph g(3, {{0, 1}, {1, 2}});
  AdditiveValuation u({1, Rational(1, 2), 2});
  return Instance{2, g, {u, u}};
}

bool has_code(const std::vector<Violation>& vs, const std::string& code) {
  for (const auto& v : vs)
    if (v.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("additive bundle values are sums") {
  AdditiveValuation u({1, 2, Rational(1, 2)});
  CHECK(u.goods() == 3);
  CHECK(u.value(std::vector<int>{}) == Rational(0));
  CHECK(u.value(std::vector<int>{0, 2}) == Rational(3, 2));
  CHECK(u.value(std::uint32_t(0b101)) == Rational(3, 2));
  CHECK(u.value(std::uint32_t(0b111)) == u.total());
  CHECK(u.total() == Rational(7, 2));
  CHECK_THROWS_AS(u.value(std::vector<int>{3}), std::invalid_argument);
}

TEST_CASE("tabulated values come straight from the table") {
  // Two goods: 0, {0} -> 1, {1} -> 2, {0,1} -> 2 (monotone, subadditive).
  TabulatedValuation t(2, {0, 1, 2, 2});
  CHECK(t.goods() == 2);
  CHECK(t.value(std::uint32_t(0)) == Rational(0));
  CHECK(t.value(std::vector<int>{0}) == Rational(1));
  CHECK(t.value(std::vector<int>{1}) == Rational(2));
  CHECK(t.value(std::vector<int>{0, 1}) == Rational(2));
  CHECK(t.total() == Rational(2));
  CHECK_THROWS_AS(t.value(std::vector<int>{2}), std::invalid_argument);
}

TEST_CASE("tabulated construction rejects bad tables") {
  CHECK_THROWS_AS(TabulatedValuation(2, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(TabulatedValuation(search_caps().table_goods + 1, {}), CapExceeded);
}

TEST_CASE("valuation variant dispatches to either kind") {
  Valuation add = AdditiveValuation({1, 2});
  Valuation tab = TabulatedValuation(2, {0, 1, 2, 3});
  CHECK(add.is_additive());
  CHECK_FALSE(tab.is_additive());
  CHECK(add.additive() != nullptr);
  CHECK(add.tabulated() == nullptr);
  CHECK(tab.tabulated() != nullptr);
  CHECK(add.goods() == 2);
  CHECK(tab.goods() == 2);
  CHECK(add.value(std::vector<int>{1}) == Rational(2));
  CHECK(tab.value(std::vector<int>{1}) == Rational(2));
  CHECK(add.total() == Rational(3));
  CHECK(tab.total() == Rational(3));
}

TEST_CASE("partition recognition") {
  const Instance inst = path_instance();
  CHECK(is_partition(inst, Allocation{{{0, 1}, {2}}}));
  CHECK(is_partition(inst, Allocation{{{}, {0, 1, 2}}}));
  CHECK_FALSE(is_partition(inst, Allocation{{{0, 1, 2}}}));           // bundle count
  CHECK_FALSE(is_partition(inst, Allocation{{{0}, {2}}}));            // missing good
  CHECK_FALSE(is_partition(inst, Allocation{{{0, 1}, {1, 2}}}));      // overlap
  CHECK_FALSE(is_partition(inst, Allocation{{{0, 1}, {2, 3}}}));      // out of range
}

TEST_CASE("validation accepts well formed instances") {
  CHECK(validate(path_instance()).empty());
  CHECK(validate(make_fig2_wheel()).empty());
  std::mt19937_64 rng(421);
  TabulatedValuation t = random_monotone_table(3, 5, rng);
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(validate(Instance{2, g, {t, t}}).empty());
}

TEST_CASE("validation reports structural defects by code") {
  Graph g(3, {{0, 1}, {1, 2}});
  AdditiveValuation u({1, 1, 1});

  Graph disconnected(3, {{0, 1}});
  CHECK(has_code(validate(Instance{2, disconnected, {u, u}}), "connectivity"));

  CHECK(has_code(validate(Instance{2, g, {u}}), "dimension"));
  AdditiveValuation short_u({1, 1});
  CHECK(has_code(validate(Instance{2, g, {short_u, short_u}}), "dimension"));

  AdditiveValuation neg({1, Rational(-1, 2), 1});
  CHECK(has_code(validate(Instance{2, g, {neg, neg}}), "negative"));

  TabulatedValuation nonzero_empty(2, {1, 1, 2, 2});
  Graph k2(2, {{0, 1}});
  CHECK(has_code(validate(Instance{1, k2, {nonzero_empty}}), "empty-bundle"));

  TabulatedValuation drops(2, {0, 3, 2, 1});  // adding good 1 to {0} drops the value
  CHECK(has_code(validate(Instance{1, k2, {drops}}), "monotonicity"));

  CHECK(has_code(validate(Instance{0, g, {}}), "agents"));
}

TEST_CASE("instance documents round trip byte for byte") {
  for (const Instance& inst : {path_instance(), make_fig2_wheel(), make_fig7_k2b(5)}) {
    const std::string text = serialize_instance(inst);
    const Instance back = parse_instance(text);
    CHECK(serialize_instance(back) == text);
    CHECK(back.agents == inst.agents);
    CHECK(back.graph.edges() == inst.graph.edges());
  }

  // Tabulated form.
  std::mt19937_64 rng(422);
  TabulatedValuation t = random_monotone_table(3, 4, rng);
  Instance inst{2, Graph(3, {{0, 1}, {1, 2}}), {t, t}};
  const std::string text = serialize_instance(inst);
  const Instance back = parse_instance(text);
  REQUIRE_FALSE(back.valuations[0].is_additive());
  CHECK(back.valuations[0].tabulated()->table() == t.table());
  CHECK(serialize_instance(back) == text);
}

TEST_CASE("fractions serialize in lowest terms and parse back") {
  AdditiveValuation u({Rational(1, 2), Rational(3), Rational(5, 6)});
  Instance inst{1, Graph(3, {{0, 1}, {1, 2}}), {u}};
  const std::string text = serialize_instance(inst);
  CHECK(text.find("\"1/2\"") != std::string::npos);
  CHECK(text.find("\"5/6\"") != std::string::npos);
  const Instance back = parse_instance(text);
  CHECK(back.valuations[0].additive()->values() == u.values());
}

TEST_CASE("instance parse errors carry the right code") {
  auto code_of = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.code();
    }
    FAIL("expected a parse error");
    return ParseErrorCode::MalformedDocument;
  };

  CHECK(code_of("not json") == ParseErrorCode::MalformedDocument);
  CHECK(code_of("{}") == ParseErrorCode::MalformedDocument);
  CHECK(code_of(R"({"n": "two", "graph": {"m": 1, "edges": []},
                    "valuations": {"type": "additive", "values": [[1]]}})") ==
        ParseErrorCode::MalformedDocument);

  const std::string frame = R"({"n": 2, "graph": {"m": 3, "edges": EDGES},
    "valuations": {"type": "additive", "values": VALUES}})";
  auto with = [&](const std::string& edges, const std::string& values) {
    std::string text = frame;
    text.replace(text.find("EDGES"), 5, edges);
    text.replace(text.find("VALUES"), 6, values);
    return text;
  };
  const std::string ok_values = R"([[1,2,3],[1,2,3]])";

  CHECK(code_of(with("[[0,0]]", ok_values)) == ParseErrorCode::LoopEdge);
  CHECK(code_of(with("[[0,1],[0,1]]", ok_values)) == ParseErrorCode::DuplicateEdge);
  CHECK(code_of(with("[[1,0]]", ok_values)) == ParseErrorCode::MalformedDocument);
  CHECK(code_of(with("[[0,3]]", ok_values)) == ParseErrorCode::IndexOutOfRange);
  CHECK(code_of(with("[[0,1],[1,2]]", "[[1,2],[1,2]]")) == ParseErrorCode::DimensionMismatch);
  CHECK(code_of(with("[[0,1],[1,2]]", "[[1,2,3]]")) == ParseErrorCode::DimensionMismatch);
  CHECK(code_of(with("[[0,1],[1,2]]", R"([[1,2,-3],[1,2,3]])")) == ParseErrorCode::NegativeValue);
  CHECK(code_of(with("[[0,1],[1,2]]", R"([[1,2,"2/4"],[1,2,3]])")) ==
        ParseErrorCode::NonCanonicalRational);
  CHECK(code_of(with("[[0,1],[1,2]]", R"([[1,2,"3/1"],[1,2,3]])")) ==
        ParseErrorCode::NonCanonicalRational);
  CHECK(code_of(with("[[0,1],[1,2]]", R"([[1,2,"x"],[1,2,3]])")) == ParseErrorCode::MalformedDocument);
  CHECK(code_of(with("[[0,1],[1,2]]", R"([[1,2,1.5],[1,2,3]])")) ==
        ParseErrorCode::NonCanonicalRational);

  // Tabulated document with a missing mask.
  CHECK(code_of(R"({"n": 1, "graph": {"m": 2, "edges": [[0,1]]},
    "valuations": {"type": "table", "values": [{"0": 0, "1": 1, "2": 1}]}})") ==
        ParseErrorCode::DimensionMismatch);
}

TEST_CASE("allocation documents round trip and reject malformed input") {
  const Allocation alloc{{{0, 2}, {}, {1}}};
  const std::string text = serialize_allocation(alloc);
  const Allocation back = parse_allocation(text);
  CHECK(back.bundles == alloc.bundles);
  CHECK(serialize_allocation(back) == text);

  auto code_of = [](const std::string& doc) {
    try {
      parse_allocation(doc);
    } catch (const ParseError& e) {
      return e.code();
    }
    FAIL("expected a parse error");
    return ParseErrorCode::MalformedDocument;
  };
  CHECK(code_of("[]") == ParseErrorCode::MalformedDocument);
  CHECK(code_of(R"({"bundles": [[1, 0]]})") == ParseErrorCode::MalformedDocument);
  CHECK(code_of(R"({"bundles": [[0, 0]]})") == ParseErrorCode::MalformedDocument);
  CHECK(code_of(R"({"bundles": [[-1]]})") == ParseErrorCode::IndexOutOfRange);
  CHECK(code_of(R"({"bundles": [["a"]]})") == ParseErrorCode::MalformedDocument);
}

TEST_CASE("parse error text names the code") {
  try {
    parse_instance("{}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("malformed-document") == 0);
  }
}
