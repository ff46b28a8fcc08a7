#include <doctest.h>

#include <random>
#include <sstream>

#include "norminf/enumerate.hpp"
#include "norminf/errors.hpp"
#include "norminf/serialize.hpp"

using namespace norminf;

namespace {

LatticePtr L(const char* spec) { return Lattice::build(GroupSpec::parse(spec)); }

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string catalogue_text(const Lattice& l, const std::vector<PairSet>& systems, bool comp) {
  std::ostringstream out;
  write_catalogue(out, l, systems, comp);
  return out.str();
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("json layout") {
  auto l = L("2,3");
  PairSet s;
  s.set(l->pair_index(0, 2));
  CHECK(to_json_text(*l, s) == "{\"group\":\"2,3\",\"arrows\":[[[0,0],[1,0]]]}\n");
  CHECK(to_json_text(*l, PairSet{}) == "{\"group\":\"2,3\",\"arrows\":[]}\n");
}

TEST_CASE("json round trip") {
  for (const char* spec : {"2", "2,3,5", "2^2,3", "2,3,5,7,11"}) {
    auto l = L(spec);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) {
      PairSet s;
      for (std::size_t w = 0; w < PairSet::kWords; ++w) s.set_word(w, rng());
      s = s & PairSet::first_n(l->pair_count());
      auto parsed = parse_system_json(to_json_text(*l, s));
      CHECK(parsed.members == s);
      CHECK(parsed.lattice->spec() == l->spec());
      CHECK(parse_system_json(to_json_text(*l, s), l).lattice == l);
    }
  }
}

TEST_CASE("json input handling") {
  auto l = L("2,3");
  auto shuffled = parse_system_json(R"({"arrows": [[[1,0],[1,1]], [[0,0],[0,1]]], "group": "3,2"})");
  CHECK(shuffled.members == PairSet::from_word(0b10001));

  CHECK(parse_system_json(R"({"arrows": []})", l).lattice == l);
  CHECK_THROWS_AS(parse_system_json(R"({"arrows": []})"), FormatError);
  CHECK_THROWS_AS(parse_system_json(R"({"group": "2,5", "arrows": []})", l), InvalidArgument);
  CHECK_THROWS_AS(parse_system_json("{not json"), FormatError);
  CHECK_THROWS_AS(parse_system_json(R"({"group": "2,3"})"), FormatError);
  CHECK_THROWS_AS(parse_system_json(R"({"group": "2,3", "arrows": [[[0,0]]]})"), FormatError);
  CHECK_THROWS_AS(parse_system_json(R"({"group": "2,3", "arrows": [[[0,0],[2,0]]]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_system_json(R"({"group": "2,3", "arrows": [[[1,0],[0,0]]]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_system_json(R"({"group": "2,3", "arrows": [[["a",0],[1,0]]]})"),
                  FormatError);
}

TEST_CASE("hex encoding") {
  auto l = L("2,3");
  CHECK(to_hex(*l, PairSet{}) == "00");
  CHECK(to_hex(*l, TransferSystem::full(l).members()) == "1f");
  CHECK(to_hex(*L("2"), PairSet::from_word(1)) == "1");
  CHECK(to_hex(*L("2,3,5"), PairSet{}).size() == 5);
  CHECK(from_hex(*l, "1F") == PairSet::from_word(0x1f));
  CHECK(from_hex(*l, "7") == PairSet::from_word(7));
  CHECK_THROWS_AS(from_hex(*l, "20"), FormatError);
  CHECK_THROWS_AS(from_hex(*l, "g"), FormatError);
  CHECK_THROWS_AS(from_hex(*l, ""), FormatError);
  CHECK_THROWS_AS(from_hex(*l, "001"), FormatError);

  auto big = L("2,3,5,7,11");
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    PairSet s;
    for (std::size_t w = 0; w < PairSet::kWords; ++w) s.set_word(w, rng());
    s = s & PairSet::first_n(big->pair_count());
    auto hex = to_hex(*big, s);
    CHECK(hex.size() == (big->pair_count() + 3) / 4);
    CHECK(from_hex(*big, hex) == s);
  }
}

TEST_CASE("hex order matches bit-vector order") {
  auto l = L("2,3,5");
  auto systems = collect_systems(*l);
  for (std::size_t i = 1; i < systems.size(); ++i) {
    CHECK(to_hex(*l, systems[i - 1]) < to_hex(*l, systems[i]));
  }
}

TEST_CASE("catalogue") {
  auto l = L("2,3,5");
  EnumerationOptions dfs, brute;
  brute.engine = Engine::brute;
  auto a = catalogue_text(*l, collect_systems(*l, dfs), true);
  auto b = catalogue_text(*l, collect_systems(*l, brute), true);
  CHECK(a == b);
  CHECK(a.rfind("# norminf catalogue v1\ngroup 2,3,5\npairs 19 fingerprint ", 0) == 0);
  CHECK(count_of(a, "\n") == 4 + 450);

  std::istringstream in(a);
  auto cat = read_catalogue(in);
  CHECK(cat.lattice->spec() == l->spec());
  CHECK(cat.tool_version == kToolVersion);
  REQUIRE(cat.entries.size() == 450);
  auto systems = collect_systems(*l);
  for (std::size_t i = 0; i < systems.size(); ++i) {
    CHECK(cat.entries[i].members == systems[i]);
    CHECK(cat.entries[i].comp == comp_index(*l, systems[i]).d);
  }

  auto plain = catalogue_text(*l, systems, false);
  std::istringstream plain_in(plain);
  CHECK_FALSE(read_catalogue(plain_in).entries.front().comp.has_value());
}

TEST_CASE("catalogue rejects bad input") {
  auto l = L("2,3");
  auto systems = collect_systems(*l);
  auto good = catalogue_text(*l, systems, false);

  auto reject = [](std::string text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_catalogue(in), FormatError);
  };
  SUBCASE("fingerprint") {
    auto pos = good.find("fingerprint ") + 12;
    auto text = good;
    text[pos] = text[pos] == '0' ? '1' : '0';
    reject(text);
  }
  SUBCASE("pair count") {
    auto text = good;
    text.replace(text.find("pairs 5"), 7, "pairs 6");
    reject(text);
  }
  SUBCASE("magic") { reject("# something else\n" + good.substr(good.find('\n') + 1)); }
  SUBCASE("order") {
    std::vector<PairSet> reversed(systems.rbegin(), systems.rend());
    reject(catalogue_text(*l, reversed, false));
  }
  SUBCASE("duplicate") {
    std::vector<PairSet> twice{systems[0], systems[0]};
    reject(catalogue_text(*l, twice, false));
  }
  SUBCASE("annotation") {
    auto text = catalogue_text(*l, systems, true);
    text.replace(text.find(" d="), 3, " x=");
    reject(text);
  }
  SUBCASE("entry past pair count") { reject(good + "ff\n"); }
}

TEST_CASE("dot output") {
  auto l = L("2,3");
  auto empty = to_dot(*l, PairSet{});
  CHECK(count_of(empty, "[label=") == 4);
  CHECK(count_of(empty, "->") == 0);
  CHECK(count_of(empty, "rank=same") == 3);
  CHECK(empty.find("rankdir=BT") != std::string::npos);

  PairSet mixed = PairSet::from_word(0b00111);
  auto text = to_dot(*l, mixed, Naming::symbolic);
  CHECK(count_of(text, "v0 -> ") == 3);
  CHECK(count_of(text, "->") == 3);
  CHECK(text.find("v0 [label=\"1\"]") != std::string::npos);
  CHECK(text.find("label=\"C_{pq}\"") != std::string::npos);
  CHECK(to_dot(*l, mixed, Naming::symbolic) == text);

  auto pqr = L("2,3,5");
  CHECK(count_of(to_dot(*pqr, TransferSystem::full(pqr).members()), "->") == 19);
}

TEST_CASE("comp table csv") {
  CHECK(comp_table_csv({198, 27, 27, 198}) == "d,count\n0,198\n1,27\n2,27\n3,198\n");
}

}  // TEST_SUITE
