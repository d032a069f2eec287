#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "ybe/catalog.hpp"
#include "ybe/census.hpp"
#include "ybe/fixtures.hpp"

using namespace ybe;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("ybx-test-" + std::to_string(std::random_device{}()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("shift on three points") {
    const CatalogRecord r = solution_record(shift_example(3));
    const std::string text = serialize(r);
    CHECK(text == "YBX/1 solution\nn=3\n1 2 0\n1 2 0\n1 2 0\n");
    CHECK(parse(text) == r);
    CHECK(solution_from(parse(text)) == shift_example(3));
  }

  TEST_CASE("size-4 fixture file") {
    const CatalogRecord r = parse(slurp(fs::path(YBE_FIXTURE_DIR) / "size4_d8.ybx"));
    const Solution s = solution_from(r);
    CHECK(s == size4_d8_example());
    CHECK(validate(s).ok());
    const CatalogRecord full = record_of_solution(s);
    // frozen; a change here breaks every existing store
    CHECK(full.get("canonical_hash") == "fnv1a64:eb921bbe1caecdca");
    CHECK(record_of_solution(s).get("canonical_hash") == full.get("canonical_hash"));
    CHECK(full.get("group") == "D8");
  }

  TEST_CASE("fnv1a64 reference values") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
  }

  TEST_CASE("malformed input") {
    try {
      parse("YBX/1 solution\nn=3\n1 2 0\n1 2\n1 2 0\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(std::string(e.what()).find("row 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("YBX/2 solution\nn=1\n0\n"), VersionError);
    CHECK_THROWS_AS(parse("YBX/1 widget\nn=1\n0\n"), ParseError);
    CHECK_THROWS_AS(parse("YBX/1 solution\nn=2\n0 x\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
  }

  TEST_CASE("unknown keys survive a round trip") {
    CatalogRecord r = record_of_solution(size8_example());
    r.set("note", "from the fixture set");
    const CatalogRecord back = parse(serialize(r));
    CHECK(back == r);
    CHECK(back.get("note") == "from the fixture set");
    CHECK(serialize(back) == serialize(r));
  }

  TEST_CASE("round trip on braces, data and census records") {
    for (int m : {4, 6, 8}) {
      for (const Brace& b : enumerate_braces(m)) {
        const CatalogRecord r = record_of_brace(b);
        CHECK(parse(serialize(r)) == r);
        CHECK(brace_from(r) == b);
      }
    }
    const Brace b = brace_from_spec("sd:triv3,triv2,inv");
    for (const auto& d : indecomposable_data(b)) {
      const ConstructionDatum datum{{d.a}, {{d.k}}};
      const CatalogRecord r = datum_record(b, datum);
      CHECK(parse(serialize(r)) == r);
      const auto [b2, d2] = datum_from(r);
      CHECK(b2 == b);
      CHECK(build_solution(b2, d2).solution == build_solution(b, datum).solution);
    }
    CensusOptions o;
    o.with_classes = false;
    for (int n = 1; n <= 5; ++n)
      for (const Solution& s : solution_forms(n, o)) {
        const CatalogRecord r = record_of_solution(s);
        CHECK(parse(serialize(r)) == r);
      }
  }

  TEST_CASE("canonical hash is equal exactly for isomorphic solutions") {
    CensusOptions o;
    o.with_classes = false;
    std::vector<Solution> corpus;
    for (int n = 1; n <= 5; ++n)
      for (auto& s : solution_forms(n, o)) corpus.push_back(std::move(s));
    std::mt19937 rng(23);
    std::vector<std::string> hashes;
    for (const Solution& s : corpus) {
      hashes.push_back(record_of_solution(s).get("canonical_hash"));
      std::vector<Point> img(static_cast<std::size_t>(s.size()));
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      CHECK(record_of_solution(relabel(s, Permutation(img))).get("canonical_hash") == hashes.back());
    }
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (std::size_t j = i + 1; j < corpus.size(); ++j) {
        const bool iso = corpus[i].size() == corpus[j].size() && isomorphic(corpus[i], corpus[j]);
        CHECK((hashes[i] == hashes[j]) == iso);
      }
  }

  TEST_CASE("store") {
    TempDir dir;
    CHECK(store_query(dir.path).empty());

    const CatalogRecord r = record_of_solution(size4_d8_example());
    const fs::path p = store_put(dir.path, r);
    CHECK(p.filename() == "eb921bbe1caecdca.ybx");
    CHECK(store_put(dir.path, r) == p);
    const auto hit = store_query(dir.path, {{"hash", "eb921bbe1caecdca"}});
    REQUIRE(hit.size() == 1);
    CHECK(hit[0] == r);

    CatalogRecord forged = r;
    forged.sections[0][0] = {1, 0, 2, 3};
    CHECK_THROWS_AS(store_put(dir.path, forged), IntegrityError);
    for (const auto& entry : fs::directory_iterator(dir.path)) CHECK(entry.path().extension() == ".ybx");
  }

  TEST_CASE("census n = 4 in a store") {
    TempDir dir;
    CensusOptions o;
    o.with_classes = false;
    for (const Solution& s : solution_forms(4, o)) store_put(dir.path, record_of_solution(s));
    CHECK(store_query(dir.path).size() == 23);
    CHECK(store_query(dir.path, {{"indecomposable", "true"}, {"group", "D8"}}).size() == 2);
    CHECK(store_query(dir.path, {{"kind", "brace"}}).empty());
  }
}
