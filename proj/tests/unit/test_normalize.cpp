#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "idr/normalize.hpp"
#include "idr/rng.hpp"

using namespace idr;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("normalize_title strips punctuation and lowercases") {
  CHECK(normalize_title("Proc. Natl. Acad. Sci. USA") == "proc natl acad sci usa");
  CHECK(normalize_title("proc natl acad sci usa") == "proc natl acad sci usa");
  CHECK(normalize_title("  Cancer   Cell ") == "cancer cell");
  CHECK(normalize_title("Nature: Machine Intelligence") == "nature machine intelligence");
  CHECK(normalize_title("Biology & Medicine (Online)") == "biology medicine online");
  CHECK(normalize_title("Micro-biology [Print]") == "micro biology print");
  CHECK(normalize_title("") == "");
}

TEST_CASE("normalize_title lowercases common accented letters") {
  CHECK(normalize_title("Canadian Journal of ZOOLOGIE") == "canadian journal of zoologie");
  CHECK(normalize_title("Acta Path\xC3\x93logica") == "acta path\xC3\xB3logica");  // O-acute
  CHECK(normalize_title("\xC5\xBDurnal") == "\xC5\xBEurnal");                      // Z-caron
}

TEST_CASE("normalize_title is idempotent on random garble") {
  SplitMix64 rng(11);
  const std::string alphabet = "ABC def.,;:()[]&- \tXYZ\xC3\x89\xC3\xA9";
  for (int trial = 0; trial < 500; ++trial) {
    std::string raw;
    std::size_t len = rng.below(40);
    for (std::size_t i = 0; i < len; ++i) raw += alphabet[rng.below(alphabet.size())];
    std::string once = normalize_title(raw);
    CHECK(normalize_title(once) == once);
    if (!once.empty()) {
      CHECK(once.front() != ' ');
      CHECK(once.back() != ' ');
      CHECK(once.find("  ") == std::string::npos);
    }
  }
}

TEST_CASE("abbreviation map loads, canonicalizes and expands") {
  auto path = write_temp(
      "idr_abbrev_test.csv",
      "abbrev,full_name\n"
      "PNAS,\"Proceedings of the National Academy of Sciences of the United States of America\"\n"
      "cancer cell,Cancer Cell\n"
      "J Virol,Journal of Virology\n");
  auto result = load_abbreviation_map(path);
  CHECK(result.map.size() == 2);  // the self-map row is dropped
  CHECK(result.warnings.empty());
  CHECK(result.map.expand("pnas") ==
        "proceedings of the national academy of sciences of the united states of america");
  CHECK(result.map.expand("cancer cell") == "cancer cell");
  CHECK(result.map.expand("j virol") == "journal of virology");
}

TEST_CASE("duplicate abbreviation keys keep the first mapping") {
  auto path = write_temp("idr_abbrev_dup.csv",
                         "abbrev,full_name\n"
                         "pnas,First Full Name\n"
                         "PNAS,Second Full Name\n");
  auto result = load_abbreviation_map(path);
  CHECK(result.map.size() == 1);
  CHECK(result.map.expand("pnas") == "first full name");
  REQUIRE(result.warnings.size() == 1);
  CHECK(result.warnings.items()[0].message.find("duplicate key") != std::string::npos);
}

TEST_CASE("rows with the wrong column count are skipped with a warning") {
  auto path = write_temp("idr_abbrev_cols.csv",
                         "abbrev,full_name\n"
                         "only-one-column\n"
                         "ok,Fine Journal\n");
  auto result = load_abbreviation_map(path);
  CHECK(result.map.size() == 1);
  CHECK(result.warnings.size() == 1);
}

TEST_CASE("missing abbreviation file is fatal") {
  CHECK_THROWS(load_abbreviation_map("/nonexistent/abbrev.csv"));
}

TEST_CASE("expansion is single-step, not transitive") {
  AbbrevMap map;
  map.insert("a", "b");
  map.insert("b", "c");
  CHECK(map.expand("a") == "b");
  CHECK(map.expand("b") == "c");
}

TEST_CASE("expand never manufactures an empty key") {
  AbbrevMap map;
  map.insert("some abbrev", "some full name");
  SplitMix64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::string key;
    std::size_t len = 1 + rng.below(12);
    for (std::size_t i = 0; i < len; ++i) key += static_cast<char>('a' + rng.below(26));
    CHECK_FALSE(map.expand(key).empty());
    CHECK(map.expand(key) == map.expand(key));  // pure
  }
}

TEST_CASE("alternate delimiter is honored") {
  auto path = write_temp("idr_abbrev_tab.csv", "abbrev\tfull_name\nJV\tJournal of Virology\n");
  auto result = load_abbreviation_map(path, '\t');
  CHECK(result.map.expand("jv") == "journal of virology");
}
