#include <algorithm>
#include <set>

#include "abelnorm/word.hpp"
#include "doctest.h"

using namespace abelnorm;

TEST_CASE("Word::parse") {
  const Word w = Word::parse("4501140");
  CHECK(w.size() == 7);
  CHECK(w[0] == 4);
  CHECK(w.to_string() == "4501140");
  CHECK(w.is_mixed());
  CHECK_FALSE(Word::parse("0110").is_mixed());
  CHECK_FALSE(Word::parse("23").has_binary());
  CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("12a"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("-1"), std::invalid_argument);
}

TEST_CASE("ParikhVector helpers") {
  const ParikhVector p = parikh(Word::parse("4501140"));
  CHECK(p.zeros() == 2);
  CHECK(p.ones() == 2);
  CHECK(p.binary() == 4);
  CHECK(p.same_nonbinary(parikh(Word::parse("4540000"))));
  CHECK_FALSE(p.same_nonbinary(parikh(Word::parse("4501150"))));
}

TEST_CASE("distinct_permutations") {
  CHECK(distinct_permutations(Word::parse("12")).size() == 2);
  CHECK(distinct_permutations(Word::parse("11")).size() == 1);
  const auto perms = distinct_permutations(Word::parse("4501140"));
  CHECK(perms.size() == 630);
  CHECK(std::is_sorted(perms.begin(), perms.end()));
  CHECK(std::set<Word>(perms.begin(), perms.end()).size() == perms.size());
  for (const Word& p : perms) CHECK(parikh(p) == parikh(perms.front()));
}
