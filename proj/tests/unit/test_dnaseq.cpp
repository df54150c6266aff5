#include "doctest.h"
#include "naive.hpp"
#include "sbesbh/dnaseq.hpp"

using namespace sbesbh;

TEST_SUITE("dnaseq") {

TEST_CASE("complement pairs A-T and C-G") {
  CHECK(complement(Base::A) == Base::T);
  CHECK(complement(Base::C) == Base::G);
  CHECK(complement(complement(Base::G)) == Base::G);
  for (Base b : kAllBases) CHECK(complement(complement(b)) == b);
}

TEST_CASE("reverse complement") {
  CHECK(reverse_complement(DnaString("AAC")).str() == "GTT");
  CHECK(reverse_complement(DnaString("ACGT")).str() == "ACGT");
  CHECK(reverse_complement(DnaString("")).str().empty());
}

TEST_CASE("weights follow the 2-4 rule") {
  CHECK(weight(DnaString("AT")) == 2);
  CHECK(weight(DnaString("CCG")) == 6);
  CHECK(weight(DnaString("ACGT")) == 6);
}

TEST_CASE("degenerate codes") {
  CHECK_FALSE(is_degenerate('A'));
  CHECK_FALSE(is_degenerate('t'));
  CHECK(is_degenerate('N'));
  CHECK(is_degenerate('R'));
  CHECK(is_iupac('y'));
  CHECK_FALSE(is_iupac('X'));
}

TEST_CASE("parsing normalizes case and rejects bad input") {
  CHECK(DnaString("acGt").str() == "ACGT");
  CHECK_THROWS_AS(DnaString("ACNT"), ParseError);
  CHECK_THROWS_AS(DnaString("AC-T"), ParseError);
  CHECK_THROWS_AS(base_from_char('R'), ParseError);
}

TEST_CASE("base sets") {
  const BaseSet s = BaseSet::parse("TC");
  CHECK(s.size() == 2);
  CHECK(s.str() == "CT");
  CHECK(s.complemented().str() == "AG");
  CHECK(BaseSet::all().size() == 4);
  CHECK_THROWS_AS(BaseSet::parse("AA"), ParseError);
  CHECK_THROWS_AS(BaseSet::parse("AN"), ParseError);
}

TEST_CASE("properties over random strings") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const DnaString s(naive::random_dna(rng, rng() % 30));
    const DnaString t(naive::random_dna(rng, rng() % 30));
    CHECK(reverse_complement(reverse_complement(s)) == s);
    CHECK(weight(s + t) == weight(s) + weight(t));
    CHECK(weight(reverse_complement(s)) == weight(s));
    CHECK(reverse_complement(s).str() == naive::revcomp(s.str()));
  }
}

}
