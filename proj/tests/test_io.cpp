#include "doctest.h"
#include "ngpd/corpus.hpp"
#include "ngpd/io.hpp"
#include "ngpd/ngroupoid.hpp"

using namespace ngpd;

namespace {

const FinGroup& c2() { return reference_groups().at(1).group; }

Document roundtrip(const Document& d) { return parse_document(serialize_document(d)); }

}  // namespace

TEST_CASE("document round trips") {
  SUBCASE("Delta^1") {
    Document d(DocumentKind::sset, static_cast<const MultiSSet&>(standard_simplex(1, 2)), {"Delta1", 0, "test"});
    CHECK(roundtrip(d) == d);
    CHECK(serialize_document(roundtrip(d)) == serialize_document(d));
  }
  SUBCASE("nerve of C2 at D = 3") {
    Document d(DocumentKind::sset, static_cast<const MultiSSet&>(nerve(c2().groupoid(), 3)), {"N(C2)", 7, "nerve"});
    const Document back = roundtrip(d);
    CHECK(back == d);
    CHECK(back.sset().cell_count(3) == 8);
    CHECK(back.metadata.seed == 7);
  }
  SUBCASE("groupoid and functor") {
    auto g = std::make_shared<const FinGroupoid>(c2().groupoid());
    auto t = std::make_shared<const FinGroupoid>(FinGroup::trivial().groupoid());
    Document dg(DocumentKind::groupoid, *g);
    CHECK(roundtrip(dg) == dg);
    Document df(DocumentKind::functor, make_functor(g, t, {0}, {0, 0}));
    CHECK(roundtrip(df) == df);
  }
  SUBCASE("n-groupoid and n-functor") {
    Document dn(DocumentKind::ngroupoid, k_a2_carrier(c2(), 2, 2));
    CHECK(roundtrip(dn) == dn);
    Document dm(DocumentKind::nfunctor, k_a2_map(c2(), c2(), {0, 0}, 2, 2));
    CHECK(roundtrip(dm) == dm);
  }
}

TEST_CASE("structure maps are keyed by axis and index") {
  const std::string text =
      serialize_document(Document(DocumentKind::sset, static_cast<const MultiSSet&>(standard_simplex(1, 1))));
  CHECK(text.find("\"d:0:1\"") != std::string::npos);
  CHECK(text.find("\"s:0:0\"") != std::string::npos);
}

TEST_CASE("parse errors carry positions") {
  const std::string text =
      serialize_document(Document(DocumentKind::sset, static_cast<const MultiSSet&>(standard_simplex(1, 2))));
  SUBCASE("truncated file") {
    const std::string cut = text.substr(0, text.size() / 2);
    try {
      parse_document(cut);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() > 1);
      CHECK(std::string(e.what()).find("line ") != std::string::npos);
    }
  }
  SUBCASE("unknown kind") {
    std::string bad = text;
    bad.replace(bad.find("\"sset\""), 6, "\"blob\"");
    CHECK_THROWS_AS(parse_document(bad), ParseError);
  }
  SUBCASE("face pointing outside the level") {
    std::string bad = R"({"kind":"sset","metadata":{"name":"","seed":0,"provenance":""},"payload":{"dim_bounds":[1],)"
                      R"("levels":[{"index":[0],"cells":["a"],"maps":{"s:0:0":{"a":"aa"}}},)"
                      R"({"index":[1],"cells":["aa"],"maps":{"d:0:0":{"aa":"zz"},"d:0:1":{"aa":"a"}}}]}})";
    try {
      parse_document(bad);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(!e.path().empty());
    }
  }
}

TEST_CASE("corpus") {
  static const auto a = generate_corpus(0, SizeClass::small);
  SUBCASE("deterministic") {
    const auto b = generate_corpus(0, SizeClass::small);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(serialize_document(a[i]) == serialize_document(b[i]));
  }
  SUBCASE("seed 0 contains the nerve of C2") {
    bool found = false;
    const MultiSSet want = nerve(c2().groupoid(), 2);
    for (const auto& d : a)
      if (d.kind == DocumentKind::sset && d.metadata.name == "N(C2)") found = d.carrier() == want;
    CHECK(found);
  }
  SUBCASE("sizes are stable") {
    CHECK(a.size() == kSmallCorpusDocuments);
    CHECK(generate_corpus(5, SizeClass::small).size() == kSmallCorpusDocuments);
    CHECK(generate_corpus(0, SizeClass::medium).size() == kMediumCorpusDocuments);
  }
  SUBCASE("seeds change only the random part") {
    const auto c = generate_corpus(1, SizeClass::small);
    CHECK(c.size() > 0);
    CHECK(serialize_document(c[0]) != serialize_document(a[0]));  // seed is in the metadata
    const Corpus ca = build_corpus(0, SizeClass::small), cb = build_corpus(1, SizeClass::small);
    CHECK(ca.groupoids[1].groupoid == cb.groupoids[1].groupoid);
  }
  SUBCASE("every document round trips") {
    for (const auto& d : a) CHECK_MESSAGE(roundtrip(d) == d, d.metadata.name);
  }
}
