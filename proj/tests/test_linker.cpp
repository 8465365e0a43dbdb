#include "wnbuild/linker.hpp"

#include "test_fixtures.hpp"
#include "wnbuild/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>

using namespace wnbuild;
using test::bilingual_from;
using test::toy_graph;

namespace {

PrecisionTable uniform_precisions(double p) {
  PrecisionTable t;
  for (LinkClass c : kAllClasses) t.set(c, p);
  return t;
}

LinkCandidate cand(const char* word, const char* synset,
                   std::initializer_list<LinkClass> classes) {
  LinkCandidate c;
  c.word = word;
  c.synset = synset;
  c.supporting = classes;
  return c;
}

} // namespace

TEST_CASE("polysemy classification") {
  WordNetGraph g = toy_graph();
  auto bi = bilingual_from({
      {"vino", {"wine"}},          // 1 translation, 1 synset
      {"trago", {"beverage", "drink"}},
      {"mezcla", {"juice", "beverage", "dog"}},
      {"rara", {"ghost"}},         // unindexed translation
      {"mixta", {"wine", "ghost"}},
  });

  CHECK(classify_polysemy("vino", bi, g) == LinkClass::MonoMono);
  CHECK(classify_polysemy("trago", bi, g) == LinkClass::MultiMono);
  CHECK(classify_polysemy("mezcla", bi, g) == LinkClass::MultiMono);
  CHECK(classify_polysemy("rara", bi, g) == LinkClass::MultiPoly); // catch-all
  CHECK(classify_polysemy("mixta", bi, g) == LinkClass::MultiMono);
  CHECK_THROWS_AS(classify_polysemy("missing", bi, g), input_error);

  // a polysemous single translation
  WordNetGraph g2 = test::graph_from(
      "r\tn\ttops\troot\t\n"
      "a1\tn\tfood\tglass\tr\n"
      "a2\tn\tartifact\tglass\tr\n");
  auto bi2 = bilingual_from({{"cristal", {"glass"}}});
  CHECK(classify_polysemy("cristal", bi2, g2) == LinkClass::MonoPoly);

  // three translations with synset counts {1,1,2} are MULTI_POLY
  auto bi3 = bilingual_from({{"mixto", {"glass", "root", "x"}}});
  WordNetGraph g3 = test::graph_from(
      "r\tn\ttops\troot\t\n"
      "a1\tn\tfood\tglass|x\tr\n"
      "a2\tn\tartifact\tglass\tr\n");
  CHECK(classify_polysemy("mixto", bi3, g3) == LinkClass::MultiPoly);
}

TEST_CASE("polysemy classes partition every word with translations") {
  WordNetGraph g = toy_graph();
  auto bi = bilingual_from({
      {"w1", {"wine"}},
      {"w2", {"wine", "juice"}},
      {"w3", {"nothing"}},
      {"w4", {"beverage", "drink", "food"}},
  });
  for (const auto& [word, trs] : bi.entries()) {
    LinkClass c = classify_polysemy(word, bi, g);
    CHECK(dimension_of(c) == ClassDim::Polysemy);
  }
}

TEST_CASE("structural classification") {
  WordNetGraph g = toy_graph();
  auto bi = bilingual_from({
      {"trago", {"beverage", "drink"}}, // shared synset
      {"zumo", {"wine", "juice"}},      // direct hyponymy
      {"bestia", {"food", "animal"}},   // siblings under entity
      {"uno", {"wine"}},                // <2 indexed translations
      {"lejos", {"dog", "wine"}},       // unrelated
  });
  CHECK(classify_structural("trago", bi, g) == std::set<LinkClass>{LinkClass::SharedSynset});
  CHECK(classify_structural("zumo", bi, g) == std::set<LinkClass>{LinkClass::HyponymyPair});
  CHECK(classify_structural("bestia", bi, g) == std::set<LinkClass>{LinkClass::SiblingPair});
  CHECK(classify_structural("uno", bi, g).empty());
  CHECK(classify_structural("lejos", bi, g).empty());
}

TEST_CASE("conceptual classification uses the strict threshold") {
  WordNetGraph g = toy_graph();
  auto bi = bilingual_from({{"zumo", {"wine", "juice"}}});
  // distance(wine, juice) = 1/5 + 1/4 = 0.45
  CHECK(classify_conceptual("zumo", bi, g, 1.0) == LinkClass::LowDistance);
  CHECK(classify_conceptual("zumo", bi, g, 0.45) == std::nullopt); // strict <
  CHECK(classify_conceptual("zumo", bi, g, 0.0) == std::nullopt);

  // disconnected components: infinite distance, no class
  WordNetGraph split = test::graph_from(
      "r1\tn\tfood\tapple\t\n"
      "r2\tn\tanimal\tbear\t\n");
  auto bi2 = bilingual_from({{"par", {"apple", "bear"}}});
  CHECK(classify_conceptual("par", bi2, split, 100.0) == std::nullopt);
}

TEST_CASE("candidate generation per class") {
  WordNetGraph g = toy_graph();
  auto bi = bilingual_from({
      {"vino", {"wine"}},
      {"trago", {"beverage", "drink"}},
      {"zumo", {"wine", "juice"}},
  });

  auto mono = generate_candidates("vino", LinkClass::MonoMono, bi, g);
  REQUIRE(mono.size() == 1);
  CHECK(mono[0].synset == "s-wine");
  CHECK(mono[0].supporting == std::set<LinkClass>{LinkClass::MonoMono});

  // shared synset: only the common one out of the translations' synsets
  auto shared = generate_candidates("trago", LinkClass::SharedSynset, bi, g);
  REQUIRE(shared.size() == 1);
  CHECK(shared[0].synset == "s-beverage");

  auto low = generate_candidates("zumo", LinkClass::LowDistance, bi, g);
  REQUIRE(low.size() == 2); // the argmin pair
  CHECK(low[0].synset == "s-juice");
  CHECK(low[1].synset == "s-wine");

  auto hypo = generate_candidates("zumo", LinkClass::HyponymyPair, bi, g);
  REQUIRE(hypo.size() == 2);
}

TEST_CASE("intersection keeps only shared word/synset pairs") {
  auto a1 = cand("w", "s1", {LinkClass::MonoPoly});
  auto a2 = cand("w", "s2", {LinkClass::MonoPoly});
  auto b1 = cand("w", "s2", {LinkClass::LowDistance});
  auto b2 = cand("v", "s9", {LinkClass::LowDistance});

  auto inter = intersect_classes({a1, a2}, {b1, b2});
  REQUIRE(inter.size() == 1);
  CHECK(inter[0].synset == "s2");
  CHECK(inter[0].supporting ==
        std::set<LinkClass>{LinkClass::MonoPoly, LinkClass::LowDistance});

  CHECK(intersect_classes({a1}, {b2}).empty());

  // a subset of b comes back with merged support
  auto sub = intersect_classes({a2}, {b1, b2});
  REQUIRE(sub.size() == 1);

  // |result| <= min(|a|, |b|) over random sets
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<LinkCandidate> xs, ys;
    for (int i = 0; i < 8; ++i) {
      std::string synset = "s" + std::to_string(rng() % 6);
      if (rng() % 2) xs.push_back(cand("w", synset.c_str(), {LinkClass::MonoPoly}));
      if (rng() % 2) ys.push_back(cand("w", synset.c_str(), {LinkClass::SiblingPair}));
    }
    auto r = intersect_classes(xs, ys);
    CHECK(r.size() <= std::min(xs.size(), ys.size()));
    for (const LinkCandidate& c : r) {
      auto in = [&](const std::vector<LinkCandidate>& v) {
        return std::any_of(v.begin(), v.end(), [&](const LinkCandidate& x) {
          return x.word == c.word && x.synset == c.synset;
        });
      };
      CHECK(in(xs));
      CHECK(in(ys));
    }
  }
}

TEST_CASE("noisy-OR scoring") {
  PrecisionTable t;
  t.set(LinkClass::MonoMono, 0.85);
  t.set(LinkClass::SharedSynset, 0.5);
  t.set(LinkClass::LowDistance, 0.5);

  CHECK(score_candidate(cand("w", "s", {LinkClass::MonoMono}), t, Combiner::NoisyOr) ==
        doctest::Approx(0.85));
  CHECK(score_candidate(cand("w", "s", {LinkClass::SharedSynset, LinkClass::LowDistance}), t,
                        Combiner::NoisyOr) == doctest::Approx(0.75));
  CHECK_THROWS_AS(score_candidate(cand("w", "s", {LinkClass::MultiPoly}), t, Combiner::NoisyOr),
                  config_error);
}

TEST_CASE("vote-count scoring normalizes by the registry size") {
  PrecisionTable t = uniform_precisions(0.5);
  CHECK(score_candidate(cand("w", "s", {LinkClass::MonoMono, LinkClass::SharedSynset}), t,
                        Combiner::VoteCount) == doctest::Approx(2.0 / 8.0));
}

TEST_CASE("noisy-OR is monotone in class support and bounded") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    PrecisionTable t;
    for (LinkClass c : kAllClasses)
      t.set(c, static_cast<double>(rng() % 1000) / 1000.0);
    std::set<LinkClass> support;
    double prev = 0.0;
    for (LinkClass c : kAllClasses) {
      if (rng() % 2) continue;
      support.insert(c);
      LinkCandidate x = cand("w", "s", {});
      x.supporting = support;
      double conf = score_candidate(x, t, Combiner::NoisyOr);
      CHECK(conf >= prev - 1e-12); // adding a class never decreases confidence
      CHECK(conf >= 0.0);
      CHECK(conf <= 1.0);
      prev = conf;
    }
  }
}

TEST_CASE("acceptance gate: 0.84 alone fails, 0.5 co-support pushes past 0.85") {
  PrecisionTable t;
  t.set(LinkClass::MonoPoly, 0.84);
  t.set(LinkClass::LowDistance, 0.5);

  auto alone = accept_links({cand("w", "s1", {LinkClass::MonoPoly})}, t);
  CHECK(alone.empty());

  auto both = accept_links({cand("w", "s1", {LinkClass::MonoPoly}),
                            cand("w", "s1", {LinkClass::LowDistance})},
                           t);
  REQUIRE(both.size() == 1);
  CHECK(both[0].confidence == doctest::Approx(0.92)); // 1 - 0.16*0.5
  CHECK(both[0].accepted);
  CHECK(both[0].supporting ==
        std::set<LinkClass>{LinkClass::MonoPoly, LinkClass::LowDistance});
}

TEST_CASE("a precision at the threshold is accepted") {
  PrecisionTable t;
  t.set(LinkClass::MonoMono, 0.86);
  auto r = accept_links({cand("w", "s", {LinkClass::MonoMono})}, t, 0.85);
  REQUIRE(r.size() == 1);
  CHECK(r[0].confidence == doctest::Approx(0.86));
}

TEST_CASE("empty candidate set accepts nothing") {
  CHECK(accept_links({}, uniform_precisions(0.9)).empty());
}

TEST_CASE("acceptance output is invariant under candidate permutation") {
  PrecisionTable t = uniform_precisions(0.6);
  std::vector<LinkCandidate> cands = {
      cand("a", "s1", {LinkClass::MonoMono}),
      cand("a", "s1", {LinkClass::SharedSynset}),
      cand("b", "s2", {LinkClass::LowDistance, LinkClass::SiblingPair}),
      cand("c", "s3", {LinkClass::MultiPoly}),
  };
  auto reference = accept_links(cands, t);
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(cands.begin(), cands.end(), rng);
    auto shuffled = accept_links(cands, t);
    REQUIRE(shuffled.size() == reference.size());
    for (std::size_t k = 0; k < reference.size(); ++k) {
      CHECK(shuffled[k].word == reference[k].word);
      CHECK(shuffled[k].synset == reference[k].synset);
      CHECK(shuffled[k].confidence == doctest::Approx(reference[k].confidence));
    }
  }
}

TEST_CASE("all precisions below threshold with disjoint classes accept nothing") {
  PrecisionTable t = uniform_precisions(0.5);
  std::vector<LinkCandidate> cands = {
      cand("a", "s1", {LinkClass::MonoMono}),
      cand("b", "s2", {LinkClass::MonoPoly}),
      cand("c", "s3", {LinkClass::SiblingPair}),
  };
  CHECK(accept_links(cands, t, 0.85).empty());
}

TEST_CASE("precision table parsing validates dimension and range") {
  std::string path = "/tmp/wnbuild_test_precisions.tsv";
  {
    std::ofstream out(path);
    out << "polysemy\tMONO_MONO\t0.9\t10\n";
    out << "structural\tSHARED_SYNSET\t0.8\t5\n";
  }
  PrecisionTable t = PrecisionTable::load_file(path);
  CHECK(t.precision(LinkClass::MonoMono) == doctest::Approx(0.9));

  {
    std::ofstream out(path);
    out << "structural\tMONO_MONO\t0.9\t10\n"; // wrong dimension
  }
  CHECK_THROWS_AS(PrecisionTable::load_file(path), input_error);
  {
    std::ofstream out(path);
    out << "polysemy\tMONO_MONO\t1.5\t10\n"; // out of range
  }
  CHECK_THROWS_AS(PrecisionTable::load_file(path), input_error);
}
