#include "wnbuild/semtag.hpp"

#include "test_fixtures.hpp"
#include "wnbuild/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

using namespace wnbuild;
using test::bilingual_from;
using test::make_def;
using test::toy_graph;

namespace {

TaggedDefinition tagged(const Definition& d, const std::string& tag) {
  TaggedDefinition t;
  t.def = d;
  t.tag = tag;
  t.method = TagMethod::DistanceSeed;
  return t;
}

// Count-based recomputation of the association ratio, independent of the
// trainer's bookkeeping.
double oracle_ar(const std::vector<TaggedDefinition>& corpus, const Stoplist& stop,
                 const std::string& word, const std::string& tag) {
  long total = 0, in_class = 0, word_total = 0, word_in_class = 0;
  for (const TaggedDefinition& t : corpus) {
    for (const std::string& tok : t.def.tokens) {
      if (stop.contains(tok)) continue;
      ++total;
      if (t.tag == tag) ++in_class;
      if (tok == word) {
        ++word_total;
        if (t.tag == tag) ++word_in_class;
      }
    }
  }
  if (word_in_class == 0 || in_class == 0) return 0.0;
  double p_w_sc = static_cast<double>(word_in_class) / static_cast<double>(in_class);
  double p_w = static_cast<double>(word_total) / static_cast<double>(total);
  return p_w_sc * std::log2(p_w_sc / p_w);
}

} // namespace

TEST_CASE("definition parsing enforces the TSV contract") {
  std::istringstream in(
      "vino\t1\tzumo\tzumo fermentado de uva\n"
      "zumo\t1\t\tbebida de fruta\n");
  auto defs = parse_definitions(in, "dict");
  REQUIRE(defs.size() == 2);
  CHECK(defs[0].genus == "zumo");
  CHECK(defs[1].genus.empty());
  CHECK(defs[0].tokens == std::vector<std::string>{"zumo", "fermentado", "de", "uva"});

  std::istringstream dup("a\t1\tx\ttext here\na\t1\ty\tother text\n");
  CHECK_THROWS_AS(parse_definitions(dup, "dup"), input_error);
  std::istringstream bad_sense("a\tzero\tx\ttext\n");
  CHECK_THROWS_AS(parse_definitions(bad_sense, "bad"), input_error);
}

TEST_CASE("genus extraction: supplied column wins, else first content token") {
  Stoplist stop = Stoplist::from_words({"de", "la"});
  CHECK(extract_genus(make_def("vino", 1, "bebida", "zumo de uva"), stop) == "bebida");
  CHECK(extract_genus(make_def("vino", 1, "", "bebida alcoholica de uva"), stop) == "bebida");
  CHECK(extract_genus(make_def("x", 1, "", "de la"), stop) == std::nullopt);
}

TEST_CASE("distance seeding tags via the closest concept pair") {
  WordNetGraph g = toy_graph();
  auto bi = bilingual_from({
      {"vino", {"wine"}},
      {"zumo", {"juice"}},
      {"perro", {"dog"}},
      {"animal", {"animal"}},
  });
  Stoplist stop = Stoplist::from_words({"de"});
  std::vector<Definition> defs = {
      make_def("vino", 1, "zumo", "zumo fermentado de uva"),
      make_def("perro", 1, "animal", "animal domestico"),
      make_def("cerveza", 1, "zumo", "zumo raro"),   // headword untranslated
      make_def("zumo", 1, "cosa", "cosa liquida"),   // genus untranslated
  };
  auto tags = tag_seed_by_distance(defs, bi, g, stop);
  REQUIRE(tags.size() == 2);
  CHECK(tags[0].def.headword == "vino");
  CHECK(tags[0].tag == "food"); // semfile of s-wine, the headword-side synset
  CHECK(tags[0].method == TagMethod::DistanceSeed);
  CHECK(tags[0].score == doctest::Approx((Rat(1, 5) + Rat(1, 4)).to_double()));
  CHECK(tags[1].def.headword == "perro");
  CHECK(tags[1].tag == "animal");
}

TEST_CASE("distance seeding skips disconnected translation pairs") {
  WordNetGraph split = test::graph_from(
      "r1\tn\tfood\tapple\t\n"
      "r2\tn\tanimal\tbear\t\n");
  auto bi = bilingual_from({{"a", {"apple"}}, {"b", {"bear"}}});
  Stoplist stop;
  std::vector<Definition> defs = {make_def("a", 1, "b", "b algo")};
  CHECK(tag_seed_by_distance(defs, bi, split, stop).empty());
}

TEST_CASE("association ratios match the hand-counted oracle") {
  // 2 FOOD defs of 4 content tokens total with "bebida" twice, 1 ANIMAL
  // def of 2 tokens without it: AR(bebida,FOOD) = 0.5*log2(1.5)
  Stoplist stop = Stoplist::from_words({"de"});
  std::vector<TaggedDefinition> corpus = {
      tagged(make_def("a", 1, "", "bebida dulce"), "food"),
      tagged(make_def("b", 1, "", "bebida roja"), "food"),
      tagged(make_def("c", 1, "", "animal grande"), "animal"),
  };
  SalientLexicon lex = train_salient(corpus, stop);
  CHECK(lex.total_tokens == 6);
  CHECK(lex.class_tokens.at("food") == 4);
  double expect = 0.5 * std::log2(1.5);
  CHECK(lex.score("bebida", "food") == doctest::Approx(expect).epsilon(1e-12));
  CHECK(lex.score("bebida", "food") == doctest::Approx(0.2924812503605781).epsilon(1e-9));
  // absent from the class: no entry at all
  CHECK(lex.score("bebida", "animal") == 0.0);
  CHECK(lex.scores.count({"bebida", "animal"}) == 0);

  for (const auto& [key, ar] : lex.scores) {
    CHECK(ar > 0.0);
    CHECK(ar == doctest::Approx(oracle_ar(corpus, stop, key.first, key.second)).epsilon(1e-12));
  }
}

TEST_CASE("uniformly distributed words score zero and are discarded") {
  Stoplist stop;
  // "agua" has Pr(w|SC) == Pr(w) in every class
  std::vector<TaggedDefinition> corpus = {
      tagged(make_def("a", 1, "", "agua dulce"), "food"),
      tagged(make_def("b", 1, "", "agua fria"), "animal"),
  };
  SalientLexicon lex = train_salient(corpus, stop);
  CHECK(lex.scores.count({"agua", "food"}) == 0);
  CHECK(lex.scores.count({"agua", "animal"}) == 0);
  CHECK(lex.scores.count({"dulce", "food"}) == 1);
}

TEST_CASE("empty corpus trains an empty lexicon") {
  Stoplist stop;
  SalientLexicon lex = train_salient({}, stop);
  CHECK(lex.scores.empty());
  CHECK(lex.total_tokens == 0);
}

TEST_CASE("training is a pure function of its input") {
  Stoplist stop = Stoplist::from_words({"de"});
  std::vector<TaggedDefinition> corpus = {
      tagged(make_def("a", 1, "", "zumo de uva"), "food"),
      tagged(make_def("b", 1, "", "perro fiel"), "animal"),
  };
  SalientLexicon l1 = train_salient(corpus, stop);
  SalientLexicon l2 = train_salient(corpus, stop);
  CHECK(l1.scores == l2.scores);
  CHECK(l1.class_tokens == l2.class_tokens);
}

TEST_CASE("labeling picks the argmax class, brute-force checked") {
  Stoplist stop = Stoplist::from_words({"de"});
  std::vector<TaggedDefinition> corpus = {
      tagged(make_def("a", 1, "", "bebida dulce fermentada"), "food"),
      tagged(make_def("b", 1, "", "bebida fresca"), "food"),
      tagged(make_def("c", 1, "", "animal fiero salvaje"), "animal"),
      tagged(make_def("d", 1, "", "animal manso"), "animal"),
  };
  SalientLexicon lex = train_salient(corpus, stop);

  std::vector<Definition> defs = {
      make_def("x", 1, "", "bebida fresca de uva"),
      make_def("y", 1, "", "animal salvaje"),
      make_def("z", 1, "", "cosa desconocida"), // zero evidence
  };
  auto labeled = label_definitions(defs, lex, stop);
  REQUIRE(labeled.size() == 2); // z stays untagged
  CHECK(labeled[0].def.headword == "x");
  CHECK(labeled[0].tag == "food");
  CHECK(labeled[0].method == TagMethod::Salient);
  CHECK_FALSE(labeled[0].ambiguous);
  CHECK(labeled[1].def.headword == "y");
  CHECK(labeled[1].tag == "animal");

  // brute-force the winning sums
  for (const TaggedDefinition& t : labeled) {
    std::map<std::string, double> w;
    for (const std::string& tok : t.def.tokens) {
      if (stop.contains(tok)) continue;
      for (const std::string& tag : lex.tags()) w[tag] += lex.score(tok, tag);
    }
    std::string best;
    double best_w = 0;
    for (const auto& [tag, sum] : w)
      if (sum > best_w) {
        best_w = sum;
        best = tag;
      }
    CHECK(t.tag == best);
    CHECK(t.score == doctest::Approx(best_w));
  }
}

TEST_CASE("labeling is permutation invariant") {
  Stoplist stop;
  std::vector<TaggedDefinition> corpus = {
      tagged(make_def("a", 1, "", "rojo vivo"), "food"),
      tagged(make_def("b", 1, "", "gris oscuro"), "animal"),
  };
  SalientLexicon lex = train_salient(corpus, stop);
  std::vector<Definition> defs = {
      make_def("x", 1, "", "rojo intenso"),
      make_def("y", 1, "", "gris claro"),
      make_def("w", 2, "", "rojo gris"), // needs the tie path
  };
  auto reference = label_definitions(defs, lex, stop);
  std::mt19937 rng(3);
  for (int i = 0; i < 6; ++i) {
    std::shuffle(defs.begin(), defs.end(), rng);
    auto shuffled = label_definitions(defs, lex, stop);
    REQUIRE(shuffled.size() == reference.size());
    std::map<std::pair<std::string, int>, std::string> ref_tags, got_tags;
    for (const auto& t : reference) ref_tags[{t.def.headword, t.def.sense_no}] = t.tag;
    for (const auto& t : shuffled) got_tags[{t.def.headword, t.def.sense_no}] = t.tag;
    CHECK(got_tags == ref_tags);
  }
}

TEST_CASE("a constructed mirror tie sets ambiguous and resolves deterministically") {
  Stoplist stop;
  // perfectly mirrored classes: same token counts, same class sizes
  std::vector<TaggedDefinition> corpus = {
      tagged(make_def("a", 1, "", "rojo claro"), "tagx"),
      tagged(make_def("b", 1, "", "gris claro"), "tagy"),
  };
  SalientLexicon lex = train_salient(corpus, stop);
  REQUIRE(lex.score("rojo", "tagx") > 0.0);
  bool exact_mirror = lex.score("rojo", "tagx") == lex.score("gris", "tagy");
  REQUIRE(exact_mirror);

  auto labeled = label_definitions({make_def("w", 1, "", "rojo gris")}, lex, stop);
  REQUIRE(labeled.size() == 1);
  CHECK(labeled[0].ambiguous);
  // equal class token mass: lexicographically first tag wins
  CHECK(labeled[0].tag == "tagx");
}

TEST_CASE("adding salient entries never untags a definition") {
  Stoplist stop;
  std::vector<TaggedDefinition> corpus = {
      tagged(make_def("a", 1, "", "zumo dulce uva"), "food"),
      tagged(make_def("b", 1, "", "perro fiel manso"), "animal"),
      tagged(make_def("c", 1, "", "vaso hueco"), "artifact"),
  };
  SalientLexicon full = train_salient(corpus, stop);
  std::vector<Definition> defs = {
      make_def("x", 1, "", "zumo claro"),
      make_def("y", 1, "", "perro raro"),
      make_def("z", 1, "", "vaso grande"),
      make_def("q", 1, "", "nada conocida"),
  };
  auto tagged_full = label_definitions(defs, full, stop);
  std::set<std::pair<std::string, int>> full_keys;
  for (const auto& t : tagged_full) full_keys.insert({t.def.headword, t.def.sense_no});

  // every sub-lexicon tags a subset of what the full lexicon tags
  std::mt19937 rng(11);
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& [k, v] : full.scores) keys.push_back(k);
  for (int trial = 0; trial < 20; ++trial) {
    SalientLexicon sub = full;
    for (const auto& k : keys)
      if (rng() % 2) sub.scores.erase(k);
    auto tagged_sub = label_definitions(defs, sub, stop);
    for (const auto& t : tagged_sub)
      CHECK(full_keys.count({t.def.headword, t.def.sense_no}) == 1);
  }
}

TEST_CASE("probability mass sums to one per class and globally") {
  Stoplist stop = Stoplist::from_words({"de", "la"});
  std::vector<TaggedDefinition> corpus = {
      tagged(make_def("a", 1, "", "zumo de uva negra"), "food"),
      tagged(make_def("b", 1, "", "bebida de la manzana"), "food"),
      tagged(make_def("c", 1, "", "perro fiel"), "animal"),
  };
  SalientLexicon lex = train_salient(corpus, stop);
  // per class over content tokens
  for (const auto& [tag, class_total] : lex.class_tokens) {
    double sum = 0;
    for (const auto& [key, count] : lex.class_word_counts)
      if (key.second == tag) sum += static_cast<double>(count) / class_total;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
  double global = 0;
  for (const auto& [word, count] : lex.word_counts)
    global += static_cast<double>(count) / lex.total_tokens;
  CHECK(global == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("relevance ranking orders by salience times local frequency") {
  Stoplist stop;
  // "zumo" is frequent and distinctive for food; "uva" distinctive but rare
  std::vector<TaggedDefinition> corpus = {
      tagged(make_def("a", 1, "", "zumo zumo uva"), "food"),
      tagged(make_def("b", 1, "", "perro fiel"), "animal"),
  };
  SalientLexicon lex = train_salient(corpus, stop);
  auto ranked = relevance_ranking(lex, "food");
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].word == "zumo");
  CHECK(ranked[1].word == "uva");
  CHECK(ranked[0].relevance == doctest::Approx(2.0 * lex.score("zumo", "food")));
  CHECK(relevance_ranking(lex, "food", 1).size() == 1);
  CHECK(relevance_ranking(lex, "nada").empty());
}

TEST_CASE("frequency tables load as word->count maps") {
  std::string path = "/tmp/wnbuild_test_freq.tsv";
  {
    std::ofstream out(path);
    out << "# word\tcount\nzumo\t12\nBebida\t3\n";
  }
  auto freq = load_frequency_table(path);
  CHECK(freq == (std::map<std::string, long>{{"zumo", 12}, {"bebida", 3}}));
  {
    std::ofstream out(path);
    out << "zumo\tmany\n";
  }
  CHECK_THROWS_AS(load_frequency_table(path), input_error);
}

TEST_CASE("core concept filter: genus test or both corpus tests") {
  std::map<std::string, long> genus{{"w1", 5}, {"w2", 4}, {"w3", 4}, {"w4", 0}};
  std::map<std::string, long> defc{{"w1", 0}, {"w2", 50}, {"w3", 49}, {"w4", 50}};
  std::map<std::string, long> extc{{"w1", 0}, {"w2", 100}, {"w3", 100}, {"w4", 99}};
  std::set<std::string> words{"w1", "w2", "w3", "w4", "w5"};

  auto kept = select_core_concepts(words, genus, defc, extc);
  CHECK(kept == std::set<std::string>{"w1", "w2"});

  // thresholds are configurable
  CoreThresholds loose{1, 10, 10};
  auto kept2 = select_core_concepts(words, genus, defc, extc, loose);
  CHECK(kept2 == std::set<std::string>{"w1", "w2", "w3", "w4"});
}
