#include "wnbuild/fixture.hpp"

#include "wnbuild/errors.hpp"

#include <filesystem>
#include <fstream>

namespace fs = std::filesystem;

namespace wnbuild {

namespace {

// Small bilingual-driven world: a food branch, an animal branch and an
// artifact branch, with one polysemous source word ("glass") left under
// the class-precision gate so the merge stage has a gap to fill.

const char* kWordnet = R"(# synset_id	pos	semfile	lemmas	hypernyms
n-entity	n	tops	entity
n-object	n	tops	object|physical_object	n-entity
n-substance	n	substance	substance|matter	n-entity
n-food	n	food	food|nutrient	n-substance
n-beverage	n	food	beverage|drink|potable	n-food
n-juice	n	food	juice	n-beverage
n-wine	n	food	wine	n-juice
n-milk	n	food	milk	n-beverage
n-animal	n	animal	animal|creature	n-object
n-dog	n	animal	dog	n-animal
n-cat	n	animal	cat	n-animal
n-artifact	n	artifact	artifact	n-object
n-vessel	n	artifact	vessel|container	n-artifact
n-bottle	n	artifact	bottle	n-vessel
n-glass	n	artifact	glass|drinking_glass	n-vessel
n-glass-pane	n	substance	glass|pane	n-substance
n-liquid	n	substance	liquid|fluid	n-substance
)";

const char* kBilingualA = R"(# direction	headword	translations
ts	vino	wine
ts	zumo	juice
ts	bebida	beverage|drink
ts	leche	milk
ts	perro	dog
ts	gato	cat
ts	animal	animal|creature
ts	vaso	vessel
ts	botella	bottle
ts	cristal	glass
ts	mascota	dog|cat
ts	recipiente	vessel|container
ts	liquido	liquid
ts	materia	matter
st	wine	vino
st	food	alimento
)";

const char* kBilingualB = R"(# direction	headword	translations
ts	copa	glass|vessel
ts	bebida	beverage
ts	caldo	juice|milk
ts	sustancia	substance|matter
ts	alimento	food|nutrient
ts	objeto	object|physical_object
st	juice	zumo|jugo
)";

const char* kMonolingual = R"(# headword	sense	genus	definition
vino	1	zumo	zumo fermentado de uva
zumo	1	bebida	bebida de fruta exprimida
bebida	1	liquido	liquido que se bebe
leche	1	bebida	bebida blanca muy nutritiva
cerveza	1		bebida fermentada de cereal
caldo	1	zumo	zumo caliente de carne o verdura
perro	1	animal	animal domestico que ladra
gato	1	animal	animal domestico que maulla
mascota	1	animal	animal de compania
vaca	1		animal que da leche
animal	1	ser	ser vivo que ladra o maulla o muge
vaso	1	recipiente	recipiente pequeno para beber
vaso	2	conducto	conducto por donde circula la sangre
copa	1	vaso	vaso con pie para beber vino
botella	1	recipiente	recipiente estrecho de cuello largo
cristal	1	vaso	vaso transparente y fragil
recipiente	1	objeto	objeto hueco que contiene cosas
liquido	1	sustancia	sustancia que fluye
sustancia	1	materia	materia comun de los cuerpos fisicos
alimento	1	producto	producto que se come como la fruta o la carne
agua	1	liquido	liquido transparente sin sabor
jugo	1	zumo	zumo de fruta o planta
objeto	1	cosa	cosa material que puede verse
conducto	1	canal	canal por donde pasa un fluido
)";

const char* kStoplist = R"(a
al
como
con
de
del
donde
el
en
la
las
lo
los
muy
o
para
por
que
se
sin
un
una
y
)";

const char* kPrecisions = R"(# synthetic class precisions for the bundled demo fixture (not measured)
polysemy	MONO_MONO	0.92	50
polysemy	MONO_POLY	0.55	40
polysemy	MULTI_MONO	0.86	30
polysemy	MULTI_POLY	0.40	60
structural	SHARED_SYNSET	0.88	25
structural	HYPONYMY_PAIR	0.60	20
structural	SIBLING_PAIR	0.50	20
conceptual	LOW_DISTANCE	0.70	30
)";

const char* kConfidences = R"(# configuration	confidence	semfile(optional)
1	0.99
2	0.85
3	0.0
4	0.85
5	0.60
6	0.0
7	0.0
8	0.0
2	0.90	artifact
)";

const char* kGoldLinks = R"(# word	synset
vino	n-wine
zumo	n-juice
bebida	n-beverage
cristal	n-glass
perro	n-dog
gato	n-cat
leche	n-milk
agua	n-water
)";

const char* kGoldTags = R"(# headword	sense	tag
vino	1	food
zumo	1	food
bebida	1	food
leche	1	food
perro	1	animal
gato	1	animal
vaso	1	artifact
agua	1	substance
cerveza	1	food
)";

const char* kConfig = R"json({
  "wordnet": "wordnet.tsv",
  "bilinguals": ["bilingual_a.tsv", "bilingual_b.tsv"],
  "monolingual": "monolingual.tsv",
  "stoplist": "stoplist.txt",
  "precisions": "precisions.tsv",
  "confidences": "confidences.tsv",
  "gold_links": "gold_links.tsv",
  "gold_tags": "gold_tags.tsv",
  "accept_threshold": 0.85,
  "distance_threshold": 1.0,
  "merge_threshold": 0.8,
  "filter_spec": "F1+F2+(F3>1)",
  "heuristics": ["monosemous", "distance", "first_sense"],
  "combiner": "noisy_or",
  "exclude_accepted": true,
  "max_path": 1,
  "max_iters": 5,
  "out_dir": "out"
}
)json";

void write_file(const fs::path& path, const char* content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write fixture file: " + path.string());
  out << content;
}

} // namespace

std::string materialize_fixture(const std::string& dir) {
  fs::path base(dir);
  fs::create_directories(base);
  write_file(base / "wordnet.tsv", kWordnet);
  write_file(base / "bilingual_a.tsv", kBilingualA);
  write_file(base / "bilingual_b.tsv", kBilingualB);
  write_file(base / "monolingual.tsv", kMonolingual);
  write_file(base / "stoplist.txt", kStoplist);
  write_file(base / "precisions.tsv", kPrecisions);
  write_file(base / "confidences.tsv", kConfidences);
  write_file(base / "gold_links.tsv", kGoldLinks);
  write_file(base / "gold_tags.tsv", kGoldTags);
  write_file(base / "config.json", kConfig);
  return (base / "config.json").string();
}

} // namespace wnbuild
