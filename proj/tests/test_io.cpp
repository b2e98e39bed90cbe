#include <doctest.h>

#include <fstream>
#include <sstream>

#include "multipers/experiments.hpp"
#include "multipers/io.hpp"
#include "multipers/metrics.hpp"
#include "multipers/random.hpp"

using namespace multipers;

namespace {

rational q(long n, long d = 1) { return rational(n) / d; }

presentation parse(const std::string& text) {
  std::istringstream in(text);
  return read_fpres(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const parse_error& e) {
    return e.line();
  }
  return 0;
}

const std::string data_dir = MULTIPERS_DATA_DIR;

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(to_string(q(2)) == "2/1");
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-3")) == "-3/1");
  CHECK(to_report(extended(q(1, 3))) == "1/3 (0.333333)");
  CHECK(to_string(extended::infinity()) == "inf");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("fpres round trip") {
  presentation free(2);
  free.add_generator(grade{q(0), q(0)});
  CHECK(parse(to_fpres(free)) == free);
  CHECK(parse(to_fpres(presentation(3))) == presentation(3));

  instance_generator gen(3);
  for (int k = 0; k < 30; ++k) {
    auto p = gen.general(1 + k % 3, 4, 5, 5, 3, prime_field(k % 2 ? 5 : 2));
    auto text = to_fpres(p);
    auto back = parse(text);
    CHECK(back == p);
    CHECK(to_fpres(back) == text);
  }
}

TEST_CASE("fpres errors carry line numbers") {
  CHECK(error_line("fpres 2\n") == 1);
  CHECK(error_line("fpres 1\nfield 4\n") == 2);
  CHECK(error_line("# comment\n\nfpres 1\nfield 2\nparams 1\ngenerators 1\ng a 1/0\n") == 7);
  CHECK(error_line("fpres 1\nfield 3\nparams 1\ngenerators 1\ng a 0\nrelations 1\nr 1 ; 3:0\n") == 7);
  CHECK(error_line("fpres 1\nfield 2\nparams 1\ngenerators 1\ng a 0\nrelations 1\nr 1 ; 1:0 1:0\n") == 7);
  CHECK(error_line("fpres 1\nfield 2\nparams 1\ngenerators 0\nrelations 0\nextra\n") == 6);
  CHECK(error_line("fpres 1\nfield 2\nparams 1\ngenerators 2\ng a 0\n") == 5);
}

TEST_CASE("a relation below its generator names the relation") {
  std::string text = "fpres 1\nfield 2\nparams 2\ngenerators 1\ng a 1 1\nrelations 2\nr 2 2 ; 1:0\nr 0 5 ; 1:0\n";
  try {
    parse(text);
    FAIL("accepted a non-homogeneous relation");
  } catch (const homogeneity_error& e) {
    CHECK(e.relation() == 1);
  }
}

TEST_CASE("shipped fixtures") {
  auto n = read_fpres_file(data_dir + "/incompleteness_N.fpres");
  auto o = read_fpres_file(data_dir + "/incompleteness_O.fpres");
  CHECK(n.num_generators() == 2);
  CHECK(n.num_relations() == 4);
  auto pair = make_incompleteness_pair(q(1));
  CHECK(n == pair.n);
  CHECK(o == pair.o);
  std::ifstream in(data_dir + "/incompleteness_witness.txt");
  auto w = read_witness(in, n.num_generators(), o.num_generators(), n.field());
  CHECK(w.f == pair.witness.f);
  CHECK(w.g == pair.witness.g);
  CHECK(verify_interleaving(n, o, w).accepted);
  std::ifstream blocks(data_dir + "/blocks_sample.txt");
  CHECK(read_blocks(blocks).size() == 3);
  CHECK_THROWS_AS(read_fpres_file(data_dir + "/missing.fpres"), error);
}

TEST_CASE("barcode, block, witness and joint round trips") {
  barcode b({{q(0), extended(q(2))}, {q(0), extended(q(2))}, {q(1, 2), extended::infinity()}});
  std::ostringstream bo;
  write_barcode(bo, b);
  CHECK(bo.str() == "bar 0/1 2/1 2\nbar 1/2 inf 1\n");
  std::istringstream bi(bo.str());
  CHECK(read_barcode(bi) == b);
  std::istringstream bad_bar("bar 2 1 1\n");
  CHECK_THROWS_AS(read_barcode(bad_bar), parse_error);

  std::vector<block> blocks{{block_kind::oo, q(1), extended(q(3))}, {block_kind::cc, q(-1, 2), extended(q(1))}};
  std::ostringstream ko;
  write_blocks(ko, blocks);
  std::istringstream ki(ko.str());
  CHECK(read_blocks(ki) == blocks);
  std::istringstream bad_block("blocks 1\nblk oo 3 1\n");
  CHECK_THROWS_AS(read_blocks(bad_block), parse_error);

  auto pair = make_incompleteness_pair(q(1), prime_field(3));
  std::ostringstream wo;
  write_witness(wo, pair.witness);
  std::istringstream wi(wo.str());
  auto w = read_witness(wi, 2, 3, prime_field(3));
  CHECK(w.epsilon == pair.witness.epsilon);
  CHECK(w.f == pair.witness.f);
  CHECK(w.g == pair.witness.g);
  std::istringstream twice("witness 1\nf 0 -> 1:0\nf 0 -> 1:1\n");
  CHECK_THROWS_AS(read_witness(twice, 2, 3, prime_field(2)), parse_error);

  auto j = joint_from_witness(pair.n, pair.o, pair.witness);
  std::ostringstream jo;
  write_joint(jo, j);
  std::istringstream ji(jo.str());
  auto back = read_joint(ji);
  std::ostringstream again;
  write_joint(again, back);
  CHECK(again.str() == jo.str());
}
