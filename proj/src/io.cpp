#include "multipers/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace multipers {

namespace {

class line_reader {
 public:
  explicit line_reader(std::istream& in) : in_(in) {}

  /// Next non-empty line split into tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream words(line);
      tokens.clear();
      for (std::string w; words >> w;) tokens.push_back(w);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::vector<std::string> expect(const std::string& what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) fail("unexpected end of input, expected " + what);
    return tokens;
  }

  [[noreturn]] void fail(const std::string& what) const { throw parse_error(line_no_, what); }

  std::size_t line() const { return line_no_; }

  std::size_t count(const std::string& token) const {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(token, &pos);
      if (pos != token.size() || token[0] == '-') throw std::invalid_argument(token);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      fail("expected a nonnegative integer, got '" + token + "'");
    }
  }

  rational number(const std::string& token) const {
    try {
      return parse_rational(token);
    } catch (const error& e) {
      fail(e.what());
    }
  }

  extended number_or_inf(const std::string& token) const {
    try {
      return parse_extended(token);
    } catch (const error& e) {
      fail(e.what());
    }
  }

  /// "keyword value" line.
  std::string keyed(const std::string& keyword) {
    auto t = expect(keyword);
    if (t.size() != 2 || t[0] != keyword) fail("expected '" + keyword + " <value>'");
    return t[1];
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

sparse_column parse_column(line_reader& r, const std::vector<std::string>& tokens, std::size_t from,
                           const prime_field& f) {
  std::vector<entry> entries;
  for (std::size_t k = from; k < tokens.size(); ++k) {
    auto colon = tokens[k].find(':');
    if (colon == std::string::npos) r.fail("expected coeff:index, got '" + tokens[k] + "'");
    std::size_t c = r.count(tokens[k].substr(0, colon));
    std::size_t idx = r.count(tokens[k].substr(colon + 1));
    if (c == 0 || c >= f.characteristic()) r.fail("coefficient " + std::to_string(c) + " outside [1, p)");
    entries.push_back({idx, static_cast<coeff>(c)});
  }
  std::sort(entries.begin(), entries.end(), [](const entry& a, const entry& b) { return a.index < b.index; });
  for (std::size_t k = 1; k < entries.size(); ++k)
    if (entries[k - 1].index == entries[k].index) r.fail("repeated generator index in a column");
  return normalized(f, std::move(entries));
}

void write_column(std::ostream& out, const sparse_column& c) {
  for (const auto& e : c) out << ' ' << e.value << ':' << e.index;
}

struct fpres_block {
  std::size_t n;
  prime_field field;
  std::vector<generator> gens;
  std::vector<relation> rels;
};

// Reads one fpres block; column indices are validated later by the caller.
fpres_block read_block(line_reader& r) {
  auto head = r.expect("fpres header");
  if (head.size() != 2 || head[0] != "fpres" || head[1] != "1") r.fail("expected 'fpres 1'");
  std::size_t p = r.count(r.keyed("field"));
  fpres_block b{0, prime_field(2), {}, {}};
  try {
    b.field = prime_field(static_cast<coeff>(p));
  } catch (const error& e) {
    r.fail(e.what());
  }
  b.n = r.count(r.keyed("params"));
  std::size_t k = r.count(r.keyed("generators"));
  for (std::size_t i = 0; i < k; ++i) {
    auto t = r.expect("generator line");
    if (t[0] != "g" || t.size() != 2 + b.n) r.fail("expected 'g <label> " + std::to_string(b.n) + " coordinates'");
    grade d(b.n);
    for (std::size_t j = 0; j < b.n; ++j) d[j] = r.number(t[2 + j]);
    b.gens.push_back({t[1], std::move(d)});
  }
  std::size_t m = r.count(r.keyed("relations"));
  for (std::size_t i = 0; i < m; ++i) {
    auto t = r.expect("relation line");
    if (t[0] != "r" || t.size() < 2 + b.n || t[1 + b.n] != ";")
      r.fail("expected 'r " + std::to_string(b.n) + " coordinates ; coeff:index ...'");
    grade d(b.n);
    for (std::size_t j = 0; j < b.n; ++j) d[j] = r.number(t[1 + j]);
    b.rels.push_back({std::move(d), parse_column(r, t, 2 + b.n, b.field)});
  }
  return b;
}

void write_block(std::ostream& out, std::size_t n, const prime_field& f, const std::vector<generator>& gens,
                 const std::vector<relation>& rels) {
  out << "fpres 1\nfield " << f.characteristic() << "\nparams " << n << "\ngenerators " << gens.size() << '\n';
  for (const auto& g : gens) {
    out << "g " << g.label;
    for (const auto& x : g.degree) out << ' ' << to_string(x);
    out << '\n';
  }
  out << "relations " << rels.size() << '\n';
  for (const auto& rel : rels) {
    out << 'r';
    for (const auto& x : rel.degree) out << ' ' << to_string(x);
    out << " ;";
    write_column(out, rel.column);
    out << '\n';
  }
}

void expect_end(line_reader& r) {
  std::vector<std::string> extra;
  if (r.next(extra)) r.fail("unexpected trailing content '" + extra[0] + "'");
}

}  // namespace

presentation read_fpres(std::istream& in) {
  line_reader r(in);
  auto b = read_block(r);
  expect_end(r);
  try {
    return presentation(b.n, b.field, std::move(b.gens), std::move(b.rels));
  } catch (const homogeneity_error&) {
    throw;
  } catch (const error& e) {
    r.fail(e.what());
  }
}

void write_fpres(std::ostream& out, const presentation& p) {
  write_block(out, p.dim(), p.field(), p.generators(), p.relations());
}

std::string to_fpres(const presentation& p) {
  std::ostringstream s;
  write_fpres(s, p);
  return s.str();
}

presentation read_fpres_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return read_fpres(in);
}

barcode read_barcode(std::istream& in) {
  line_reader r(in);
  std::vector<bar> bars;
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t.size() != 4 || t[0] != "bar") r.fail("expected 'bar <birth> <death|inf> <multiplicity>'");
    bar b{r.number(t[1]), r.number_or_inf(t[2])};
    if (!(extended(b.birth) < b.death)) r.fail("bar death must exceed its birth");
    std::size_t mult = r.count(t[3]);
    for (std::size_t k = 0; k < mult; ++k) bars.push_back(b);
  }
  return barcode(std::move(bars));
}

void write_barcode(std::ostream& out, const barcode& b) {
  const auto& bars = b.bars();
  for (std::size_t k = 0; k < bars.size();) {
    std::size_t j = k;
    while (j < bars.size() && bars[j] == bars[k]) ++j;
    out << "bar " << to_string(bars[k].birth) << ' ' << to_string(bars[k].death) << ' ' << (j - k) << '\n';
    k = j;
  }
}

std::vector<block> read_blocks(std::istream& in) {
  line_reader r(in);
  auto head = r.expect("blocks header");
  if (head.size() != 2 || head[0] != "blocks" || head[1] != "1") r.fail("expected 'blocks 1'");
  std::vector<block> out;
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t.size() != 4 || t[0] != "blk") r.fail("expected 'blk <kind> <a> <b>'");
    block blk;
    try {
      blk = block{parse_block_kind(t[1]), parse_rational(t[2]), parse_extended(t[3])};
      validate(blk);
    } catch (const error& e) {
      r.fail(e.what());
    }
    out.push_back(blk);
  }
  return out;
}

void write_blocks(std::ostream& out, const std::vector<block>& blocks) {
  out << "blocks 1\n";
  for (const auto& b : blocks) out << "blk " << to_string(b.kind) << ' ' << to_string(b.a) << ' ' << to_string(b.b) << '\n';
}

interleaving_witness read_witness(std::istream& in, std::size_t p_generators, std::size_t q_generators,
                                  const prime_field& field) {
  line_reader r(in);
  interleaving_witness w{r.number(r.keyed("witness")), std::vector<sparse_column>(p_generators),
                         std::vector<sparse_column>(q_generators)};
  std::vector<bool> seen_f(p_generators), seen_g(q_generators);
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t.size() < 3 || (t[0] != "f" && t[0] != "g") || t[2] != "->") r.fail("expected 'f|g <index> -> coeff:index ...'");
    bool is_f = t[0] == "f";
    std::size_t i = r.count(t[1]);
    auto& map = is_f ? w.f : w.g;
    auto& seen = is_f ? seen_f : seen_g;
    if (i >= map.size()) r.fail("generator index " + std::to_string(i) + " out of range");
    if (seen[i]) r.fail("generator " + std::to_string(i) + " listed twice");
    seen[i] = true;
    map[i] = parse_column(r, t, 3, field);
  }
  return w;
}

void write_witness(std::ostream& out, const interleaving_witness& w) {
  out << "witness " << to_string(w.epsilon) << '\n';
  for (std::size_t i = 0; i < w.f.size(); ++i) {
    out << "f " << i << " ->";
    write_column(out, w.f[i]);
    out << '\n';
  }
  for (std::size_t i = 0; i < w.g.size(); ++i) {
    out << "g " << i << " ->";
    write_column(out, w.g[i]);
    out << '\n';
  }
}

joint_presentation read_joint(std::istream& in) {
  line_reader r(in);
  auto head = r.expect("joint header");
  if (head.size() != 2 || head[0] != "joint" || head[1] != "1") r.fail("expected 'joint 1'");
  rational eps = r.number(r.keyed("epsilon"));
  auto m = read_block(r);
  auto n = read_block(r);
  expect_end(r);
  if (m.n != n.n || !(m.field == n.field)) r.fail("joint blocks disagree on dimension or field");
  joint_presentation j{m.n, m.field, eps, std::move(m.gens), std::move(n.gens), std::move(m.rels), std::move(n.rels)};
  try {
    validate(j);
  } catch (const homogeneity_error&) {
    throw;
  } catch (const error& e) {
    r.fail(e.what());
  }
  return j;
}

void write_joint(std::ostream& out, const joint_presentation& j) {
  out << "joint 1\nepsilon " << to_string(j.epsilon) << '\n';
  write_block(out, j.n, j.field, j.m_generators, j.m_relations);
  write_block(out, j.n, j.field, j.n_generators, j.n_relations);
}

}  // namespace multipers
