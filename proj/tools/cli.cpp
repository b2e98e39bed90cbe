#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "multipers/blocks.hpp"
#include "multipers/experiments.hpp"
#include "multipers/fibered.hpp"
#include "multipers/functors.hpp"
#include "multipers/io.hpp"
#include "multipers/metrics.hpp"
#include "multipers/module.hpp"

namespace multipers::cli {

namespace {

enum class emit_format { text, tabular };

// Key/value report. Text: "key: value"; tabular: tab-separated exact and decimal columns.
class report {
 public:
  void add(const std::string& key, const std::string& value) { rows_.push_back({key, value, ""}); }
  void add(const std::string& key, const extended& value) {
    rows_.push_back({key, to_string(value), value.is_finite() ? to_decimal(value.value()) : "inf"});
  }
  void add(const std::string& key, std::size_t value) { add(key, std::to_string(value)); }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "yes" : "no")); }

  void write(std::ostream& out, emit_format f) const {
    if (f == emit_format::tabular) out << "key\texact\tdecimal\n";
    for (const auto& r : rows_) {
      if (f == emit_format::tabular) {
        out << r.key << '\t' << r.value << '\t' << r.decimal << '\n';
      } else {
        out << r.key << ": " << r.value;
        if (!r.decimal.empty() && r.decimal != "inf") out << " (" << r.decimal << ')';
        out << '\n';
      }
    }
  }

 private:
  struct row {
    std::string key, value, decimal;
  };
  std::vector<row> rows_;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

grade parse_grade(const std::string& s) {
  std::vector<rational> xs;
  for (const auto& part : split(s, ',')) xs.push_back(parse_rational(part));
  if (xs.empty()) throw precondition_error("empty grade");
  return grade(std::move(xs));
}

grid_function parse_grid(const std::string& s) {
  std::vector<std::vector<rational>> axes;
  for (const auto& axis : split(s, ';')) {
    std::vector<rational> values;
    if (!axis.empty())
      for (const auto& part : split(axis, ',')) values.push_back(parse_rational(part));
    axes.push_back(std::move(values));
  }
  return grid_function(std::move(axes));
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return in;
}

std::string line_text(const line_spec& l) {
  return "direction " + to_string(l.direction()) + " base " + to_string(l.base());
}

interleaving_witness load_witness(const std::string& path, const presentation& p, const presentation& q) {
  auto in = open(path);
  return read_witness(in, p.num_generators(), q.num_generators(), p.field());
}

// Sampling flags shared by the distance commands.
struct sampling_flags {
  std::size_t lines = sample_config{}.directions;
  std::size_t adaptive = sample_config{}.adaptive_rounds;
  std::uint64_t seed = 0;
  std::size_t jitter = 0;
  unsigned threads = 0;

  void attach(CLI::App* app) {
    app->add_option("--lines", lines, "Number of sampled slopes")->check(CLI::PositiveNumber);
    app->add_option("--adaptive", adaptive, "Adaptive refinement rounds");
    app->add_option("--seed", seed, "Seed for jitter lines");
    app->add_option("--jitter", jitter, "Extra random lines drawn from the seed");
    app->add_option("--threads", threads, "Worker threads (0: MULTIPERS_THREADS or hardware)");
  }

  sample_config config() const {
    sample_config c;
    c.directions = lines;
    c.adaptive_rounds = adaptive;
    c.seed = seed;
    c.jitter_lines = jitter;
    c.threads = threads;
    return c;
  }
};

void add_distance(report& r, const std::string& key, const distance_report& d, bool argmax) {
  r.add(key, d.value);
  r.add(key + "_kind", to_string(d.kind));
  if (d.lines_evaluated > 0) r.add("lines_evaluated", d.lines_evaluated);
  if (argmax) r.add("argmax", d.argmax ? line_text(*d.argmax) : std::string("none"));
}

void add_local(report& r, const local_equivalence_report& e) {
  r.add("kappa", extended(e.kappa));
  r.add("controlling_constant", e.controlling);
  r.add("eps_lower", e.eps_lower);
  r.add("eps_upper", e.eps_upper);
  r.add("hypothesis_bound", e.hypothesis_bound);
  r.add("hypothesis_holds", e.hypothesis_holds);
  add_distance(r, "d0", e.d0, false);
  r.add("kappa_eps", e.kappa_eps);
  r.add("strict", e.strict_pass);
  r.add("nonstrict", e.nonstrict_pass);
  r.add("verdict", to_string(e.verdict));
  if (!e.note.empty()) r.add("note", e.note);
}

struct state {
  emit_format format = emit_format::text;
  std::string output;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finitely presented multiparameter persistence modules", "multipers"};
  app.require_subcommand(1);
  app.fallthrough();
  state st;
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "tabular"}));
  app.add_option("-o,--output", st.output, "Write the result to a file");

  std::string in1, in2, in3;
  std::string eps_text, grid_text, grid_from, variant_text = "two-sided", witness_out, direction, through;
  std::vector<std::string> grades;
  bool raw = false, emit_argmax = false;
  sampling_flags sampling;

  auto* c_min = app.add_subcommand("minimize", "Minimal presentation");
  c_min->add_option("input", in1)->required();

  auto* c_betti = app.add_subcommand("betti", "Betti grades, grid and controlling constant");
  c_betti->add_option("input", in1)->required();

  auto* c_hilbert = app.add_subcommand("hilbert", "Dimension at grades");
  c_hilbert->add_option("input", in1)->required();
  c_hilbert->add_option("--at", grades, "Grade as comma-separated rationals")->required();

  auto grid_options = [&](CLI::App* c) {
    c->add_option("--grid", grid_text, "Axes as 'x1,x2;y1,y2'");
    c->add_option("--grid-from", grid_from, "Use the Betti grid of this presentation");
  };

  auto* c_merge = app.add_subcommand("merge", "Merge functor onto a grid");
  c_merge->add_option("input", in1)->required();
  c_merge->add_option("--delta", eps_text)->required();
  c_merge->add_option("--variant", variant_text)->check(CLI::IsMember({"two-sided", "plus", "minus"}));
  grid_options(c_merge);
  c_merge->add_option("--witness-out", witness_out);
  c_merge->add_flag("--raw", raw, "Skip minimization");

  auto* c_simplify = app.add_subcommand("simplify", "Simplification functor");
  c_simplify->add_option("input", in1)->required();
  c_simplify->add_option("--eps", eps_text)->required();
  c_simplify->add_option("--witness-out", witness_out);
  c_simplify->add_flag("--raw", raw, "Skip minimization");

  auto* c_align = app.add_subcommand("grid-align", "Grid alignment pipeline");
  c_align->add_option("input", in1)->required();
  c_align->add_option("--kappa-eps", eps_text)->required();
  grid_options(c_align);
  c_align->add_option("--witness-out", witness_out);

  auto line_options = [&](CLI::App* c) {
    c->add_option("--direction", direction, "Direction, default all ones");
    c->add_option("--through", through, "Point on the line, default the origin");
  };

  auto* c_restrict = app.add_subcommand("restrict", "Restriction to a line");
  c_restrict->add_option("input", in1)->required();
  line_options(c_restrict);

  auto* c_barcode = app.add_subcommand("barcode", "Barcode of a restriction");
  c_barcode->add_option("input", in1)->required();
  line_options(c_barcode);

  auto* c_match = app.add_subcommand("match-dist", "Sampled matching distance");
  c_match->add_option("first", in1)->required();
  c_match->add_option("second", in2)->required();
  c_match->add_flag("--emit-argmax", emit_argmax);
  sampling.attach(c_match);

  auto* c_bottleneck = app.add_subcommand("bottleneck", "Bottleneck distance of two barcode files");
  c_bottleneck->add_option("first", in1)->required();
  c_bottleneck->add_option("second", in2)->required();

  auto* c_verify = app.add_subcommand("verify", "Check an interleaving witness");
  c_verify->add_option("first", in1)->required();
  c_verify->add_option("second", in2)->required();
  c_verify->add_option("witness", in3)->required();

  auto* c_lower = app.add_subcommand("lower-bound", "Rank invariant lower bound on the interleaving distance");
  c_lower->add_option("first", in1)->required();
  c_lower->add_option("second", in2)->required();

  auto* c_joint = app.add_subcommand("joint", "Joint presentation from a witness");
  c_joint->add_option("first", in1)->required();
  c_joint->add_option("second", in2)->required();
  c_joint->add_option("witness", in3)->required();

  auto* c_interp = app.add_subcommand("interpolate", "Point on the interpolation path");
  c_interp->add_option("joint", in1)->required();
  c_interp->add_option("--t", eps_text)->required();
  c_interp->add_flag("--raw", raw, "Skip minimization");

  auto* c_path = app.add_subcommand("path-length", "Matching distance length of an interpolation path");
  c_path->add_option("joint", in1)->required();
  c_path->add_option("--waypoints", grid_text, "Comma-separated parameters")->default_str("0,1/2,1");
  sampling.attach(c_path);

  auto* c_blocks = app.add_subcommand("blocks", "Block decompositions");
  c_blocks->require_subcommand(1);
  auto* c_extend = c_blocks->add_subcommand("extend", "Extended rectangles");
  c_extend->add_option("input", in1)->required();
  auto* c_bdist = c_blocks->add_subcommand("dist", "Block matching distance");
  c_bdist->add_option("first", in1)->required();
  c_bdist->add_option("second", in2)->required();

  auto* c_exp = app.add_subcommand("experiment", "Experiment harnesses");
  c_exp->require_subcommand(1);
  auto* c_ex31 = c_exp->add_subcommand("example31", "Equal fibered barcodes, distinct modules");
  std::string ex_eps = "1";
  c_ex31->add_option("--eps", ex_eps);
  sampling.attach(c_ex31);
  auto* c_local = c_exp->add_subcommand("local-equiv", "Local equivalence of the two distances");
  c_local->add_option("first", in1)->required();
  c_local->add_option("second", in2, "Required unless --anchor");
  c_local->add_option("--witness", in3);
  std::string kappa_text = "483/17000";
  c_local->add_option("--kappa", kappa_text)->default_str("483/17000");
  c_local->add_flag("--anchor", raw, "Run on M + N versus M + O with the incompleteness pair");
  sampling.attach(c_local);
  auto* c_sandwich = c_exp->add_subcommand("sandwich", "Extended versus restricted block distances");
  std::size_t pairs = 50;
  std::uint64_t seed = 0;
  c_sandwich->add_option("--pairs", pairs);
  c_sandwich->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? success : input_error;
  }
  st.format = format == "tabular" ? emit_format::tabular : emit_format::text;

  std::ostringstream body;
  int code = success;
  report r;
  bool has_report = false;

  auto load = [](const std::string& path) { return read_fpres_file(path); };
  auto grid_for = [&](const presentation& p) {
    if (!grid_text.empty()) return parse_grid(grid_text);
    return betti_and_grid(grid_from.empty() ? p : load(grid_from)).grid;
  };
  auto line_for = [&](const presentation& p) {
    grade d = direction.empty() ? grade(std::vector<rational>(p.dim(), rational(1))) : parse_grade(direction);
    grade t = through.empty() ? grade(p.dim()) : parse_grade(through);
    return line_spec(std::move(d), t);
  };
  auto emit_transformed = [&](const transformed& t) {
    write_fpres(body, t.module);
    if (!witness_out.empty()) {
      std::ofstream w(witness_out);
      if (!w) throw error("cannot write '" + witness_out + "'");
      write_witness(w, t.witness);
    }
  };

  try {
    if (c_min->parsed()) {
      write_fpres(body, minimize(load(in1)));
    } else if (c_betti->parsed()) {
      auto b = betti_and_grid(load(in1));
      has_report = true;
      r.add("xi0", b.xi0.size());
      for (const auto& g : b.xi0) r.add("generator", to_string(g));
      r.add("xi1", b.xi1.size());
      for (const auto& g : b.xi1) r.add("relation", to_string(g));
      for (std::size_t i = 0; i < b.grid.dim(); ++i) {
        std::string axis;
        for (const auto& x : b.grid.axis(i)) axis += (axis.empty() ? "" : ",") + to_string(x);
        r.add("axis_" + std::to_string(i), axis);
      }
      r.add("controlling_constant", b.controlling);
      r.add("partial_complexity", b.partial_complexity());
    } else if (c_hilbert->parsed()) {
      auto p = load(in1);
      has_report = true;
      for (const auto& g : grades) {
        grade a = parse_grade(g);
        r.add("dim " + to_string(a), hilbert(p, a));
      }
    } else if (c_merge->parsed()) {
      auto p = load(in1);
      merge_variant v = variant_text == "plus"    ? merge_variant::plus
                        : variant_text == "minus" ? merge_variant::minus
                                                  : merge_variant::two_sided;
      emit_transformed(merge_module(p, grid_for(p), parse_rational(eps_text), v, raw));
    } else if (c_simplify->parsed()) {
      emit_transformed(simplify(load(in1), parse_rational(eps_text), raw));
    } else if (c_align->parsed()) {
      auto p = load(in1);
      emit_transformed(grid_align(p, grid_for(p), parse_rational(eps_text)));
    } else if (c_restrict->parsed()) {
      auto p = load(in1);
      write_fpres(body, restrict(p, line_for(p)));
    } else if (c_barcode->parsed()) {
      auto p = load(in1);
      write_barcode(body, p.dim() == 1 ? barcode_of(p) : fibered_barcode(p, line_for(p)));
    } else if (c_match->parsed()) {
      auto d = matching_distance(load(in1), load(in2), sampling.config());
      has_report = true;
      add_distance(r, "matching_distance", d, emit_argmax);
    } else if (c_bottleneck->parsed()) {
      auto a = open(in1), b = open(in2);
      has_report = true;
      r.add("bottleneck", bottleneck(read_barcode(a), read_barcode(b)));
    } else if (c_verify->parsed()) {
      auto p = load(in1), q = load(in2);
      auto v = verify_interleaving(p, q, load_witness(in3, p, q));
      has_report = true;
      r.add("verdict", std::string(v.accepted ? "accept" : "reject"));
      if (!v.accepted) {
        r.add("reason", v.reason);
        code = rejected;
      }
    } else if (c_lower->parsed()) {
      has_report = true;
      add_distance(r, "lower_bound", rank_lower_bound(load(in1), load(in2)), false);
    } else if (c_joint->parsed()) {
      auto p = load(in1), q = load(in2);
      write_joint(body, joint_from_witness(p, q, load_witness(in3, p, q)));
    } else if (c_interp->parsed()) {
      auto in = open(in1);
      write_fpres(body, interpolate(read_joint(in), parse_rational(eps_text), raw));
    } else if (c_path->parsed()) {
      auto in = open(in1);
      auto j = read_joint(in);
      std::vector<presentation> path;
      for (const auto& t : split(grid_text.empty() ? "0,1/2,1" : grid_text, ','))
        path.push_back(interpolate(j, parse_rational(t)));
      has_report = true;
      r.add("waypoints", path.size());
      r.add("path_length", path_length_d0(path, sampling.config()));
    } else if (c_extend->parsed()) {
      auto in = open(in1);
      has_report = true;
      for (const auto& blk : read_blocks(in)) {
        auto rect = extend_block(blk);
        r.add(to_string(blk.kind) + " " + to_string(blk.a) + " " + to_string(blk.b),
              "[" + to_string(rect.lower[0]) + ", " + to_string(rect.upper[0]) + ") x [" + to_string(rect.lower[1]) +
                  ", " + to_string(rect.upper[1]) + ")");
      }
    } else if (c_bdist->parsed()) {
      auto a = open(in1), b = open(in2);
      has_report = true;
      r.add("block_matching_distance", block_matching_distance(read_blocks(a), read_blocks(b)));
    } else if (c_ex31->parsed()) {
      auto e = run_incompleteness(parse_rational(ex_eps), sampling.config());
      has_report = true;
      r.add("epsilon", extended(e.pair.witness.epsilon));
      add_distance(r, "d0", e.d0, false);
      add_distance(r, "lower_bound", e.rank_bound, false);
      r.add("upper_bound", extended(e.pair.witness.epsilon));
      r.add("witness", std::string(e.witness_check.accepted ? "accept" : "reject: " + e.witness_check.reason));
      r.add("result", std::string(e.pass ? "PASS" : "FAIL"));
      if (!e.pass) code = rejected;
    } else if (c_local->parsed()) {
      auto m = load(in1);
      rational kappa = parse_rational(kappa_text);
      local_equivalence_report e;
      if (raw) {
        e = run_anchor_counterexample(m, kappa, sampling.config());
      } else {
        if (in2.empty()) throw precondition_error("local-equiv needs a second presentation or --anchor");
        auto n = load(in2);
        std::optional<interleaving_witness> w;
        if (!in3.empty()) w = load_witness(in3, m, n);
        e = local_equivalence_experiment(m, n, kappa, w, sampling.config());
      }
      has_report = true;
      add_local(r, e);
      if (e.verdict == local_verdict::fail_at_resolution) code = rejected;
    } else if (c_sandwich->parsed()) {
      auto rows = run_block_sandwich(pairs, seed);
      has_report = true;
      std::size_t within = 0;
      for (const auto& row : rows) {
        within += row.within;
        r.add(to_string(row.a.kind) + " " + to_string(row.a.a) + " " + to_string(row.a.b) + " | " +
                  to_string(row.b.a) + " " + to_string(row.b.b),
              to_string(row.restricted) + " <= " + to_string(row.extended_distance) + (row.within ? " ok" : " VIOLATED"));
      }
      r.add("within", within);
      r.add("pairs", rows.size());
      r.add("result", std::string(within == rows.size() ? "PASS" : "FAIL"));
      if (within != rows.size()) code = rejected;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }

  if (has_report) r.write(body, st.format);
  if (st.output.empty()) {
    out << body.str();
  } else {
    std::ofstream f(st.output);
    if (!f) {
      err << "error: cannot write '" << st.output << "'\n";
      return input_error;
    }
    f << body.str();
  }
  return code;
}

}  // namespace multipers::cli
