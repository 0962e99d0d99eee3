#include "ferrers/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ferrers/bounds.hpp"
#include "ferrers/constructions.hpp"
#include "ferrers/error.hpp"
#include "ferrers/recognition.hpp"
#include "ferrers/solver.hpp"
#include "text_util.hpp"

namespace ferrers::cli {

namespace {

int to_int(const std::string& s, const std::string& what) {
  auto v = detail::parse_int(s);
  if (!v) throw InputError(what + ": expected an integer, got '" + s + "'");
  return *v;
}

FamilySpec parse_one(const std::vector<std::string>& tokens, std::size_t& pos, bool allow_union) {
  if (pos >= tokens.size()) throw InputError("family: missing family name");
  const std::string kind = tokens[pos++];
  auto take = [&] {
    if (pos >= tokens.size()) throw InputError("family " + kind + ": missing parameter");
    return to_int(tokens[pos++], "family " + kind);
  };
  if (kind == "path") return FamilySpec::path(take());
  if (kind == "cycle") return FamilySpec::cycle(take());
  if (kind == "ladder") return FamilySpec::ladder(take());
  if (kind == "crown") return FamilySpec::crown(take());
  if (kind == "kmn-minus-matching" || kind == "kmn") {
    int m = take();
    int n = take();
    int t = take();
    return FamilySpec::complete_minus_matching(m, n, t);
  }
  if (kind == "union" && allow_union) {
    std::vector<FamilySpec> members;
    while (pos < tokens.size()) members.push_back(parse_one(tokens, pos, false));
    return FamilySpec::disjoint_union(std::move(members));
  }
  throw InputError("unknown family '" + kind + "'");
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_file(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  return read_all(f);
}

struct GraphSource {
  std::string input;
  std::vector<std::string> family;

  void attach(CLI::App* cmd) {
    auto* in = cmd->add_option("--input,-i", input, "graph file (edge list or matrix); '-' for stdin");
    auto* fam = cmd->add_option("--family,-f", family, "family name and parameters, e.g. 'crown 4'")
                    ->expected(1, CLI::detail::expected_max_vector_size);
    in->excludes(fam);
  }

  BipartiteGraph load(std::istream& stdin_stream) const {
    if (!family.empty()) return generate(parse_family(family));
    return parse_graph_text(read_file(input.empty() ? "-" : input, stdin_stream));
  }
};

// Fixed-width text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        std::string cell = r[c];
        if (c + 1 < r.size()) cell.resize(width[c], ' ');
        line += (c ? "  " : "") + cell;
      }
      out << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct TableOptions {
  std::string name;
  int max_n = 0;
  SolverOptions solver;
};

// A construction counts only if it verifies and has the expected number of parts.
bool construction_matches(const BipartiteGraph& g, const EdgePartition& p, int expected) {
  return p.part_count() == expected && verify_partition(g, p).ok();
}

int solve_value(const BipartiteGraph& g, const SolverOptions& opts) { return fp_exact(g, opts).value; }

std::string mark(bool ok) { return ok ? "ok" : "MISMATCH"; }

int table_paths(const TableOptions& o, std::ostream& out) {
  Table t({"n", "edges", "fp", "nu_ind", "ceil((n-1)/3)", "source", "status"});
  int bad = 0;
  for (int n = 2; n <= o.max_n; ++n) {
    auto g = generate(FamilySpec::path(n));
    int formula = ceil_div(n - 1, 3);
    bool ok = construction_matches(g, path_partition(n), formula);
    std::string fp = std::to_string(path_partition(n).part_count());
    std::string nu = "-";
    std::string source = "construction";
    if (g.edge_count() <= o.solver.edge_cap) {
      int v = solve_value(g, o.solver);
      int m = induced_matching_number(g).size;
      fp = std::to_string(v);
      nu = std::to_string(m);
      source = "exact";
      ok = ok && v == formula && m == formula;
    }
    bad += !ok;
    t.add({std::to_string(n), std::to_string(g.edge_count()), fp, nu, std::to_string(formula), source, mark(ok)});
  }
  t.print(out);
  return bad;
}

int table_cycles(const TableOptions& o, std::ostream& out) {
  Table t({"n", "fp", "ceil(n/3)", "nu_ind", "floor(n/3)", "source", "status"});
  int bad = 0;
  for (int n = 4; n <= o.max_n; n += 2) {
    auto g = generate(FamilySpec::cycle(n));
    int fp_formula = ceil_div(n, 3);
    int nu_formula = n / 3;
    bool ok = construction_matches(g, cycle_partition(n), fp_formula);
    std::string fp = std::to_string(cycle_partition(n).part_count());
    std::string nu = "-";
    std::string source = "construction";
    if (g.edge_count() <= o.solver.edge_cap) {
      int v = solve_value(g, o.solver);
      int m = induced_matching_number(g).size;
      fp = std::to_string(v);
      nu = std::to_string(m);
      source = "exact";
      ok = ok && v == fp_formula && m == nu_formula;
    }
    bad += !ok;
    t.add({std::to_string(n), fp, std::to_string(fp_formula), nu, std::to_string(nu_formula), source, mark(ok)});
  }
  t.print(out);
  return bad;
}

int table_ladders(const TableOptions& o, std::ostream& out) {
  Table t({"n", "nu_ind", "fp", "ceil(n/2)", "source", "status"});
  int bad = 0;
  for (int n = 1; n <= o.max_n; ++n) {
    auto g = generate(FamilySpec::ladder(n));
    int formula = ceil_div(n, 2);
    int nu = induced_matching_number(g).size;
    bool ok = nu == formula && construction_matches(g, ladder_partition(n), formula);
    std::string fp = std::to_string(ladder_partition(n).part_count());
    std::string source = "upper bound";
    if (n <= 6 && g.edge_count() <= o.solver.edge_cap) {
      int v = solve_value(g, o.solver);
      fp = std::to_string(v);
      source = "exact";
      ok = ok && v == formula;
    }
    bad += !ok;
    t.add({std::to_string(n), std::to_string(nu), fp, std::to_string(formula), source, mark(ok)});
  }
  t.print(out);
  return bad;
}

int table_crown(const TableOptions& o, std::ostream& out) {
  Table t({"n", "fp", "width_u", "width_v", "source", "status"});
  int bad = 0;
  for (int n = 3; n <= o.max_n; ++n) {
    auto g = generate(FamilySpec::crown(n));
    int wu = dilworth_width(g, Side::u).width;
    int wv = dilworth_width(g, Side::v).width;
    bool ok = wu == n && wv == n && construction_matches(g, crown_partition(n), 2);
    std::string fp = "2";
    std::string source = "construction";
    if (g.edge_count() <= o.solver.edge_cap) {
      int v = solve_value(g, o.solver);
      fp = std::to_string(v);
      source = "exact";
      ok = ok && v == 2;
    }
    bad += !ok;
    t.add({std::to_string(n), fp, std::to_string(wu), std::to_string(wv), source, mark(ok)});
  }
  t.print(out);
  return bad;
}

int table_kmn(const TableOptions& o, std::ostream& out) {
  Table t({"m", "n", "t", "fp", "formula", "source", "status"});
  int bad = 0;
  for (int m = 2; m <= o.max_n; ++m)
    for (int n = 2; n <= o.max_n; ++n)
      for (int k = 0; k <= std::min(m, n); ++k) {
        auto g = generate(FamilySpec::complete_minus_matching(m, n, k));
        int formula = k <= 1 ? 1 : 2;
        auto p = kmn_minus_matching_partition(m, n, k);
        bool ok = construction_matches(g, p, formula);
        std::string fp = std::to_string(p.part_count());
        std::string source = "construction";
        if (g.edge_count() <= o.solver.edge_cap) {
          int v = solve_value(g, o.solver);
          fp = std::to_string(v);
          source = "exact";
          ok = ok && v == formula;
        }
        bad += !ok;
        t.add({std::to_string(m), std::to_string(n), std::to_string(k), fp, std::to_string(formula), source,
               mark(ok)});
      }
  t.print(out);
  return bad;
}

int table_gap(const TableOptions& o, std::ostream& out) {
  Table t({"t", "upper", "3t", "nu_ind", "2t", "fp", "gap", "status"});
  int bad = 0;
  auto c8 = generate(FamilySpec::cycle(8));
  for (int copies = 1; copies <= o.max_n; ++copies) {
    std::vector<std::pair<BipartiteGraph, EdgePartition>> pieces(static_cast<std::size_t>(copies),
                                                                 {c8, cycle_partition(8)});
    auto [g, p] = union_partition(pieces);
    int nu = induced_matching_number(g).size;
    bool ok = construction_matches(g, p, 3 * copies) && nu == 2 * copies;
    std::string fp = "-";
    if (g.edge_count() <= o.solver.edge_cap) {
      int v = solve_value(g, o.solver);
      fp = std::to_string(v);
      ok = ok && v == 3 * copies;
    }
    bad += !ok;
    t.add({std::to_string(copies), std::to_string(p.part_count()), std::to_string(3 * copies), std::to_string(nu),
           std::to_string(2 * copies), fp, std::to_string(p.part_count() - nu), mark(ok)});
  }
  t.print(out);
  return bad;
}

void print_certificate(const FerrersCertificate& cert, std::ostream& out) {
  if (cert.ferrers) {
    out << "ferrers\n";
    out << "u_order:";
    for (int u : cert.u_order) out << " u" << u;
    out << "\nv_order:";
    for (int v : cert.v_order) out << " v" << v;
    out << "\n";
  } else {
    out << "not_ferrers\n";
    out << "witness: " << cert.witness->to_string() << "\n";
  }
}

}  // namespace

FamilySpec parse_family(const std::vector<std::string>& tokens) {
  std::size_t pos = 0;
  auto spec = parse_one(tokens, pos, true);
  if (pos != tokens.size()) throw InputError("family: unexpected token '" + tokens[pos] + "'");
  spec.validate();
  return spec;
}

BipartiteGraph parse_graph_text(const std::string& text) {
  for (auto line : detail::split_lines(text)) {
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("bip", 0) == 0) return parse_edge_list(text);
    break;
  }
  return from_matrix(parse_matrix(text));
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ferrers partition number toolkit for bipartite graphs", "fpart"};
  app.require_subcommand(1, 1);

  GraphSource src;
  std::vector<std::string> family;
  bool matrix = false;
  auto* gen = app.add_subcommand("gen", "write a family graph");
  gen->add_option("--family,-f", family, "family name and parameters")
      ->expected(1, CLI::detail::expected_max_vector_size)
      ->required();
  gen->add_flag("--matrix", matrix, "emit the 0-1 matrix instead of an edge list");

  auto* recognize = app.add_subcommand("recognize", "certify whether a graph is Ferrers");
  src.attach(recognize);

  bool exact_chi = false;
  bool as_table = false;
  bool with_fp = false;
  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds on fp");
  src.attach(bounds);
  bounds->add_flag("--exact-chi", exact_chi, "compute chi of the conflict graph exactly");
  bounds->add_flag("--table", as_table, "print the table format");
  bounds->add_flag("--fp", with_fp, "also compute fp exactly");

  SolverOptions solver;
  auto* fp = app.add_subcommand("fp", "exact Ferrers partition number");
  src.attach(fp);
  for (auto* cmd : {fp, bounds}) {
    cmd->add_option("--cap", solver.edge_cap, "refuse graphs with more edges")->capture_default_str();
    cmd->add_option("--jobs,-j", solver.jobs, "worker threads")->check(CLI::PositiveNumber);
  }
  fp->add_flag("--leaf-check-only", solver.leaf_check_only, "disable search pruning");

  std::string graph_file;
  std::string partition_file;
  int part_index = 0;
  auto* check = app.add_subcommand("check", "verify a partition against a graph");
  check->add_option("--graph", graph_file)->required();
  check->add_option("--partition", partition_file)->required();

  auto* staircase = app.add_subcommand("staircase", "staircase matrix of one part");
  staircase->add_option("--graph", graph_file)->required();
  staircase->add_option("--partition", partition_file)->required();
  staircase->add_option("--part", part_index)->required();

  TableOptions table_opts;
  auto* table = app.add_subcommand("table", "reproduce a family result over a range");
  table->add_option("name", table_opts.name)
      ->required()
      ->check(CLI::IsMember({"paths", "cycles", "ladders", "crown", "kmn", "gap"}));
  table->add_option("--max-n", table_opts.max_n)->required();
  table->add_option("--cap", table_opts.solver.edge_cap)->capture_default_str();
  table->add_option("--jobs,-j", table_opts.solver.jobs)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) {
      auto g = generate(parse_family(family));
      out << (matrix ? to_matrix_text(to_matrix(g)) : to_edge_list(g));
      return 0;
    }
    if (recognize->parsed()) {
      print_certificate(is_ferrers(src.load(in)), out);
      return 0;
    }
    if (bounds->parsed()) {
      auto g = src.load(in);
      auto report = compute_bounds(g, {exact_chi});
      if (with_fp) {
        auto r = fp_exact(g, solver);
        report.fp = r.value;
        report.fp_witness = r.witness;
      }
      out << (as_table ? report.to_table() : report.to_key_value(g));
      return 0;
    }
    if (fp->parsed()) {
      auto g = src.load(in);
      auto r = fp_exact(g, solver);
      out << r.to_text(g, false);
      err << r.stats_line() << "\n";
      return 0;
    }
    if (check->parsed()) {
      auto g = parse_graph_text(read_file(graph_file, in));
      auto p = parse_partition(g, read_file(partition_file, in));
      auto verdict = verify_partition(g, p);
      out << (verdict.ok() ? "ok" : "reject: " + verdict.describe(g)) << "\n";
      return verdict.ok() ? 0 : 1;
    }
    if (staircase->parsed()) {
      auto g = parse_graph_text(read_file(graph_file, in));
      auto p = parse_partition(g, read_file(partition_file, in));
      if (part_index < 0 || part_index >= p.part_count())
        throw InputError("--part " + std::to_string(part_index) + " out of range");
      auto s = ferrers_staircase(g, p.part(part_index));
      out << "rows:";
      for (int u : s.row_perm) out << " u" << u;
      out << "\ncols:";
      for (int v : s.col_perm) out << " v" << v;
      out << "\n" << to_matrix_text(s.matrix);
      return 0;
    }
    if (table->parsed()) {
      int bad = 0;
      const auto& n = table_opts.name;
      if (n == "paths") bad = table_paths(table_opts, out);
      else if (n == "cycles") bad = table_cycles(table_opts, out);
      else if (n == "ladders") bad = table_ladders(table_opts, out);
      else if (n == "crown") bad = table_crown(table_opts, out);
      else if (n == "kmn") bad = table_kmn(table_opts, out);
      else bad = table_gap(table_opts, out);
      out << (bad == 0 ? "all rows match\n" : std::to_string(bad) + " row(s) mismatch\n");
      return bad == 0 ? 0 : 1;
    }
  } catch (const NotFerrersError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ferrers::cli
