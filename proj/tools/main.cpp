#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "report.hpp"
#include "thetakit/detrep.hpp"
#include "thetakit/lattice.hpp"
#include "thetakit/nodal.hpp"
#include "thetakit/spin.hpp"
#include "thetakit/theta_f2.hpp"

using namespace thetakit;
using json = nlohmann::json;

namespace {

constexpr int kInputError = 2;
constexpr int kDegenerate = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T>
std::string str(const T& v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

std::string histogram_text(const std::map<int, int>& h) {
  std::string out;
  for (auto [mult, points] : h) out += (out.empty() ? "" : " + ") + std::to_string(points) + "x" + std::to_string(mult);
  return out;
}

// ---------------------------------------------------------------------------
// lattice

std::vector<Table> cmd_lattice(int degree, const std::string& kind_name, bool weyl) {
  const PicardLattice lat(degree);
  const ClassKind kind = parse_class_kind(kind_name);
  const auto classes = lat.enumerate(kind);

  Table list{"classes", {"class", "symbolic"}, {}};
  for (const auto& x : classes) list.add({format_class(x), format_symbolic(x)});
  Table summary{"summary", {"key", "value"}, {}};
  summary.add({"degree", std::to_string(degree)});
  summary.add({"kind", std::string(to_string(kind))});
  summary.add({"count", std::to_string(classes.size())});
  const NodalConfig smooth(lat, {});
  if (degree == 3 && kind == ClassKind::blow_down)
    summary.add({"double_sixes", std::to_string(double_six_scheme(smooth).points.size())});
  if (degree == 2 && kind == ClassKind::exceptional)
    summary.add({"geiser_pairs", std::to_string(bitangent_scheme(smooth).points.size())});
  if (weyl) summary.add({"weyl_order", std::to_string(lat.weyl_order())});
  return {list, summary};
}

// ---------------------------------------------------------------------------
// nodal

NodalConfig load_config(const std::string& path) {
  const json j = json::parse(read_file(path));
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "degree" && key != "roots") throw std::invalid_argument("unknown config key '" + key + "'");
  if (!j.contains("degree")) throw std::invalid_argument("config needs 'degree'");
  const PicardLattice lat(j.at("degree").get<int>());
  std::vector<DivisorClass> roots;
  if (j.contains("roots"))
    for (const auto& r : j.at("roots")) roots.push_back(lat.make_class(r.get<std::vector<int>>()));
  return NodalConfig(lat, std::move(roots));
}

Table scheme_table(const MultiplicityScheme& s) {
  Table t{s.kind, {"representative", "symbolic", "multiplicity"}, {}};
  for (const auto& p : s.points)
    t.add({format_class(p.representative()), format_symbolic(p.representative()), std::to_string(p.multiplicity)});
  return t;
}

std::vector<Table> cmd_nodal(const std::string& path, const std::string& scheme) {
  const NodalConfig cfg = load_config(path);
  Table summary{"summary", {"key", "value"}, {}};
  summary.add({"degree", std::to_string(cfg.lattice().degree())});
  summary.add({"type", cfg.ade_type()});
  summary.add({"scheme", scheme});

  if (scheme == "profile") {
    const auto prof = intersection_profile(cfg);
    Table t{"profile", {"family"}, {}};
    for (int c : kProfileColumns) t.header.push_back(std::to_string(c));
    t.header.push_back("sum");
    for (const auto& row : prof.rows) {
      std::vector<std::string> cells{row.family};
      for (int c : row.counts) cells.push_back(std::to_string(c));
      cells.push_back(std::to_string(row.row_sum()));
      t.add(std::move(cells));
    }
    std::vector<std::string> total{"total"};
    int sum = 0;
    for (int c : prof.totals) {
      total.push_back(std::to_string(c));
      sum += c;
    }
    total.push_back(std::to_string(sum));
    t.add(std::move(total));
    return {summary, t};
  }

  if (scheme == "eventheta") {
    const auto s = even_theta_scheme(cfg);
    Table t{"eventheta", {"representative", "labels", "multiplicity"}, {}};
    for (const auto& p : s.points) {
      std::string labels;
      for (const auto& l : p.labels) labels += (labels.empty() ? "" : " ") + format_subset(l);
      t.add({format_subset(p.labels.front()), labels, std::to_string(p.multiplicity)});
    }
    summary.add({"points", std::to_string(s.points.size())});
    summary.add({"total", std::to_string(s.total)});
    summary.add({"histogram", histogram_text(s.histogram())});
    return {summary, t};
  }

  MultiplicityScheme s;
  if (scheme == "lines") s = line_scheme(cfg);
  else if (scheme == "blowdowns") s = blowdown_scheme(cfg);
  else if (scheme == "bitangents") s = bitangent_scheme(cfg);
  else if (scheme == "aronhold") s = aronhold_scheme(cfg);
  else if (scheme == "doublesix") s = double_six_scheme(cfg);
  else throw std::invalid_argument("unknown scheme " + scheme);
  summary.add({"points", std::to_string(s.points.size())});
  summary.add({"total", std::to_string(s.total)});
  summary.add({"histogram", histogram_text(s.histogram())});
  return {summary, scheme_table(s)};
}

// ---------------------------------------------------------------------------
// spin

std::vector<Table> cmd_spin(const std::string& path) {
  const DualGraph g = parse_graph(read_file(path));
  g.validate();
  const bool irreducible = g.num_vertices() == 1;
  const auto subsets = even_subsets(g);

  Table supports{"supports", {"delta", "b1_delta", "count", "multiplicity", "odd", "even"}, {}};
  struct Agg {
    std::uint64_t count = 0, odd = 0, even = 0;
  };
  std::map<std::uint64_t, Agg> by_mult;
  std::uint64_t degree = 0;
  for (const auto& delta : subsets) {
    const auto s = spin_counts(g, delta);
    std::string odd = "-", even = "-";
    auto& a = by_mult[s.multiplicity];
    a.count += s.count;
    if (irreducible) {
      const auto p = spin_parity_irreducible(g, delta);
      odd = std::to_string(p.odd);
      even = std::to_string(p.even);
      a.odd += p.odd;
      a.even += p.even;
    }
    degree += s.count * s.multiplicity;
    supports.add({format_edge_subset(delta), std::to_string(betti(g, delta)), std::to_string(s.count),
                  std::to_string(s.multiplicity), odd, even});
  }
  Table mult{"multiplicities", {"multiplicity", "points", "odd", "even"}, {}};
  for (const auto& [m, a] : by_mult)
    mult.add({std::to_string(m), std::to_string(a.count), irreducible ? std::to_string(a.odd) : "-",
              irreducible ? std::to_string(a.even) : "-"});

  Table summary{"summary", {"key", "value"}, {}};
  summary.add({"vertices", std::to_string(g.num_vertices())});
  summary.add({"edges", std::to_string(g.num_edges())});
  summary.add({"genus", std::to_string(g.arithmetic_genus())});
  summary.add({"b1", std::to_string(betti(g))});
  summary.add({"even_subsets", std::to_string(subsets.size())});
  summary.add({"total_degree", std::to_string(degree)});
  return {summary, supports, mult};
}

std::string node_column(int n) {
  static const char* names[] = {"smooth", "one node", "two nodes", "three nodes"};
  return n < 4 ? names[n] : std::to_string(n) + " nodes";
}

std::vector<Table> cmd_spin_table(int g, int nmax) {
  if (nmax < 0 || nmax > g) throw std::invalid_argument("need 0 <= nodes <= genus");
  std::vector<std::vector<SpinTableRow>> columns;
  for (int n = 0; n <= nmax; ++n) columns.push_back(spin_table_irreducible(g, n));
  Table t{"", {""}, {}};
  for (int n = 0; n <= nmax; ++n) t.header.push_back(node_column(n));
  for (int k = 0; k <= nmax; ++k) {
    for (int parity = 0; parity < 2; ++parity) {
      std::vector<std::string> cells{"mult " + std::to_string(1u << k) + (parity == 0 ? " even" : " odd")};
      for (const auto& col : columns) {
        if (k >= static_cast<int>(col.size())) cells.push_back("-");
        else cells.push_back(std::to_string(parity == 0 ? col[k].even : col[k].odd));
      }
      t.add(std::move(cells));
    }
  }
  return {t};
}

// ---------------------------------------------------------------------------
// theta

std::vector<Table> cmd_theta(const std::string& task, int dim, int arf_value, std::uint64_t seed, bool list) {
  Table summary{"summary", {"key", "value"}, {}};
  if (task == "classes") {
    summary.add({"odd", std::to_string(odd_classes().size())});
    summary.add({"even", std::to_string(even_classes().size())});
    return {summary};
  }
  if (task == "aronhold") {
    const auto sets = enumerate_aronhold();
    std::map<EvenSubsetClass, int> per_theta;
    Table t{"aronhold", {"set", "even_theta"}, {}};
    for (const auto& s : sets) {
      const auto theta = even_theta_of_aronhold(s);
      ++per_theta[theta];
      if (list) {
        std::string cells;
        for (const auto& c : s) cells += (cells.empty() ? "" : " ") + format_subset(c);
        t.add({cells, format_subset(theta)});
      }
    }
    int lo = 1 << 30, hi = 0;
    for (auto [theta, n] : per_theta) {
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
    summary.add({"aronhold_sets", std::to_string(sets.size())});
    summary.add({"even_classes_hit", std::to_string(per_theta.size())});
    summary.add({"sets_per_even_class", lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)});
    if (list) return {summary, t};
    return {summary};
  }
  if (task == "conic-pairs") {
    const auto c = count_conic_pairs(seed);
    summary.add({"genus", "6"});
    summary.add({"q1_linear", std::to_string(c.q1_linear)});
    summary.add({"eta", std::to_string(c.eta)});
    summary.add({"quotient_zeros", std::to_string(c.quotient_zeros)});
    summary.add({"z_size", std::to_string(c.z_size)});
    summary.add({"pairs", std::to_string(c.pairs)});
    return {summary};
  }
  if (task == "zeros") {
    if (dim <= 0 || dim % 2 != 0 || dim > 40) throw std::invalid_argument("--dim must be even, between 2 and 40");
    const auto q = QuadraticSpace::standard(dim / 2, arf_value);
    summary.add({"dim", std::to_string(dim)});
    summary.add({"arf", std::to_string(arf(q))});
    summary.add({"zeros", std::to_string(count_zeros(q))});
    return {summary};
  }
  throw std::invalid_argument("unknown theta task " + task);
}

// ---------------------------------------------------------------------------
// detrep

std::map<std::string, MultiPoly> parse_keyed(const std::string& text, const std::set<std::string>& keys) {
  std::map<std::string, MultiPoly> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected 'KEY: expression'");
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (!keys.count(key)) throw std::invalid_argument("unknown key '" + key + "'");
    if (!out.emplace(key, parse_poly(line.substr(colon + 1))).second)
      throw std::invalid_argument("duplicate key '" + key + "'");
  }
  for (const auto& k : keys)
    if (!out.count(k)) throw std::invalid_argument("missing key " + k);
  return out;
}

std::vector<Table> cmd_detrep(const std::string& path, const std::string& action, std::uint64_t seed) {
  const std::string text = read_file(path);
  Table t{"detrep", {"key", "value"}, {}};
  if (action == "quartic") {
    const auto in = parse_keyed(text, {"L", "Q", "H"});
    const auto r = quartic_from_odd_theta(in.at("L"), in.at("Q"), in.at("H"));
    t.add({"quartic", format_poly(r.quartic)});
    t.add({"bitangent", format_poly(r.bitangent)});
    t.add({"status", r.verified ? "bitangent verified" : "bitangent NOT verified"});
    return {t};
  }
  const SymThetaData data = parse_sym_theta(text);
  if (action == "quintic") {
    t.add({"quintic", format_poly(discriminant_quintic(data))});
  } else if (action == "conic") {
    t.add({"conic", format_poly(contact_conic(data))});
  } else if (action == "check") {
    const MultiPoly f = discriminant_quintic(data), c = contact_conic(data);
    const auto rep = total_tangency_check(f, c, seed);
    t.add({"quintic", format_poly(f)});
    t.add({"conic", format_poly(c)});
    t.add({"seed", std::to_string(seed)});
    t.add({"shear", "x0 -> x0 + (" + rep.shear0.get_str() + ")*x2, x1 -> x1 + (" + rep.shear1.get_str() + ")*x2"});
    t.add({"resultant", format_poly(rep.resultant)});
    std::string mults;
    for (int m : rep.multiplicities) mults += (mults.empty() ? "" : " ") + std::to_string(m);
    t.add({"multiplicities", mults});
    t.add({"verdict", std::string(to_string(rep.verdict))});
  } else {
    throw std::invalid_argument("unknown detrep action " + action);
  }
  return {t};
}

// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args);

std::vector<std::string> args_from_run_config(const std::string& path) {
  const json j = json::parse(read_file(path));
  if (!j.is_object()) throw std::invalid_argument("run config must be a JSON object");
  static const std::set<std::string> allowed{"command", "inputs", "format", "seed", "options"};
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw std::invalid_argument("unknown run-config key '" + key + "'");
  const auto command = j.at("command").get<std::string>();
  if (command == "run") throw std::invalid_argument("run configs cannot nest");
  std::vector<std::string> args{command};
  if (j.contains("inputs"))
    for (const auto& in : j.at("inputs")) args.push_back(in.get<std::string>());
  args.push_back("--format");
  args.push_back(j.value("format", "pretty"));
  if (command == "theta" || command == "detrep") {
    args.push_back("--seed");
    args.push_back(std::to_string(j.value("seed", std::uint64_t{0})));
  }
  if (j.contains("options"))
    for (const auto& [key, value] : j.at("options").items()) {
      if (value.is_boolean()) {
        if (value.get<bool>()) args.push_back("--" + key);
      } else {
        args.push_back("--" + key);
        args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
      }
    }
  return args;
}

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Combinatorics of theta characteristics, Del Pezzo lattices and spin curves"};
  app.require_subcommand(1);

  std::string format = "pretty";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "pretty"}));
  };

  int degree = 0, genus = 3, nodes = 3, dim = 6, arf_value = 0;
  std::string kind = "exceptional", scheme, task, action, input;
  std::uint64_t seed = 0;
  bool weyl = false, list = false;

  auto* lattice = app.add_subcommand("lattice", "Enumerate classes of a Picard lattice");
  lattice->add_option("--degree", degree, "Del Pezzo degree (2 or 3)")->required();
  lattice->add_option("--kind", kind, "exceptional | root | blowdown");
  lattice->add_flag("--weyl-order", weyl, "Also compute the Weyl group order");
  add_format(lattice);

  auto* nodal = app.add_subcommand("nodal", "Multiplicity schemes of a nodal configuration");
  nodal->add_option("config", input, "JSON file {\"degree\": d, \"roots\": [[...], ...]}")->required();
  nodal->add_option("--scheme", scheme, "Scheme to compute")
      ->required()
      ->check(CLI::IsMember({"lines", "bitangents", "blowdowns", "aronhold", "doublesix", "eventheta", "profile"}));
  add_format(nodal);

  auto* spin = app.add_subcommand("spin", "Spin structures on a stable curve given by its dual graph");
  spin->add_option("graph", input, "Graph file (v <genus> / e <i> <j> lines)")->required();
  add_format(spin);

  auto* spin_table = app.add_subcommand("spin-table", "Multiplicity table for irreducible nodal curves");
  spin_table->add_option("--genus", genus, "Arithmetic genus");
  spin_table->add_option("--nodes", nodes, "Largest number of nodes");
  add_format(spin_table);

  auto* theta = app.add_subcommand("theta", "Theta characteristics over F_2");
  theta->add_option("task", task, "classes | aronhold | conic-pairs | zeros")
      ->required()
      ->check(CLI::IsMember({"classes", "aronhold", "conic-pairs", "zeros"}));
  theta->add_option("--dim", dim, "Dimension of the quadratic space (zeros)");
  theta->add_option("--arf", arf_value, "Arf invariant (zeros)")->check(CLI::Range(0, 1));
  theta->add_option("--seed", seed, "Seed for the random admissible data (conic-pairs)");
  theta->add_flag("--list", list, "List every Aronhold set");
  add_format(theta);

  auto* detrep = app.add_subcommand("detrep", "Symmetric determinantal plane curves");
  detrep->add_option("input", input, "Keyed polynomial file")->required();
  detrep->add_option("--action", action, "quintic | conic | check | quartic")
      ->required()
      ->check(CLI::IsMember({"quintic", "conic", "check", "quartic"}));
  detrep->add_option("--seed", seed, "Seed for the shear used by check");
  add_format(detrep);

  auto* run = app.add_subcommand("run", "Run a command described by a JSON config");
  run->add_option("config", input, "JSON {command, inputs, format, seed, options}")->required();

  std::vector<const char*> argv{"thetakit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*run) return run_cli(args_from_run_config(input));

  std::vector<Table> report;
  if (*lattice) report = cmd_lattice(degree, kind, weyl);
  else if (*nodal) report = cmd_nodal(input, scheme);
  else if (*spin) report = cmd_spin(input);
  else if (*spin_table) report = cmd_spin_table(genus, nodes);
  else if (*theta) report = cmd_theta(task, dim, arf_value, seed, list);
  else if (*detrep) report = cmd_detrep(input, action, seed);
  print_report(std::cout, report, format == "tsv" ? Format::tsv : Format::pretty);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const DegenerateInput& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
