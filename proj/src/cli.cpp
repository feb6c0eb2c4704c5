#include "sepvar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "sepvar/boolring.hpp"
#include "sepvar/io.hpp"
#include "sepvar/sepcheck.hpp"
#include "sepvar/sepextract.hpp"

namespace sepvar {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string z;
  bool optimized = false;
  bool field_ideal = false;
  bool augment = false;
  std::string bound = "tracked";
  std::string method = "kernel";
  std::string matrix;
  bool json = false;
  std::string pool;
  std::size_t max_size = 1;
  unsigned jobs = 1;
  std::size_t degree = 2;
};

std::string format_weights(const WeightVector& w) {
  std::string s = "W = (";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ", ";
    s += w[k].get_str();
  }
  return s + ")";
}

ordered_json weights_json(const WeightVector& w) {
  ordered_json a = ordered_json::array();
  for (const auto& x : w) a.push_back(x.get_str());
  return a;
}

ordered_json names_json(const IndexTuple& z, const Ring& ring) {
  ordered_json a = ordered_json::array();
  for (std::size_t zi : z) a.push_back(ring.name(zi));
  return a;
}

/// Terms written in descending order under `ord`.
std::string format_in_order(const Polynomial& f, const TermOrdering& ord) {
  if (f.is_zero()) return "0";
  std::vector<Monomial> ms(f.monomials().begin(), f.monomials().end());
  std::stable_sort(ms.begin(), ms.end(),
                   [&](const Monomial& a, const Monomial& b) { return ord.greater(a.term, b.term); });
  std::string s;
  for (const auto& m : ms) {
    std::string piece = Polynomial::monomial(f.ring(), m.term, m.coeff).to_string();
    if (s.empty()) {
      s = piece;
    } else if (piece[0] == '-') {
      s += " - " + piece.substr(1);
    } else {
      s += " + " + piece;
    }
  }
  return s;
}

OptimizedOptions optimized_options(const Options& o) {
  OptimizedOptions opt;
  if (o.bound == "tracked") {
    opt.bound = DegreeBound::Tracked;
  } else if (o.bound == "working") {
    opt.bound = DegreeBound::Working;
  } else {
    throw UsageError("--degree-bound must be tracked or working");
  }
  if (o.method == "kernel") {
    opt.method = ExtensionMethod::KernelOfHighTerms;
  } else if (o.method == "echelon") {
    opt.method = ExtensionMethod::EchelonScan;
  } else {
    throw UsageError("--method must be kernel or echelon");
  }
  return opt;
}

/// Everything a command needs after validation.
struct Job {
  PolySystem sys;
  IndexTuple z;
  bool boolean;
  BoolCheckMode mode;
  OptimizedOptions opt;
};

PolySystem load_system(const std::string& path) { return parse_system(read_file(path)); }

Job prepare(const Options& o, bool need_z = true) {
  PolySystem sys = load_system(o.input);
  const bool boolean = sys.ring()->boolean();
  if (!boolean && (o.field_ideal || o.augment))
    throw UsageError("--boolean-field-ideal and --augment-products need a boolean system");
  IndexTuple z;
  if (need_z) z = IndexTuple::parse(o.z, *sys.ring());
  BoolCheckMode mode = o.field_ideal ? BoolCheckMode::OptimizedWithFieldIdeal
                       : o.optimized ? BoolCheckMode::Optimized
                                     : BoolCheckMode::Plain;
  if (boolean && o.augment && need_z) sys = augment_with_indeterminate_products(sys, z);
  return {std::move(sys), std::move(z), boolean, mode, optimized_options(o)};
}

bool is_optimized(const Job& j) { return j.mode != BoolCheckMode::Plain; }

CheckOutcome do_check(const Job& j, const IndexTuple& z) {
  if (j.boolean) return bool_check_separating(j.sys, z, j.mode, j.opt);
  return is_optimized(j) ? check_separating_optimized(j.sys, z, j.opt) : check_separating(j.sys, z);
}

int cmd_check(const Options& o, std::ostream& out) {
  Job j = prepare(o);
  CheckOutcome r = do_check(j, j.z);
  if (o.json) {
    ordered_json doc;
    doc["command"] = "check";
    doc["z"] = names_json(j.z, *j.sys.ring());
    doc["success"] = r.success;
    doc["weights"] = r.success ? weights_json(r.weights) : ordered_json(nullptr);
    ordered_json trace = ordered_json::array();
    for (const auto& t : r.trace)
      trace.push_back({{"variable", j.sys.ring()->name(t.variable)},
                       {"weight", t.weight.get_str()},
                       {"iteration", t.iteration}});
    doc["trace"] = trace;
    out << doc.dump(2) << "\n";
  } else {
    out << (r.success ? format_weights(r.weights) : std::string("FAIL")) << "\n";
  }
  return r.success ? 0 : 1;
}

/// Nullopt after printing FAIL.
std::optional<SeparatingTuple> separating_tuple(const Job& j, const Options& o, std::ostream& out,
                                                const char* command) {
  auto fail = [&](const std::string& why) -> std::optional<SeparatingTuple> {
    if (o.json) {
      ordered_json doc;
      doc["command"] = command;
      doc["z"] = names_json(j.z, *j.sys.ring());
      doc["success"] = false;
      doc["reason"] = why;
      out << doc.dump(2) << "\n";
    } else {
      out << "FAIL (" << why << ")\n";
    }
    return std::nullopt;
  };
  if (!o.matrix.empty()) {
    if (j.boolean || is_optimized(j))
      throw UsageError("--matrix applies to plain extraction over a non-boolean system");
    TermOrdering sigma = TermOrdering::matrix(parse_integer_matrix(read_file(o.matrix)));
    if (sigma.size() != j.sys.ring()->size()) throw UsageError("matrix has the wrong width");
    try {
      return find_separating_tuple(j.sys, j.z, sigma);
    } catch (const NoRowWithLeadingTerm& e) {
      return fail(e.what());
    }
  }
  CheckOutcome r = do_check(j, j.z);
  if (!r.success) return fail("check failed");
  if (j.boolean) return bool_find_separating_tuple(j.sys, j.z, j.mode, r, j.opt);
  if (is_optimized(j)) return find_separating_tuple_tracked(j.sys, j.z, j.opt);
  return find_separating_tuple(j.sys, j.z, compatible_ordering(r.weights, j.z));
}

int print_tuple(const std::vector<SeparatingEntry>& entries, const TermOrdering& ord,
                const Job& j, const Options& o, const char* command, std::ostream& out) {
  const Ring& ring = *j.sys.ring();
  if (o.json) {
    ordered_json doc;
    doc["command"] = command;
    doc["z"] = names_json(j.z, ring);
    doc["success"] = true;
    ordered_json tuple = ordered_json::array();
    for (const auto& e : entries)
      tuple.push_back({{"variable", ring.name(e.variable)},
                       {"polynomial", format_in_order(e.f, ord)}});
    doc["tuple"] = tuple;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& e : entries) out << ring.name(e.variable) << ": " << format_in_order(e.f, ord) << "\n";
  }
  return 0;
}

int cmd_extract(const Options& o, std::ostream& out) {
  Job j = prepare(o);
  auto sep = separating_tuple(j, o, out, "extract");
  if (!sep) return 1;
  return print_tuple(sep->entries, sep->ordering, j, o, "extract", out);
}

CoherentTuple coherent_of(const Job& j, const SeparatingTuple& sep) {
  return j.boolean ? bool_coherent_tuple(sep) : coherent_tuple(sep, j.z);
}

int cmd_coherent(const Options& o, std::ostream& out) {
  Job j = prepare(o);
  auto sep = separating_tuple(j, o, out, "coherent");
  if (!sep) return 1;
  return print_tuple(coherent_of(j, *sep).entries, sep->ordering, j, o, "coherent", out);
}

int cmd_eliminate(const Options& o, std::ostream& out) {
  Job j = prepare(o);
  auto sep = separating_tuple(j, o, out, "eliminate");
  if (!sep) return 1;
  EliminatedSystem el = eliminate(j.sys, coherent_of(j, *sep));
  if (o.json) {
    ordered_json doc;
    doc["command"] = "eliminate";
    doc["z"] = names_json(j.z, *j.sys.ring());
    doc["success"] = true;
    doc["variables"] = el.system.ring()->names();
    ordered_json gens = ordered_json::array();
    for (const auto& g : el.system.generators()) gens.push_back(g.to_string());
    doc["generators"] = gens;
    out << doc.dump(2) << "\n";
  } else {
    out << format_system(el.system);
  }
  return 0;
}

int cmd_scan(const Options& o, std::ostream& out) {
  Job j = prepare(o, false);
  const Ring& ring = *j.sys.ring();
  std::vector<std::size_t> pool =
      o.pool.empty() ? IndexTuple::all(ring.size()).indices() : IndexTuple::parse(o.pool, ring).indices();
  if (o.augment) throw UsageError("--augment-products is not supported by scan");
  auto entries = scan_subsets(
      pool, o.max_size, ring.size(), [&](const IndexTuple& z) { return do_check(j, z); }, o.jobs);
  std::size_t ok = 0;
  for (const auto& e : entries) ok += e.outcome.success;
  if (o.json) {
    ordered_json doc;
    doc["command"] = "scan";
    ordered_json list = ordered_json::array();
    for (const auto& e : entries)
      list.push_back({{"z", names_json(e.z, ring)},
                      {"success", e.outcome.success},
                      {"weights", e.outcome.success ? weights_json(e.outcome.weights)
                                                    : ordered_json(nullptr)}});
    doc["entries"] = list;
    doc["successes"] = ok;
    doc["total"] = entries.size();
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& e : entries)
      out << "(" << e.z.to_string(ring) << ") "
          << (e.outcome.success ? format_weights(e.outcome.weights) : std::string("FAIL")) << "\n";
    out << "successes: " << ok << "/" << entries.size() << "\n";
  }
  return ok == entries.size() ? 0 : 1;
}

int cmd_points_ideal(const Options& o, std::ostream& out) {
  PointSet pts = PointSet::parse(read_file(o.input));
  if (pts.size() == 0) throw UsageError("point file is empty");
  if (o.degree > pts.dimension()) throw UsageError("--degree exceeds the point dimension");
  std::vector<Polynomial> basis = vanishing_ideal_degree_bounded(pts, o.degree);
  if (o.json) {
    ordered_json doc;
    doc["command"] = "points-ideal";
    doc["dimension"] = pts.dimension();
    doc["points"] = pts.size();
    ordered_json polys = ordered_json::array();
    for (const auto& p : basis) polys.push_back(p.to_string());
    doc["polynomials"] = polys;
    out << doc.dump(2) << "\n";
  } else {
    RingPtr ring = Ring::make(pts.dimension(), Field::F2, {}, true);
    if (!basis.empty()) ring = basis[0].ring();
    out << format_system(PolySystem(ring, basis));
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Separating indeterminates: check, extract and eliminate", "sepvar"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.input, "System file")->required();
    sub->add_flag("--optimized", o.optimized, "Use the optimized check");
    sub->add_flag("--boolean-field-ideal", o.field_ideal,
                  "Boolean systems: optimized check with the field equations appended");
    sub->add_option("--degree-bound", o.bound, "Optimized check: tracked or working");
    sub->add_option("--method", o.method, "Optimized check extension: kernel or echelon");
    sub->add_flag("--json", o.json, "Machine-readable output");
  };
  auto add_z = [&](CLI::App* sub) {
    sub->add_option("--z", o.z, "Comma-separated indeterminates, e.g. x4,x5,x7")->required();
    sub->add_flag("--augment-products", o.augment, "Boolean systems: add z_i*g_j first");
  };

  CLI::App* check = app.add_subcommand("check", "Check whether Z is separating");
  add_common(check);
  add_z(check);
  std::vector<CLI::App*> tuple_cmds = {
      app.add_subcommand("extract", "Print a Z-separating tuple"),
      app.add_subcommand("coherent", "Print a coherently Z-separating tuple"),
      app.add_subcommand("eliminate", "Print generators of the elimination ideal")};
  for (auto* sub : tuple_cmds) {
    add_common(sub);
    add_z(sub);
    sub->add_option("--matrix", o.matrix, "Integer matrix file for the term ordering");
  }
  CLI::App* scan = app.add_subcommand("scan", "Check every subset of a pool");
  add_common(scan);
  scan->add_option("--pool", o.pool, "Comma-separated indeterminates (default: all)");
  scan->add_option("--max-size", o.max_size, "Largest subset size")->required();
  scan->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  CLI::App* points = app.add_subcommand("points-ideal", "Vanishing polynomials of a point set");
  points->add_option("file", o.input, "Point file")->required();
  points->add_option("--degree", o.degree, "Degree bound")->required();
  points->add_flag("--json", o.json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (tuple_cmds[0]->parsed()) return cmd_extract(o, out);
    if (tuple_cmds[1]->parsed()) return cmd_coherent(o, out);
    if (tuple_cmds[2]->parsed()) return cmd_eliminate(o, out);
    if (scan->parsed()) return cmd_scan(o, out);
    return cmd_points_ideal(o, out);
  } catch (const ParseError& e) {
    err << "error: " << o.input << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace sepvar
