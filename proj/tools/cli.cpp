#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "coalg/io.hpp"
#include "coalg/laws.hpp"

namespace coalg::cli {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ObjectMismatch:
    case ErrorKind::FunctorMismatch:
    case ErrorKind::CodomainMismatch:
      return kMismatch;
    case ErrorKind::NonDeterministicProduct:
    case ErrorKind::Unsupported:
    case ErrorKind::EnumerationLimitExceeded:
    case ErrorKind::TrivialFunctor:
      return kUnsupported;
    default:
      return kInvalid;
  }
}

namespace {

using io::Json;

enum class Format { Text, Machine };

// A report is kept twice: as an object for machine output and as lines in
// insertion order for people.
struct Report {
  Json machine = Json::object();
  std::vector<std::string> lines;

  void add(const std::string& key, const std::string& label, const Json& value) {
    machine[key] = value;
    lines.push_back(label + ": " + (value.is_string() ? value.get<std::string>() : io::dump(value)));
  }
};

struct Options {
  std::string workspace;
  std::optional<std::size_t> limit;
  std::string format = "text";
};

std::size_t enumeration_limit(const Options& o) {
  if (o.limit) return *o.limit;
  if (const char* env = std::getenv(kLimitVariable)) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::ValidationError,
                std::string(kLimitVariable) + " is not a positive integer: '" + env + "'");
  }
  return kDefaultOpenSetLimit;
}

io::Workspace load_workspace(const Options& o) {
  if (o.workspace.empty()) return {};
  const std::filesystem::path p(o.workspace);
  if (std::filesystem::is_directory(p)) return io::load_directory(p);
  return io::load_file(p);
}

ElementSet parse_set(const Coalgebra& x, const std::string& text) {
  ElementSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (!x.contains(item)) throw Error(ErrorKind::UnknownElement, "'" + item + "' is not in the carrier");
    out.insert(item);
  }
  return out;
}

std::string braces(const ElementSet& s) {
  std::string out = "{";
  for (const auto& e : s) out += (out.size() > 1 ? "," : "") + e;
  return out + "}";
}

Json set_family(const std::vector<ElementSet>& family) {
  Json out = Json::array();
  for (const auto& s : family) out.push_back(io::to_json(s));
  return out;
}

PartialMorphism resolve_partial(const io::Workspace& ws, const std::string& name) {
  if (ws.partial_morphisms.count(name)) return ws.partial_morphism(name);
  if (ws.morphisms.count(name)) return embed_total(ws.morphism(name));
  throw Error(ErrorKind::UnknownBinding, "no morphism or partial morphism named '" + name + "'");
}

Morphism resolve_total(const io::Workspace& ws, const std::string& name) {
  if (ws.morphisms.count(name)) return ws.morphism(name);
  const auto p = resolve_partial(ws, name);
  if (!is_total(p)) throw Error(ErrorKind::NotTotal, "'" + name + "' is not total");
  return {p.src(), p.dst(), p.map()};
}

void emit(const Report& r, Format f, std::ostream& out) {
  if (f == Format::Machine) {
    out << io::dump(r.machine) << '\n';
    return;
  }
  for (const auto& l : r.lines) out << l << '\n';
}

// ---------------------------------------------------------------------------

struct TopologyArgs {
  std::string name;
  bool opens = false, components = false, irreducible = false, hausdorff = false, connected = false;
  std::vector<std::string> closure, interior, dense;
};

Report cmd_topology(const io::Workspace& ws, const TopologyArgs& a, std::size_t limit) {
  const auto& x = ws.coalgebra(a.name);
  const bool all = !a.opens && !a.components && !a.irreducible && !a.hausdorff && !a.connected &&
                   a.closure.empty() && a.interior.empty() && a.dense.empty();
  Report r;
  if (all || a.opens) r.add("opens", "opens", set_family(open_sets(x, limit)));
  for (const auto& s : a.closure) {
    const auto set = parse_set(x, s);
    r.machine["closure"][io::dump(io::to_json(set))] = io::to_json(closure(x, set));
    r.lines.push_back("closure " + braces(set) + ": " + io::dump(io::to_json(closure(x, set))));
  }
  for (const auto& s : a.interior) {
    const auto set = parse_set(x, s);
    r.machine["interior"][io::dump(io::to_json(set))] = io::to_json(interior(x, set));
    r.lines.push_back("interior " + braces(set) + ": " + io::dump(io::to_json(interior(x, set))));
  }
  for (const auto& s : a.dense) {
    const auto set = parse_set(x, s);
    r.machine["dense"][io::dump(io::to_json(set))] = is_dense(x, set);
    r.lines.push_back("dense " + braces(set) + ": " + (is_dense(x, set) ? "true" : "false"));
  }
  if (all || a.components) r.add("components", "components", set_family(connected_components(x)));
  if (all || a.connected) r.add("connected", "connected", is_connected(x));
  if (all || a.irreducible) r.add("irreducible", "irreducible", is_irreducible(x));
  if (all || a.hausdorff) r.add("hausdorff", "hausdorff", is_hausdorff(x));
  return r;
}

Report cmd_bisim(const io::Workspace& ws, const std::string& a, const std::string& b) {
  const auto rel = largest_bisimulation(ws.coalgebra(a), ws.coalgebra(b));
  Report r;
  r.add("relation", "largest bisimulation", io::to_json(rel));
  r.add("size", "pairs", rel.size());
  return r;
}

Report cmd_product(const io::Workspace& ws, const std::string& a, const std::string& b) {
  const auto w = product(ws.coalgebra(a), ws.coalgebra(b));
  Report r;
  r.add("total", "product", io::to_json(w.total));
  r.add("p0", "p0", Json(w.p0.map));
  r.add("p1", "p1", Json(w.p1.map));
  return r;
}

Report cmd_compose(const io::Workspace& ws, const std::string& g, const std::string& f) {
  const auto h = compose(resolve_partial(ws, g), resolve_partial(ws, f));
  Report r;
  r.add("dom", "dom", io::to_json(h.domain()));
  r.add("map", "map", Json(h.map()));
  r.add("total", "total", is_total(h));
  r.add("weakly_total", "weakly total", is_weakly_total(h));
  r.machine["result"] = io::to_json(h);
  return r;
}

Report cmd_iterate(const io::Workspace& ws, const std::string& f, const std::string& u) {
  const auto m = resolve_total(ws, f);
  const auto it = iterate(m, Subcoalgebra(m.src, parse_set(m.src, u)));
  Report r;
  r.add("dom", "dom", io::to_json(it.domain()));
  r.add("map", "map", Json(it.map()));
  r.machine["result"] = io::to_json(it);
  return r;
}

Report cmd_turing(const io::Workspace& ws, const std::string& name, const std::vector<std::string>& traces) {
  const auto& d = ws.datum(name);
  const auto tur = turing_development(d);
  Report r;
  r.add("dom", "dom", io::to_json(tur.domain()));
  r.add("map", "map", Json(tur.map()));
  r.machine["result"] = io::to_json(tur);
  for (const auto& x : traces) {
    const auto t = run_trace(d, x);
    r.machine["traces"][x] = io::to_json(t);
    std::string line = "trace " + x + ": visited " + Json(t.visited).dump();
    if (t.halted) line += ", halted " + *t.halted;
    if (t.cycle_start) line += ", diverged (cycle from step " + std::to_string(*t.cycle_start) + ")";
    r.lines.push_back(line);
  }
  return r;
}

int cmd_laws(const std::string& suite, std::uint64_t seed, std::optional<std::size_t> trials,
             Format f, std::ostream& out) {
  std::vector<std::string> suites;
  if (suite == "all") suites = laws::suite_names();
  else suites.push_back(suite);
  bool ok = true;
  Json machine = Json::array();
  for (const auto& s : suites) {
    const auto rep = laws::run_suite(s, seed, trials);
    ok = ok && rep.ok();
    Json cases = Json::array();
    for (const auto& c : rep.cases) {
      Json jc = {{"name", c.name}, {"checks", c.checks}, {"failures", c.failures}, {"ok", c.ok()}};
      if (!c.ok()) jc["first_failure"] = c.checks ? c.first_failure : "no checks ran";
      cases.push_back(jc);
    }
    machine.push_back({{"suite", s},
                       {"seed", seed},
                       {"trials", rep.trials},
                       {"passed", rep.passed()},
                       {"total", rep.cases.size()},
                       {"cases", cases}});
    if (f == Format::Text) {
      out << "suite " << s << " (seed " << seed << ", trials " << rep.trials << ")\n";
      for (const auto& c : rep.cases) {
        out << "  " << (c.ok() ? "PASS " : "FAIL ") << c.name << " [" << c.checks << " checks]";
        if (!c.ok()) out << ": " << (c.checks ? c.first_failure : "no checks ran");
        out << '\n';
      }
      out << s << ": " << rep.passed() << "/" << rep.cases.size() << " cases passed\n";
    }
  }
  if (f == Format::Machine) out << io::dump(suites.size() == 1 ? machine[0] : machine) << '\n';
  return ok ? kOk : kLawFailure;
}

int cmd_check(const std::vector<std::string>& paths, Format f, std::ostream& out) {
  std::vector<std::filesystem::path> files;
  for (const auto& p : paths) {
    if (std::filesystem::is_directory(p)) {
      std::vector<std::filesystem::path> found;
      for (const auto& e : std::filesystem::directory_iterator(p))
        if (e.path().extension() == ".json") found.push_back(e.path());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.emplace_back(p);
    }
  }
  bool ok = true;
  Json machine = Json::array();
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::ParseError, file.string() + ": cannot open");
    std::stringstream buf;
    buf << in.rdbuf();
    std::vector<io::CheckEntry> entries;
    try {
      entries = io::check_document(buf.str(), file.string());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ParseError) throw;
      entries.push_back({"document", file.filename().string(), false, e.what()});
    }
    for (const auto& e : entries) {
      ok = ok && e.ok;
      machine.push_back({{"file", file.string()},
                         {"section", e.section},
                         {"name", e.name},
                         {"ok", e.ok},
                         {"message", e.message}});
      if (f == Format::Text) {
        out << (e.ok ? "ok   " : "FAIL ") << file.string() << ": " << e.section << "." << e.name;
        if (!e.ok) out << ": " << e.message;
        out << '\n';
      }
    }
  }
  if (f == Format::Machine) out << io::dump({{"ok", ok}, {"entries", machine}}) << '\n';
  return ok ? kOk : kInvalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite coalgebras, partial morphisms and Turing developments", "coalg"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--workspace", opt.workspace, "Directory (or single file) of documents to load");
  app.add_option("--limit", opt.limit, "Enumeration limit")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  std::vector<std::string> check_paths;
  auto* check = app.add_subcommand("check", "Validate every binding of the given documents");
  check->add_option("paths", check_paths, "Files or directories")->required();

  TopologyArgs topo;
  auto* topology = app.add_subcommand("topology", "Open sets and topological properties of a coalgebra");
  topology->add_option("coalgebra", topo.name)->required();
  topology->add_flag("--opens", topo.opens, "List all subcoalgebras");
  topology->add_option("--closure", topo.closure, "Closure of a comma-separated set");
  topology->add_option("--interior", topo.interior, "Interior of a comma-separated set");
  topology->add_option("--dense", topo.dense, "Whether a comma-separated set is dense");
  topology->add_flag("--components", topo.components, "Connected components");
  topology->add_flag("--connected", topo.connected);
  topology->add_flag("--irreducible", topo.irreducible);
  topology->add_flag("--hausdorff", topo.hausdorff);

  std::string lhs, rhs;
  auto* bisim = app.add_subcommand("bisim", "Largest bisimulation between two coalgebras");
  bisim->add_option("X", lhs)->required();
  bisim->add_option("Y", rhs)->required();
  auto* prod = app.add_subcommand("product", "Product of two coalgebras");
  prod->add_option("X", lhs)->required();
  prod->add_option("Y", rhs)->required();
  auto* comp = app.add_subcommand("compose", "Composite g f of (partial) morphisms");
  comp->add_option("g", lhs)->required();
  comp->add_option("f", rhs)->required();
  auto* iter = app.add_subcommand("iterate", "Iterate an endomorphism into a fixed subcoalgebra");
  iter->add_option("f", lhs)->required();
  iter->add_option("U", rhs, "Comma-separated subcoalgebra fixed by f")->required();

  std::vector<std::string> traces;
  auto* turing = app.add_subcommand("turing", "Turing development of a datum");
  turing->add_option("datum", lhs)->required();
  turing->add_option("--trace", traces, "Print the run from this input");

  std::string suite = "all";
  std::uint64_t seed = 7;
  std::optional<std::size_t> trials;
  auto* lawcmd = app.add_subcommand("laws", "Run a law suite");
  lawcmd->add_option("--suite", suite, "Suite name, or all");
  lawcmd->add_option("--seed", seed);
  lawcmd->add_option("--trials", trials)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << '\n';
    return kInvalid;
  }

  const Format fmt = opt.format == "machine" ? Format::Machine : Format::Text;
  try {
    if (*check) return cmd_check(check_paths, fmt, out);
    if (*lawcmd) return cmd_laws(suite, seed, trials, fmt, out);
    const auto ws = load_workspace(opt);
    Report r;
    if (*topology) r = cmd_topology(ws, topo, enumeration_limit(opt));
    else if (*bisim) r = cmd_bisim(ws, lhs, rhs);
    else if (*prod) r = cmd_product(ws, lhs, rhs);
    else if (*comp) r = cmd_compose(ws, lhs, rhs);
    else if (*iter) r = cmd_iterate(ws, lhs, rhs);
    else if (*turing) r = cmd_turing(ws, lhs, traces);
    emit(r, fmt, out);
    return kOk;
  } catch (const Error& e) {
    if (fmt == Format::Machine)
      err << io::dump({{"error", std::string(e.name())}, {"message", e.what()}}) << '\n';
    else
      err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace coalg::cli
