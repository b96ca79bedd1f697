#include "bpair/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpair/basic_pair.hpp"
#include "bpair/communication.hpp"
#include "bpair/errors.hpp"
#include "bpair/modelcheck.hpp"
#include "bpair/rel_communication.hpp"
#include "bpair/text_format.hpp"
#include "bpair/topology.hpp"

namespace bpair::cli {

namespace {

using nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
auto parse_file(const std::string& path, F&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

BasicPair load_pair(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return parse_basic_pair(t); });
}

Rel load_relation(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return parse_relation(t); });
}

FiniteTopology load_topology(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return parse_topology(t); });
}

Subset subset_arg(const std::string& literal, std::size_t carrier) {
  try {
    return parse_subset_literal(literal, carrier);
  } catch (const ParseError& e) {
    throw InputError("subset literal '" + literal + "': column " + std::to_string(e.column()) +
                     ": " + e.message());
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string bracketed(const Rel& r) { return "[" + describe(r) + "]"; }

struct Options {
  std::string format = "text";
  bool structured() const { return format == "structured"; }
};

// ---------------------------------------------------------------------------

int cmd_classify(const Options& o, const std::string& pair_path, const std::string& literal,
                 std::ostream& out) {
  const BasicPair bp = load_pair(pair_path);
  const Subset d = subset_arg(literal, bp.points());
  const SubsetClassification c = classify_subset(bp, d);
  if (o.structured()) {
    ordered_json j;
    j["subset"] = d.to_string();
    j["open"] = c.open;
    j["closed"] = c.closed;
    j["clopen"] = c.clopen;
    j["box"] = c.box.to_string();
    j["diamond"] = c.diamond.to_string();
    j["arrow_right"] = c.arrow_right.to_string();
    ordered_json comm;
    for (Strategy s : kAllStrategies) comm[std::string(strategy_name(s))] = c.communicable_under(s);
    j["communicable"] = std::move(comm);
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "subset: " << d.to_string() << '\n'
      << "open: " << yes_no(c.open) << '\n'
      << "closed: " << yes_no(c.closed) << '\n'
      << "clopen: " << yes_no(c.clopen) << '\n'
      << "box: " << c.box.to_string() << '\n'
      << "diamond: " << c.diamond.to_string() << '\n'
      << "arrow_right: " << c.arrow_right.to_string() << '\n';
  for (Strategy s : kAllStrategies) {
    out << strategy_name(s) << ": " << yes_no(c.communicable_under(s)) << '\n';
  }
  return kExitOk;
}

int cmd_axioms(const Options& o, const std::string& pair_path, std::ostream& out) {
  const BasicPair bp = load_pair(pair_path);
  const bool b1 = satisfies_b1(bp), b2 = satisfies_b2(bp), t2 = is_hausdorff(bp);
  if (o.structured()) {
    out << ordered_json{{"B1", b1}, {"B2", b2}, {"T2", t2}}.dump() << '\n';
  } else {
    out << "B1: " << yes_no(b1) << "\nB2: " << yes_no(b2) << "\nT2: " << yes_no(t2) << '\n';
  }
  return kExitOk;
}

int cmd_communicable(const Options& o, const std::string& pair_path,
                     const std::vector<std::string>& only, std::ostream& out) {
  const BasicPair bp = load_pair(pair_path);
  if (bp.points() > 16) throw InputError("communicable: |X| > 16 is too many subsets to list");
  std::vector<Strategy> strategies;
  for (const auto& name : only) {
    auto s = parse_strategy(name);
    if (!s) throw InputError("unknown strategy '" + name + "'");
    strategies.push_back(*s);
  }
  if (strategies.empty()) strategies.assign(kAllStrategies.begin(), kAllStrategies.end());

  ordered_json j;
  for (Strategy s : strategies) {
    std::vector<std::string> found;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bp.points()); ++code) {
      const Subset d = Subset::from_code(bp.points(), code);
      if (is_communicable(bp, s, d)) found.push_back(d.to_string());
    }
    if (o.structured()) {
      j[std::string(strategy_name(s))] = found;
    } else {
      out << strategy_name(s) << ":";
      for (const auto& f : found) out << ' ' << f;
      out << '\n';
    }
  }
  if (o.structured()) out << j.dump() << '\n';
  return kExitOk;
}

PairedSetting load_setting(const std::string& x_path, const std::string& y_path) {
  return PairedSetting{load_pair(x_path), load_pair(y_path)};
}

void require_shape(const Rel& r, std::size_t rows, std::size_t cols, const char* what) {
  if (r.source_size() != rows || r.target_size() != cols) {
    throw InputError(std::string(what) + " relation is " + std::to_string(r.source_size()) +
                     "x" + std::to_string(r.target_size()) + ", expected " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
}

int cmd_continuity(const Options& o, const std::string& x_path, const std::string& y_path,
                   const std::string& rel_path, std::ostream& out) {
  const PairedSetting ps = load_setting(x_path, y_path);
  const Rel r = load_relation(rel_path);
  require_shape(r, ps.source.points(), ps.target.points(), "X→Y");
  const bool continuous = is_continuous(ps, r);
  const auto witness = continuity_witness(ps, r);
  const Rel s = sigma(ps, r);
  const Rel round = rho(ps, s);
  const bool communicable = is_rel_communicable(ps, r);
  if (o.structured()) {
    ordered_json j;
    j["continuous"] = continuous;
    if (witness) j["witness"] = {{"b", witness->index}, {"x", witness->point}};
    j["sigma"] = describe(s);
    j["rho_sigma"] = describe(round);
    j["communicable"] = communicable;
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "continuous: " << yes_no(continuous) << '\n';
  if (witness) out << "witness: b=" << witness->index << " x=" << witness->point << '\n';
  out << "sigma: " << bracketed(s) << '\n'
      << "rho_sigma: " << bracketed(round) << '\n'
      << "communicable: " << yes_no(communicable) << '\n';
  return kExitOk;
}

int cmd_sigma(const std::string& x_path, const std::string& y_path, const std::string& rel_path,
              std::ostream& out) {
  const PairedSetting ps = load_setting(x_path, y_path);
  const Rel r = load_relation(rel_path);
  require_shape(r, ps.source.points(), ps.target.points(), "X→Y");
  out << print_relation(sigma(ps, r));
  return kExitOk;
}

int cmd_rho(const std::string& x_path, const std::string& y_path, const std::string& rel_path,
            std::ostream& out) {
  const PairedSetting ps = load_setting(x_path, y_path);
  const Rel s = load_relation(rel_path);
  require_shape(s, ps.source.indexes(), ps.target.indexes(), "S→T");
  out << print_relation(rho(ps, s));
  return kExitOk;
}

struct ModelcheckArgs {
  std::vector<std::string> theorems;
  std::size_t max_x = 3;
  std::size_t max_s = 3;
  std::optional<std::size_t> max_y;
  std::optional<std::size_t> max_t;
  std::uint64_t seed = EnumSpec{}.seed;
  std::size_t samples = EnumSpec{}.samples;
  bool serial = false;
  std::size_t list = 10;
};

int cmd_modelcheck(const Options& o, const ModelcheckArgs& a, std::ostream& out) {
  EnumSpec spec;
  spec.max_x = a.max_x;
  spec.max_s = a.max_s;
  spec.max_y = a.max_y;
  spec.max_t = a.max_t;
  spec.seed = a.seed;
  spec.samples = a.samples;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::vector<std::string> ids = a.theorems;
  if (ids.empty()) {
    for (const auto& t : registered_theorems()) ids.emplace_back(t.id);
  }
  const Execution exec = a.serial ? Execution::serial : Execution::parallel;
  std::size_t passed = 0;
  for (const auto& id : ids) {
    CheckReport r;
    try {
      r = check_theorem(id, spec, exec);
    } catch (const UnknownTheorem& e) {
      throw InputError(e.what());
    }
    if (r.passed()) ++passed;
    out << (o.structured() ? format_report_structured(r, a.list) + "\n"
                           : format_report_text(r, a.list));
  }
  if (!o.structured()) out << "suite: " << passed << "/" << ids.size() << " passed\n";
  return passed == ids.size() ? kExitOk : kExitCheckFailed;
}

FiniteTopology preset_topology(const std::string& name) {
  const auto colon = name.find(':');
  const std::string kind = name.substr(0, colon);
  std::size_t n = 0;
  if (colon != std::string::npos) {
    try {
      n = std::stoul(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("bad preset size in '" + name + "'");
    }
  }
  if (kind == "sierpinski" && colon == std::string::npos) return sierpinski_topology();
  if (kind == "discrete" && colon != std::string::npos && n <= 6) return discrete_topology(n);
  if (kind == "indiscrete" && colon != std::string::npos) return indiscrete_topology(n);
  throw InputError("unknown preset '" + name +
                   "' (use sierpinski, discrete:<n> or indiscrete:<n>)");
}

FiniteTopology topology_arg(const std::string& path, const std::string& preset) {
  if (!preset.empty()) return preset_topology(preset);
  if (path.empty()) throw InputError("give a topology file or --preset");
  FiniteTopology t = load_topology(path);
  try {
    t.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
  return t;
}

int cmd_from_topology(const std::string& path, const std::string& preset, std::ostream& out) {
  const FiniteTopology t = topology_arg(path, preset);
  BasicPairDocument doc{from_topology(t), {}, {}};
  out << print_basic_pair_document(doc);
  return kExitOk;
}

int cmd_remark(const Options& o, const std::string& path, const std::string& preset,
               std::optional<std::size_t> all, std::size_t list, std::ostream& out) {
  std::vector<FiniteTopology> topologies;
  if (all) {
    if (*all > 4) throw InputError("--all supports ground sets of at most 4 points");
    topologies = enumerate_topologies(*all);
  } else {
    topologies.push_back(topology_arg(path, preset));
  }
  bool ok = true;
  std::vector<std::size_t> totals(kRemarkClauseCount, 0);
  for (const auto& t : topologies) {
    const CheckReport r = verify_remark(t);
    ok = ok && r.passed();
    const auto counts = remark_violations_by_clause(r);
    for (std::size_t c = 0; c < counts.size(); ++c) totals[c] += counts[c];
    out << (o.structured() ? format_report_structured(r, list) + "\n"
                           : format_report_text(r, list));
  }
  if (!o.structured()) {
    out << "topologies: " << topologies.size() << '\n';
    for (std::size_t c = 0; c < totals.size(); ++c) {
      out << "  " << remark_clause_name(static_cast<RemarkClause>(c)) << ": " << totals[c]
          << " violations\n";
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite basic pairs: subset and relation communicability, model checking"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string pair_path, subset_literal, x_path, y_path, rel_path, topo_path, preset;
  std::vector<std::string> strategies;
  ModelcheckArgs mc;
  std::optional<std::size_t> remark_all;
  std::size_t remark_list = 10;

  auto* classify = app.add_subcommand("classify", "Open/closed status and all nine strategies");
  classify->add_option("pair", pair_path, "Basic pair file")->required();
  classify->add_option("subset", subset_literal, "Subset of X, e.g. {0,2}")->required();

  auto* axioms = app.add_subcommand("axioms", "B1, B2 and Hausdorff verdicts");
  axioms->add_option("pair", pair_path, "Basic pair file")->required();

  auto* communicable = app.add_subcommand("communicable", "List communicable subsets");
  communicable->add_option("pair", pair_path, "Basic pair file")->required();
  communicable->add_option("--strategy", strategies, "Restrict to these strategies");

  auto add_setting = [&](CLI::App* sub, const char* rel_help) {
    sub->add_option("source", x_path, "Source basic pair (X, ⊩, S)")->required();
    sub->add_option("target", y_path, "Target basic pair (Y, ⊩, T)")->required();
    sub->add_option("relation", rel_path, rel_help)->required();
  };
  auto* continuity = app.add_subcommand("continuity", "Continuity and (σ,ρ)-communicability");
  add_setting(continuity, "Relation file X→Y");
  auto* sigma_cmd = app.add_subcommand("sigma", "Print σ(r) for r: X→Y");
  add_setting(sigma_cmd, "Relation file X→Y");
  auto* rho_cmd = app.add_subcommand("rho", "Print ρ(s) for s: S→T");
  add_setting(rho_cmd, "Relation file S→T");

  auto* modelcheck = app.add_subcommand("modelcheck", "Run registered theorem checks");
  modelcheck->add_option("--theorem", mc.theorems, "Theorem id (repeatable)");
  modelcheck->add_option("--max-x", mc.max_x, "Largest |X|");
  modelcheck->add_option("--max-s", mc.max_s, "Largest |S|");
  modelcheck->add_option("--max-y", mc.max_y, "Largest |Y| for relation checks");
  modelcheck->add_option("--max-t", mc.max_t, "Largest |T| for relation checks");
  modelcheck->add_option("--seed", mc.seed, "Seed for sampled relation instances");
  modelcheck->add_option("--samples", mc.samples, "Number of sampled size-3 instances");
  modelcheck->add_flag("--serial", mc.serial, "Use the single-threaded reference sweep");
  modelcheck->add_option("--list", mc.list, "Counterexamples to print per check");

  auto* from_topo = app.add_subcommand("from-topology", "Basic pair (Ω, ∈, 𝒯) of a topology");
  from_topo->add_option("topology", topo_path, "Topology file");
  from_topo->add_option("--preset", preset, "sierpinski, discrete:<n> or indiscrete:<n>");

  auto* remark = app.add_subcommand("remark", "Check the fixed-point/topology correspondence");
  remark->add_option("topology", topo_path, "Topology file");
  remark->add_option("--preset", preset, "sierpinski, discrete:<n> or indiscrete:<n>");
  remark->add_option("--all", remark_all, "Check every topology on this many points");
  remark->add_option("--list", remark_list, "Violations to print per topology");

  std::vector<const char*> argv;
  if (args.empty()) argv.push_back("bpair");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*classify) return cmd_classify(opts, pair_path, subset_literal, out);
    if (*axioms) return cmd_axioms(opts, pair_path, out);
    if (*communicable) return cmd_communicable(opts, pair_path, strategies, out);
    if (*continuity) return cmd_continuity(opts, x_path, y_path, rel_path, out);
    if (*sigma_cmd) return cmd_sigma(x_path, y_path, rel_path, out);
    if (*rho_cmd) return cmd_rho(x_path, y_path, rel_path, out);
    if (*modelcheck) return cmd_modelcheck(opts, mc, out);
    if (*from_topo) return cmd_from_topology(topo_path, preset, out);
    if (*remark) return cmd_remark(opts, topo_path, preset, remark_all, remark_list, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace bpair::cli
