#include "norminf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "norminf/check_suite.hpp"
#include "norminf/enumerate.hpp"
#include "norminf/errors.hpp"
#include "norminf/serialize.hpp"
#include "norminf/symmetry.hpp"
#include "norminf/transfer_system.hpp"

namespace norminf {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a mathematical check fails; carries the report text.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string group;
  std::string in;
  std::string hex;
  bool symbolic = false;
  int threads = 0;
};

std::string read_input(const std::string& in) {
  if (!in.empty() && in.front() == '{') return in;
  std::ostringstream buf;
  if (in == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(in);
  if (!file) throw IoError("cannot read " + in);
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) throw IoError("cannot write " + path);
}

Naming naming(const Common& c) { return c.symbolic ? Naming::symbolic : Naming::concrete; }

LatticePtr lattice_from(const Common& c) {
  if (c.group.empty()) throw InvalidArgument("--group is required");
  return Lattice::build(GroupSpec::parse(c.group));
}

// Loads the system given by --in (JSON) or --hex. --group is optional with
// --in when the document names its group.
ParsedSystem load_system(const Common& c) {
  if (!c.hex.empty()) {
    auto lattice = lattice_from(c);
    require_pair_capacity(*lattice);
    return ParsedSystem{lattice, from_hex(*lattice, c.hex)};
  }
  if (c.in.empty()) throw InvalidArgument("an input system is required (--in or --hex)");
  LatticePtr expected = c.group.empty() ? nullptr : lattice_from(c);
  return parse_system_json(read_input(c.in), expected);
}

void require_transfer_system(const ParsedSystem& s, const Common& c) {
  if (auto v = check(*s.lattice, s.members)) {
    throw CheckFailed("input is not a transfer system: " + v->describe(*s.lattice, naming(c)));
  }
}

void add_common(CLI::App* cmd, Common& c, bool needs_group, bool takes_input) {
  auto* g = cmd->add_option("--group,-g", c.group, "group spec, e.g. 2,3,5 or 2^3 or 2^2,3");
  if (needs_group) g->required();
  if (takes_input) {
    cmd->add_option("--in,-i", c.in, "system JSON: a path, '-' for stdin, or inline text");
  }
  cmd->add_flag("--symbolic", c.symbolic, "name subgroups C_{pq}-style instead of C_6");
  cmd->add_option("--threads", c.threads, "worker threads (NORMINF_THREADS caps this)");
}

int cmd_enumerate(const Common& c, const std::string& engine, const std::string& emit,
                  bool by_comp, bool csv, const std::string& out_path, std::size_t ceiling,
                  std::ostream& out) {
  auto lattice = lattice_from(c);
  EnumerationOptions options;
  options.engine = engine == "brute" ? Engine::brute : Engine::dfs;
  options.threads = c.threads;
  options.brute_ceiling = ceiling;

  std::optional<std::vector<PairSet>> systems;
  std::uint64_t total = 0;
  std::optional<std::vector<std::uint64_t>> comp;
  if (emit != "none") {
    systems = collect_systems(*lattice, options);
    total = systems->size();
    if (by_comp) {
      comp = std::vector<std::uint64_t>(lattice->rank() + 1, 0);
      for (const auto& s : *systems) ++(*comp)[static_cast<std::size_t>(comp_index(*lattice, s).d)];
    }
  } else if (by_comp) {
    auto r = count_by_comp(*lattice, options);
    total = r.total;
    comp = r.by_comp;
  } else {
    total = count_systems(*lattice, options);
  }

  out << total << '\n';
  if (comp) {
    if (csv) {
      out << comp_table_csv(*comp);
    } else {
      out << "d  count\n";
      for (std::size_t d = 0; d < comp->size(); ++d) out << d << "  " << (*comp)[d] << '\n';
    }
  }
  if (systems) {
    std::string text;
    if (emit == "hex") {
      std::ostringstream buf;
      write_catalogue(buf, *lattice, *systems, by_comp);
      text = buf.str();
    } else {
      text = systems_to_json(*lattice, *systems).dump() + "\n";
    }
    write_output(out_path, text, out);
  }
  return kExitOk;
}

int cmd_decompose(const Common& c, std::ostream& out) {
  auto s = load_system(c);
  require_transfer_system(s, c);
  const Lattice& l = *s.lattice;
  CompClass cc = comp_index(l, s.members);
  PairSet core;
  s.members.for_each([&](std::size_t i) {
    if (l.leq(cc.g_zero, l.pair(i).source)) core.set(i);
  });
  nlohmann::ordered_json doc{{"group", l.spec().to_string()},
                     {"g_zero", l.subgroup(cc.g_zero).exponents},
                     {"g_zero_name", l.name(cc.g_zero, naming(c))},
                     {"d", cc.d},
                     {"support", support_check(l, s.members)},
                     {"core", to_json(l, core)["arrows"]}};
  out << doc.dump() << '\n';
  return kExitOk;
}

int cmd_verify(const Common& c, std::size_t samples, std::uint64_t seed, std::ostream& out) {
  auto lattice = lattice_from(c);
  if (!lattice->squarefree()) {
    throw UnsupportedOperation("verify needs a squarefree group, got " + lattice->spec().to_string());
  }
  if (lattice->rank() > 4) throw LimitExceeded("verify supports at most four primes");
  std::vector<PairSet> systems;
  std::string scope;
  if (lattice->rank() <= 3) {
    EnumerationOptions o;
    o.threads = c.threads;
    systems = collect_systems(*lattice, o);
    scope = "exhaustive";
  } else {
    systems = sample_systems(*lattice, samples, seed);
    scope = "sampled, seed " + std::to_string(seed);
  }
  auto inv = verify_involution(*lattice, systems, c.threads);
  auto sup = support_sweep(*lattice, systems, c.threads);
  out << "systems " << inv.systems << " (" << scope << ")\n";
  out << "involution " << (inv.ok ? "ok" : "FAILED: " + *inv.counterexample) << '\n';
  out << "support " << (sup.ok ? "ok" : "FAILED: " + *sup.counterexample) << '\n';
  if (lattice->rank() <= 3) {
    bool symmetric = true;
    for (std::size_t d = 0; d < inv.by_comp.size(); ++d) {
      symmetric = symmetric && inv.by_comp[d] == inv.by_comp[inv.by_comp.size() - 1 - d];
    }
    std::ostringstream table;
    for (std::size_t d = 0; d < inv.by_comp.size(); ++d) table << (d ? "," : "") << inv.by_comp[d];
    out << "comp " << table.str() << (symmetric ? " symmetric" : " NOT symmetric") << '\n';
    if (!symmetric) return kExitCheckFailed;
  }
  return inv.ok && sup.ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and analyse transfer systems on cyclic subgroup lattices", "norminf"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Common c;

  std::string engine = "dfs", emit = "none", out_path;
  bool by_comp = false, csv = false;
  std::size_t ceiling = kDefaultBruteCeiling;
  auto* enumerate = app.add_subcommand("enumerate", "count (and optionally list) transfer systems");
  add_common(enumerate, c, true, false);
  enumerate->add_option("--engine", engine, "brute or dfs")->check(CLI::IsMember({"brute", "dfs"}));
  enumerate->add_option("--emit", emit, "json, hex or none")
      ->check(CLI::IsMember({"json", "hex", "none"}));
  enumerate->add_flag("--by-comp", by_comp, "print counts per Comp class");
  enumerate->add_flag("--csv", csv, "print the Comp table as CSV");
  enumerate->add_option("--out,-o", out_path, "write emitted systems here instead of stdout");
  enumerate->add_option("--ceiling", ceiling, "brute-force pair ceiling");

  auto* closure_cmd = app.add_subcommand("closure", "smallest transfer system containing the input");
  add_common(closure_cmd, c, false, true);

  auto* check_system = app.add_subcommand("check-system", "check the transfer-system axioms");
  add_common(check_system, c, false, true);
  check_system->add_option("--hex", c.hex, "system as a hex bit vector (needs --group)");

  auto* phi_cmd = app.add_subcommand("phi", "apply the Comp_d <-> Comp_{n-d} involution");
  add_common(phi_cmd, c, false, true);
  phi_cmd->add_option("--hex", c.hex, "system as a hex bit vector (needs --group)");

  auto* decompose = app.add_subcommand("decompose", "G0, Comp index and support property");
  add_common(decompose, c, false, true);
  decompose->add_option("--hex", c.hex, "system as a hex bit vector (needs --group)");

  std::size_t samples = 2000;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "check the involution and support properties");
  add_common(verify, c, true, false);
  verify->add_option("--samples", samples, "sample size for four primes");
  verify->add_option("--seed", seed, "sampling seed");

  auto* export_dot = app.add_subcommand("export-dot", "render a system as a Graphviz digraph");
  add_common(export_dot, c, false, true);
  export_dot->add_option("--hex", c.hex, "system as a hex bit vector (needs --group)");

  CheckOptions check_opts;
  std::string check_group;
  auto* check_cmd = app.add_subcommand("check", "run the built-in verification suite");
  check_cmd->add_flag("--deep", check_opts.deep, "include the four-prime sweep");
  check_cmd->add_option("--seed", check_opts.seed, "seed for random subsets and samples");
  check_cmd->add_option("--group,-g", check_group, "only count this group");
  check_cmd->add_option("--threads", check_opts.threads, "worker threads");
  check_cmd->add_option("--samples", check_opts.n4_samples, "four-prime involution samples");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(c, engine, emit, by_comp, csv, out_path, ceiling, out);
    if (*closure_cmd) {
      auto s = load_system(c);
      out << to_json_text(*s.lattice, close(*s.lattice, s.members));
      return kExitOk;
    }
    if (*check_system) {
      auto s = load_system(c);
      if (auto v = check(*s.lattice, s.members)) {
        out << "violation " << v->describe(*s.lattice, naming(c)) << '\n';
        return kExitCheckFailed;
      }
      out << "ok\n";
      return kExitOk;
    }
    if (*phi_cmd) {
      auto s = load_system(c);
      require_transfer_system(s, c);
      out << to_json_text(*s.lattice, phi(*s.lattice, s.members));
      return kExitOk;
    }
    if (*decompose) return cmd_decompose(c, out);
    if (*verify) return cmd_verify(c, samples, seed, out);
    if (*export_dot) {
      auto s = load_system(c);
      require_transfer_system(s, c);
      out << to_dot(*s.lattice, s.members, naming(c));
      return kExitOk;
    }
    if (*check_cmd) {
      if (!check_group.empty()) check_opts.group = check_group;
      auto report = run_checks(check_opts);
      print_report(out, report);
      return report.pass() ? kExitOk : kExitCheckFailed;
    }
  } catch (const CheckFailed& e) {
    err << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const LimitExceeded& e) {
    err << "limit: " << e.what() << '\n';
    return kExitLimits;
  } catch (const IoError& e) {
    err << "io: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedOperation& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "input: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace norminf
