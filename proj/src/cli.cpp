#include "ucycle/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ucycle/counting.hpp"
#include "ucycle/digraph.hpp"
#include "ucycle/errors.hpp"
#include "ucycle/euler.hpp"
#include "ucycle/verify.hpp"
#include "ucycle/witness.hpp"
#include "ucycle/word_classes.hpp"

namespace ucycle {

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string class_name;
  int m = -1;
  int n = -1;
  int k = -1;
  int s = -1;
  std::string classes_text;
  std::uint64_t budget = 0;  // 0: unset, fall back to UCYCLE_BUDGET or default
  std::string format = "text";
  std::string out_path;
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--class", opts.class_name,
                  "word class: plain, injection, surjection, almost-onto, "
                  "non-bijection, equitable, s-inequitable, ranking, password")
      ->required();
  cmd->add_option("--m", opts.m, "word length");
  cmd->add_option("--n", opts.n, "alphabet size");
  cmd->add_option("--k", opts.k, "word length for injection/surjection");
  cmd->add_option("--s", opts.s, "frequency spread for s-inequitable");
  cmd->add_option("--classes", opts.classes_text,
                  "password symbol classes, e.g. \"1,2;3\"");
  cmd->add_option("--budget", opts.budget,
                  "candidate enumeration budget (default 10^7, or UCYCLE_BUDGET)");
  cmd->add_option("--format", opts.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opts.out_path, "write the primary payload to this file");
}

std::vector<std::vector<Letter>> parse_symbol_classes(const std::string& text) {
  std::vector<std::vector<Letter>> classes;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<Letter> cls;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        std::size_t pos = 0;
        int value = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument(item);
        cls.push_back(value);
      } catch (const std::exception&) {
        throw ContractError("malformed --classes entry '" + item +
                            "'; expected semicolon-separated comma lists like \"1,2;3\"");
      }
    }
    if (cls.empty()) {
      throw ContractError("malformed --classes value '" + text + "'");
    }
    classes.push_back(std::move(cls));
  }
  if (classes.empty()) {
    throw ContractError("malformed --classes value '" + text + "'");
  }
  return classes;
}

int require_flag(int value, const char* flag, const std::string& class_name) {
  if (value < 0) {
    throw ContractError("class '" + class_name + "' needs " + flag);
  }
  return value;
}

ClassSpec resolve_spec(const CommonOptions& opts) {
  const std::string& name = opts.class_name;
  if (name == "plain") {
    return ClassSpec::plain(require_flag(opts.m, "--m", name),
                            require_flag(opts.n, "--n", name));
  }
  if (name == "injection") {
    return ClassSpec::injection(require_flag(opts.k, "--k", name),
                                require_flag(opts.n, "--n", name));
  }
  if (name == "surjection") {
    return ClassSpec::surjection(require_flag(opts.k, "--k", name),
                                 require_flag(opts.n, "--n", name));
  }
  if (name == "almost-onto") {
    return ClassSpec::almost_onto(require_flag(opts.n, "--n", name));
  }
  if (name == "non-bijection") {
    return ClassSpec::non_bijection(require_flag(opts.n, "--n", name));
  }
  if (name == "equitable") {
    return ClassSpec::equitable(require_flag(opts.m, "--m", name),
                                require_flag(opts.n, "--n", name));
  }
  if (name == "s-inequitable") {
    return ClassSpec::s_inequitable(require_flag(opts.m, "--m", name),
                                    require_flag(opts.n, "--n", name),
                                    require_flag(opts.s, "--s", name));
  }
  if (name == "ranking") {
    return ClassSpec::ranking(require_flag(opts.m, "--m", name));
  }
  if (name == "password") {
    if (opts.classes_text.empty()) {
      throw ContractError("class 'password' needs --classes");
    }
    return ClassSpec::password(require_flag(opts.m, "--m", name),
                               require_flag(opts.n, "--n", name),
                               parse_symbol_classes(opts.classes_text));
  }
  throw ContractError("unknown class '" + name + "'");
}

std::uint64_t resolve_budget(const CommonOptions& opts) {
  if (opts.budget > 0) return opts.budget;
  if (const char* env = std::getenv("UCYCLE_BUDGET")) {
    try {
      const unsigned long long parsed = std::stoull(env);
      if (parsed > 0) return parsed;
    } catch (const std::exception&) {
      throw ContractError(std::string("cannot parse UCYCLE_BUDGET value '") + env + "'");
    }
  }
  return kDefaultBudget;
}

std::string expectation_name(Expectation e) {
  switch (e) {
    case Expectation::Yes: return "expected-yes";
    case Expectation::No: return "expected-no";
    case Expectation::Unknown: return "unknown";
  }
  return "unknown";
}

json spec_to_json(const ValidatedSpec& v) {
  json j{{"class", class_kind_name(v.spec.kind)},
         {"m", v.spec.m},
         {"n", v.spec.n},
         {"word_length", v.spec.m},
         {"vertex_length", v.vertex_length},
         {"expectation", expectation_name(v.expectation)},
         {"expectation_note", v.note}};
  if (v.spec.kind == ClassKind::SInequitable) j["s"] = v.spec.s;
  if (v.spec.kind == ClassKind::Equitable || v.spec.kind == ClassKind::SInequitable) {
    j["residue"] = v.residue;
    j["quota"] = v.quota;
  }
  if (v.spec.kind == ClassKind::Password) j["classes"] = v.spec.classes;
  return j;
}

json report_to_json(const ExistenceReport& r, int alphabet,
                    const TransitionDigraph& g) {
  json unbalanced = json::array();
  for (const auto& u : r.unbalanced) {
    unbalanced.push_back({{"vertex", word_to_string(g.vertices[u.vertex], alphabet)},
                          {"in", u.in},
                          {"out", u.out}});
  }
  json j{{"exists", r.exists},
         {"reason", existence_reason_name(r.reason)},
         {"balanced", r.balanced},
         {"unbalanced", unbalanced},
         {"scc_count", r.scc_count},
         {"largest_scc_fraction",
          {{"num", r.largest_scc_size}, {"den", r.vertex_count}}},
         {"vertex_count", r.vertex_count},
         {"edge_count", g.edges.size()}};
  j["forced_cycle_count"] =
      r.forced_cycle_count ? json(*r.forced_cycle_count) : json(nullptr);
  return j;
}

void print_report_text(std::ostream& os, const ExistenceReport& r,
                       const TransitionDigraph& g) {
  os << "exists: " << (r.exists ? "yes" : "no") << "\n"
     << "reason: " << existence_reason_name(r.reason) << "\n"
     << "balanced: " << (r.balanced ? "yes" : "no") << "\n";
  for (const auto& u : r.unbalanced) {
    os << "  unbalanced vertex " << word_to_string(g.vertices[u.vertex], g.alphabet)
       << ": in=" << u.in << " out=" << u.out << "\n";
  }
  os << "vertices: " << r.vertex_count << "\n"
     << "edges: " << g.edges.size() << "\n"
     << "strongly connected components: " << r.scc_count << "\n"
     << "largest component fraction: " << r.largest_scc_size << "/" << r.vertex_count
     << "\n";
  if (r.forced_cycle_count) {
    os << "forced cycles: " << *r.forced_cycle_count << "\n";
  }
}

void write_payload(const CommonOptions& opts, const std::string& payload,
                   std::ostream& out, std::ostream& err, const char* what) {
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path);
    if (!file) throw ContractError("cannot open '" + opts.out_path + "' for writing");
    file << payload;
    err << what << " written to " << opts.out_path << "\n";
  } else {
    out << payload;
  }
}

std::vector<Letter> read_cycle(const std::string& path, int alphabet,
                               std::istream& in) {
  std::string line;
  if (path == "-") {
    if (!std::getline(in, line)) throw ContractError("no cycle on standard input");
  } else {
    std::ifstream file(path);
    if (!file) throw ContractError("cannot open cycle file '" + path + "'");
    if (!std::getline(file, line)) throw ContractError("cycle file '" + path + "' is empty");
  }
  return parse_word(line, alphabet);
}

int cmd_generate(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const ValidatedSpec v = validate_spec(resolve_spec(opts));
  const TransitionDigraph g = build_digraph(v.spec, resolve_budget(opts));
  const ExistenceReport report = diagnose(g);
  if (!report.exists) {
    if (opts.format == "json") {
      json j{{"command", "generate"},
             {"spec", spec_to_json(v)},
             {"report", report_to_json(report, g.alphabet, g)}};
      out << j.dump(2) << "\n";
    } else {
      print_report_text(out, report, g);
    }
    return 1;
  }
  const auto circuit = eulerian_circuit(g);
  const auto raw = read_ucycle(g, circuit);
  const auto canonical = canonical_rotation(raw);
  const std::string canonical_text = word_to_string(canonical, g.alphabet);
  if (opts.format == "json") {
    json j{{"command", "generate"},
           {"spec", spec_to_json(v)},
           {"report", report_to_json(report, g.alphabet, g)},
           {"cycle", canonical_text},
           {"cycle_raw", word_to_string(raw, g.alphabet)},
           {"length", canonical.size()}};
    if (!opts.out_path.empty()) {
      std::ofstream file(opts.out_path);
      if (!file) throw ContractError("cannot open '" + opts.out_path + "' for writing");
      file << canonical_text << "\n";
    }
    out << j.dump(2) << "\n";
  } else {
    write_payload(opts, canonical_text + "\n", out, err, "cycle");
    err << "length " << canonical.size() << ", every window is a distinct class member\n";
  }
  return 0;
}

int cmd_diagnose(const CommonOptions& opts, std::ostream& out) {
  const ValidatedSpec v = validate_spec(resolve_spec(opts));
  const TransitionDigraph g = build_digraph(v.spec, resolve_budget(opts));
  const ExistenceReport report = diagnose(g);
  if (opts.format == "json") {
    json j{{"command", "diagnose"},
           {"spec", spec_to_json(v)},
           {"report", report_to_json(report, g.alphabet, g)}};
    out << j.dump(2) << "\n";
  } else {
    print_report_text(out, report, g);
  }
  return report.exists ? 0 : 1;
}

int cmd_verify(const CommonOptions& opts, const std::string& cycle_path,
               std::istream& in, std::ostream& out) {
  const ValidatedSpec v = validate_spec(resolve_spec(opts));
  const std::vector<Letter> cycle = read_cycle(cycle_path, v.spec.n, in);
  const VerificationReport report = verify_ucycle(v.spec, cycle, resolve_budget(opts));
  if (opts.format == "json") {
    json j{{"command", "verify"},
           {"spec", spec_to_json(v)},
           {"report",
            {{"pass", report.pass()},
             {"length_ok", report.length_ok},
             {"windows_all_members", report.windows_all_members},
             {"windows_distinct", report.windows_distinct},
             {"count_matches_class", report.count_matches_class},
             {"expected_count", report.expected_count},
             {"cycle_length", report.cycle_length},
             {"distinct_windows", report.distinct_windows},
             {"first_failure",
              report.first_failure
                  ? json{{"index", report.first_failure->index},
                         {"window",
                          word_to_string(report.first_failure->window, v.spec.n)}}
                  : json(nullptr)}}}};
    out << j.dump(2) << "\n";
  } else {
    out << (report.pass() ? "pass" : "fail") << "\n"
        << "length_ok: " << report.length_ok << " (" << report.cycle_length << " vs "
        << report.expected_count << " class members)\n"
        << "windows_all_members: " << report.windows_all_members << "\n"
        << "windows_distinct: " << report.windows_distinct << "\n"
        << "count_matches_class: " << report.count_matches_class << "\n";
    if (report.first_failure) {
      out << "first failure: window " << report.first_failure->index << " = "
          << word_to_string(report.first_failure->window, v.spec.n) << "\n";
    }
  }
  return report.pass() ? 0 : 1;
}

int cmd_count(const CommonOptions& opts, std::ostream& out) {
  const ValidatedSpec v = validate_spec(resolve_spec(opts));
  const CountReport report = make_count_report(v.spec, resolve_budget(opts));
  if (opts.format == "json") {
    json j{{"command", "count"},
           {"spec", spec_to_json(v)},
           {"closed_form",
            report.closed_form ? json(report.closed_form->to_string()) : json(nullptr)},
           {"brute_force",
            report.brute_force ? json(std::to_string(*report.brute_force)) : json(nullptr)},
           {"consistent", report.consistent}};
    out << j.dump(2) << "\n";
  } else {
    out << "closed_form: "
        << (report.closed_form ? report.closed_form->to_string() : "unavailable") << "\n"
        << "brute_force: "
        << (report.brute_force ? std::to_string(*report.brute_force) : "skipped (budget)")
        << "\n"
        << "consistent: " << (report.consistent ? "yes" : "NO") << "\n";
  }
  return report.consistent ? 0 : 1;
}

int cmd_enumerate(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const ValidatedSpec v = validate_spec(resolve_spec(opts));
  const auto words = enumerate_class(v.spec, resolve_budget(opts));
  if (opts.format == "json") {
    json list = json::array();
    for (const Word& w : words) list.push_back(word_to_string(w, v.spec.n));
    json j{{"command", "enumerate"},
           {"spec", spec_to_json(v)},
           {"count", words.size()},
           {"words", list}};
    out << j.dump(2) << "\n";
  } else {
    std::string payload;
    for (const Word& w : words) payload += word_to_string(w, v.spec.n) + "\n";
    write_payload(opts, payload, out, err, "word list");
    err << words.size() << " words\n";
  }
  return 0;
}

int cmd_export_dot(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const ValidatedSpec v = validate_spec(resolve_spec(opts));
  const TransitionDigraph g = build_digraph(v.spec, resolve_budget(opts));
  const std::string dot = to_dot(g);
  if (opts.format == "json") {
    json j{{"command", "export-dot"}, {"spec", spec_to_json(v)}, {"dot", dot}};
    out << j.dump(2) << "\n";
  } else {
    write_payload(opts, dot, out, err, "dot graph");
  }
  return 0;
}

struct WitnessOptions {
  std::string op;
  std::string vertex_text;
  std::string from_text;
  std::string to_text;
  std::string path_file;
  int placeholder = -1;
  int super_letter = -1;
  int normal_letter = -1;
  int pos_i = -1;
  int pos_j = -1;
};

WitnessPath read_path_file(const std::string& path, int alphabet) {
  std::ifstream file(path);
  if (!file) throw ContractError("cannot open path file '" + path + "'");
  WitnessPath p;
  std::string line;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    p.vertices.push_back(parse_word(line, alphabet));
  }
  return p;
}

int cmd_witness(const CommonOptions& opts, const WitnessOptions& wopts,
                std::ostream& out, std::ostream& err) {
  const ValidatedSpec v = validate_spec(resolve_spec(opts));
  const int n = v.spec.n;

  auto need_vertex = [&]() {
    if (wopts.vertex_text.empty()) throw ContractError("this operation needs --vertex");
    return parse_word(wopts.vertex_text, n);
  };

  std::optional<WitnessPath> path;
  bool reachable = true;
  if (wopts.op == "lag-cycle") {
    if (wopts.placeholder < 0) throw ContractError("lag-cycle needs --placeholder");
    path = lag_cycle(v.spec, need_vertex(), wopts.placeholder);
  } else if (wopts.op == "status-swap") {
    if (wopts.super_letter < 0 || wopts.normal_letter < 0) {
      throw ContractError("status-swap needs --super and --normal");
    }
    path = status_swap_path(v.spec, need_vertex(), wopts.super_letter,
                            wopts.normal_letter);
  } else if (wopts.op == "position-swap") {
    if (wopts.pos_i < 0 || wopts.pos_j < 0) {
      throw ContractError("position-swap needs --i and --j (1-based)");
    }
    path = position_swap_path(v.spec, need_vertex(), wopts.pos_i, wopts.pos_j);
  } else if (wopts.op == "ranking-collapse") {
    path = ranking_collapse_path(v.spec, need_vertex());
  } else if (wopts.op == "bfs") {
    if (wopts.from_text.empty() || wopts.to_text.empty()) {
      throw ContractError("bfs needs --from and --to");
    }
    const TransitionDigraph g = build_digraph(v.spec, resolve_budget(opts));
    auto found = bfs_path(g, parse_word(wopts.from_text, n), parse_word(wopts.to_text, n));
    if (!found) {
      reachable = false;
    } else {
      path = std::move(*found);
    }
  } else if (wopts.op == "validate") {
    if (wopts.path_file.empty()) throw ContractError("validate needs --path");
    const WitnessPath candidate = read_path_file(wopts.path_file, n);
    const PathCheck check = validate_path(v.spec, candidate);
    if (opts.format == "json") {
      json j{{"command", "witness"},
             {"spec", spec_to_json(v)},
             {"op", "validate"},
             {"valid", check.valid},
             {"first_bad_transition",
              check.first_bad_transition ? json(*check.first_bad_transition) : json(nullptr)},
             {"message", check.message}};
      out << j.dump(2) << "\n";
    } else {
      out << (check.valid ? "valid" : "invalid") << "\n";
      if (!check.valid) out << check.message << "\n";
    }
    return check.valid ? 0 : 1;
  } else {
    throw ContractError("unknown witness op '" + wopts.op +
                        "'; expected lag-cycle, status-swap, position-swap, "
                        "ranking-collapse, bfs, or validate");
  }

  if (!reachable) {
    if (opts.format == "json") {
      json j{{"command", "witness"},
             {"spec", spec_to_json(v)},
             {"op", wopts.op},
             {"reachable", false}};
      out << j.dump(2) << "\n";
    } else {
      out << "unreachable\n";
    }
    return 1;
  }

  const PathCheck check = validate_path(v.spec, *path);
  if (opts.format == "json") {
    json vertices = json::array();
    for (const Word& w : path->vertices) vertices.push_back(word_to_string(w, n));
    json j{{"command", "witness"},
           {"spec", spec_to_json(v)},
           {"op", wopts.op},
           {"vertices", vertices},
           {"transitions", path->transitions()},
           {"valid", check.valid}};
    if (wopts.op == "bfs") j["reachable"] = true;
    out << j.dump(2) << "\n";
  } else {
    std::string payload;
    for (const Word& w : path->vertices) payload += word_to_string(w, n) + "\n";
    write_payload(opts, payload, out, err, "witness path");
    err << path->transitions() << " transitions, "
        << (check.valid ? "all legal" : "INVALID") << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"universal cycles of restricted word classes"};
  app.require_subcommand(1);

  CommonOptions generate_opts, verify_opts, count_opts, enumerate_opts,
      diagnose_opts, witness_opts_common, dot_opts;
  std::string cycle_path;
  WitnessOptions witness_opts;

  CLI::App* generate = app.add_subcommand("generate", "construct a universal cycle");
  add_common_options(generate, generate_opts);

  CLI::App* verify = app.add_subcommand("verify", "check a candidate cycle");
  add_common_options(verify, verify_opts);
  verify->add_option("--cycle", cycle_path, "cycle file, or - for standard input")
      ->required();

  CLI::App* count = app.add_subcommand("count", "class cardinality, two ways");
  add_common_options(count, count_opts);

  CLI::App* enumerate = app.add_subcommand("enumerate", "list every class member");
  add_common_options(enumerate, enumerate_opts);

  CLI::App* diagnose = app.add_subcommand("diagnose", "existence verdict with reasons");
  add_common_options(diagnose, diagnose_opts);

  CLI::App* witness = app.add_subcommand("witness", "construct or check witness paths");
  add_common_options(witness, witness_opts_common);
  witness->add_option("--op", witness_opts.op,
                      "lag-cycle, status-swap, position-swap, ranking-collapse, "
                      "bfs, or validate")
      ->required();
  witness->add_option("--vertex", witness_opts.vertex_text, "starting vertex word");
  witness->add_option("--placeholder", witness_opts.placeholder, "lag-cycle placeholder letter");
  witness->add_option("--super", witness_opts.super_letter, "status-swap super letter");
  witness->add_option("--normal", witness_opts.normal_letter, "status-swap normal letter");
  witness->add_option("--i", witness_opts.pos_i, "position-swap first position (1-based)");
  witness->add_option("--j", witness_opts.pos_j, "position-swap second position (1-based)");
  witness->add_option("--from", witness_opts.from_text, "bfs source vertex");
  witness->add_option("--to", witness_opts.to_text, "bfs target vertex");
  witness->add_option("--path", witness_opts.path_file, "path file to validate");

  CLI::App* export_dot = app.add_subcommand("export-dot", "Graphviz transition digraph");
  add_common_options(export_dot, dot_opts);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("ucycle");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(argv_store.size());
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage;
    const int rc = app.exit(e, usage, usage);
    (rc == 0 ? out : err) << usage.str();
    return rc == 0 ? 0 : 2;
  }

  try {
    if (generate->parsed()) return cmd_generate(generate_opts, out, err);
    if (verify->parsed()) return cmd_verify(verify_opts, cycle_path, in, out);
    if (count->parsed()) return cmd_count(count_opts, out);
    if (enumerate->parsed()) return cmd_enumerate(enumerate_opts, out, err);
    if (diagnose->parsed()) return cmd_diagnose(diagnose_opts, out);
    if (witness->parsed()) return cmd_witness(witness_opts_common, witness_opts, out, err);
    if (export_dot->parsed()) return cmd_export_dot(dot_opts, out, err);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command given\n";
  return 2;
}

}  // namespace ucycle
