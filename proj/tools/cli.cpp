#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fltree/error.hpp"
#include "fltree/linkcut.hpp"
#include "fltree/permutation_distance.hpp"
#include "fltree/random.hpp"
#include "fltree/rearrangement.hpp"
#include "fltree/reduction.hpp"
#include "fltree/tree.hpp"

namespace fltree::cli {

namespace {

using Record = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

// A tree argument is a file path. An argument that names no file but ends in
// ';' is taken as the tree itself, which keeps one-off calls short.
LabelledTree load_tree(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::exists(arg, ec) && !arg.empty() && arg.back() == ';') {
    return parse_tree(arg);
  }
  try {
    return parse_tree(read_file(arg));
  } catch (const ParseError& e) {
    throw InputError(arg + ": parse error: " + e.what());
  }
}

std::vector<std::string> witness_lines(const OperationSequence& seq) {
  std::vector<std::string> lines;
  for (const auto& op : seq) lines.push_back(format_operation(op));
  return lines;
}

void emit(std::ostream& out, const Record& record, const std::string& summary,
          const std::vector<std::string>& body, bool json) {
  if (json) {
    out << record.dump() << '\n';
    return;
  }
  out << summary << '\n';
  for (const auto& line : body) out << line << '\n';
}

struct DistArgs {
  std::string mode;
  std::string t1;
  std::string t2;
  std::optional<std::size_t> k;
  std::string candidates = "vg";
  std::size_t limit = OracleOptions{}.label_limit;
  unsigned threads = 1;
  bool json = false;
};

CandidateSet parse_candidates(const std::string& name) {
  if (name == "vg") return CandidateSet::MovementVertices;
  if (name == "x") return CandidateSet::ActiveAndMovement;
  return CandidateSet::AllLabels;
}

int run_dist(const DistArgs& a, std::ostream& out) {
  const LabelledTree t1 = load_tree(a.t1);
  const LabelledTree t2 = load_tree(a.t2);

  Record record{{"command", "dist"}, {"mode", a.mode}};
  std::optional<std::size_t> distance;
  OperationSequence witness;
  std::string method;
  std::string note;

  if (a.mode == "linkcut") {
    distance = linkcut_distance(t1, t2);
    witness = linkcut_script(t1, t2);
    method = "linkcut";
  } else if (a.mode == "perm") {
    distance = permutation_distance(t1, t2);
    auto pi = optimal_permutation(t1, t2);
    if (!pi.empty()) witness.push_back(std::move(pi));
    method = "permutation";
  } else if (a.mode == "exact") {
    auto result = brute_force_distance(t1, t2, {a.limit});
    distance = result.distance;
    witness = std::move(result.witness);
    method = to_string(result.method);
  } else if (a.mode == "fpt") {
    if (!a.k) throw UsageError("dist fpt needs --k");
    auto outcome = fpt_distance(t1, t2, *a.k, {parse_candidates(a.candidates), a.threads});
    method = to_string(Method::Fpt);
    record["k"] = *a.k;
    record["candidates"] = a.candidates;
    record["partition_size"] = outcome.partition_size;
    record["permutations_evaluated"] = outcome.permutations_evaluated;
    record["exceeds_budget"] = !outcome.result.has_value();
    if (outcome.result) {
      distance = outcome.result->distance;
      witness = std::move(outcome.result->witness);
    } else if (outcome.rejected_by_partition_bound) {
      note = ", partition bound";
    }
  } else {
    auto result = approx_binary(t1, t2);
    distance = result.distance;
    witness = std::move(result.witness);
    method = to_string(result.method);
    record["guaranteed"] = result.guaranteed;
    if (!result.guaranteed) note = ", not binary: no factor-4 guarantee";
  }

  std::string summary;
  if (distance) {
    const bool verified = verify_sequence(t1, witness, t2).verified;
    record["distance"] = *distance;
    record["method"] = method;
    record["verified"] = verified;
    record["witness"] = witness_lines(witness);
    summary = "distance " + std::to_string(*distance) + " (" + method +
              ", verified: " + (verified ? "true" : "false") + note + ")";
  } else {
    record["distance"] = nullptr;
    record["method"] = method;
    record["verified"] = nullptr;
    record["witness"] = nullptr;
    summary = "distance > " + std::to_string(*a.k) + " (" + method + note + ")";
  }
  emit(out, record, summary, witness_lines(witness), a.json);
  return kExitOk;
}

int run_script(const std::string& p1, const std::string& p2, bool json, std::ostream& out) {
  const LabelledTree t1 = load_tree(p1);
  const LabelledTree t2 = load_tree(p2);
  const auto script = linkcut_script(t1, t2);
  if (json) {
    Record record{{"command", "script"},
                  {"distance", script.size()},
                  {"method", "linkcut"},
                  {"verified", verify_sequence(t1, script, t2).verified},
                  {"witness", witness_lines(script)}};
    out << record.dump() << '\n';
  } else {
    out << format_script(script);
  }
  return kExitOk;
}

int run_verify(const std::string& p1, const std::string& script_path, const std::string& p2,
               bool json, std::ostream& out) {
  const LabelledTree t1 = load_tree(p1);
  const LabelledTree t2 = load_tree(p2);
  OperationSequence seq;
  try {
    seq = parse_script(read_file(script_path));
  } catch (const ParseError& e) {
    throw InputError(script_path + ": parse error: " + e.what());
  }
  const auto check = verify_sequence(t1, seq, t2);
  Record record{{"command", "verify"},
                {"distance", nullptr},
                {"method", nullptr},
                {"verified", check.verified},
                {"witness", witness_lines(seq)}};
  if (check.verified) {
    record["distance"] = sequence_size(seq);
  } else {
    record["reason"] = check.diagnostic;
  }
  std::vector<std::string> body;
  if (!check.verified) body.push_back("reason: " + check.diagnostic);
  emit(out, record, check.verified ? "verified: true" : "verified: false", body, json);
  return check.verified ? kExitOk : kExitFailure;
}

struct GenRandomArgs {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t ops = 0;
  double permutation_share = PerturbationOptions{}.permutation_share;
  std::size_t max_permutation = PerturbationOptions{}.max_permutation_size;
  bool keep_root = false;
  std::string out_prefix;
  bool json = false;
};

void write_pair(const std::string& prefix, const LabelledTree& t1, const LabelledTree& t2,
                std::vector<std::string>& body) {
  write_file(prefix + ".t1.nwk", serialize_tree(t1) + "\n");
  write_file(prefix + ".t2.nwk", serialize_tree(t2) + "\n");
  body.push_back("wrote " + prefix + ".t1.nwk " + prefix + ".t2.nwk");
}

int run_gen_random(const GenRandomArgs& a, std::ostream& out) {
  if (a.n == 0) throw UsageError("--n must be at least 1");
  const auto instance =
      random_instance(a.seed, a.n, a.ops, {a.permutation_share, a.max_permutation, a.keep_root});
  const std::string t1 = serialize_tree(instance.t1);
  const std::string t2 = serialize_tree(instance.t2);
  Record record{{"command", "gen random"}, {"seed", a.seed}, {"n", a.n},
                {"ops", instance.applied.size()}, {"t1", t1}, {"t2", t2},
                {"sequence", witness_lines(instance.applied)}};
  std::vector<std::string> body{"t1 " + t1, "t2 " + t2};
  for (const auto& line : witness_lines(instance.applied)) body.push_back(line);
  if (!a.out_prefix.empty()) {
    write_pair(a.out_prefix, instance.t1, instance.t2, body);
    write_file(a.out_prefix + ".script", format_script(instance.applied));
    body.push_back("wrote " + a.out_prefix + ".script");
  }
  emit(out, record, "random pair, " + std::to_string(instance.applied.size()) + " operations applied",
       body, a.json);
  return kExitOk;
}

int run_gen_reduction(const std::string& path, const std::string& prefix, bool json,
                      std::ostream& out) {
  const auto instance = parse_3dm_instance(read_file(path));
  const auto [t1, t2] = build_reduction(instance);
  const std::size_t m = instance.triples.size();
  Record record{{"command", "gen reduction3dm"}, {"triples", m}, {"labels", t1.size()},
                {"t1", serialize_tree(t1)}, {"t2", serialize_tree(t2)}};
  std::vector<std::string> body{"t1 " + serialize_tree(t1), "t2 " + serialize_tree(t2)};
  std::string summary = "reduction pair, " + std::to_string(m) + " triples, " +
                        std::to_string(t1.size()) + " labels";
  try {
    const std::size_t n = max_matching_bruteforce(instance);
    record["max_matching"] = n;
    record["bound"] = reduction_bound(m, n);
    summary += ", max matching " + std::to_string(n) + ", bound " +
               std::to_string(reduction_bound(m, n));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeLimitExceeded) throw;
    record["max_matching"] = nullptr;
    record["bound"] = nullptr;
  }
  if (!prefix.empty()) write_pair(prefix, t1, t2, body);
  emit(out, record, summary, body, json);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distances between fully-labelled rooted trees", "fltree"};
  app.require_subcommand(1);

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "Distance between two trees, with a witness script");
  dist_cmd->add_option("mode", dist.mode, "linkcut, perm, exact, fpt or approx")
      ->required()
      ->check(CLI::IsMember({"linkcut", "perm", "exact", "fpt", "approx"}));
  dist_cmd->add_option("t1", dist.t1, "First tree")->required();
  dist_cmd->add_option("t2", dist.t2, "Second tree")->required();
  dist_cmd->add_option("--k", dist.k, "Budget for fpt");
  dist_cmd->add_option("--candidates", dist.candidates, "fpt candidate labels: vg, x or all")
      ->check(CLI::IsMember({"vg", "x", "all"}));
  dist_cmd->add_option("--limit", dist.limit, "Label limit for exact")->capture_default_str();
  dist_cmd->add_option("--threads", dist.threads, "Worker threads for fpt")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  dist_cmd->add_flag("--json", dist.json, "Print one JSON record");

  std::string script_t1, script_t2;
  bool script_json = false;
  auto* script_cmd = app.add_subcommand("script", "Shortest link-and-cut script");
  script_cmd->add_option("t1", script_t1)->required();
  script_cmd->add_option("t2", script_t2)->required();
  script_cmd->add_flag("--json", script_json, "Print one JSON record");

  std::string verify_t1, verify_script, verify_t2;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Replay a script and compare with a tree");
  verify_cmd->add_option("t1", verify_t1)->required();
  verify_cmd->add_option("script", verify_script)->required();
  verify_cmd->add_option("t2", verify_t2)->required();
  verify_cmd->add_flag("--json", verify_json, "Print one JSON record");

  auto* gen_cmd = app.add_subcommand("gen", "Instance generators");
  gen_cmd->require_subcommand(1);
  GenRandomArgs gen_random;
  auto* random_cmd = gen_cmd->add_subcommand("random", "Random tree and a perturbed copy");
  random_cmd->add_option("--seed", gen_random.seed, "Generator seed")->capture_default_str();
  random_cmd->add_option("--n", gen_random.n, "Number of labels")->required();
  random_cmd->add_option("--ops", gen_random.ops, "Random operations to apply")
      ->capture_default_str();
  random_cmd->add_option("--perm-share", gen_random.permutation_share,
                         "Probability that an operation is a permutation")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  random_cmd->add_option("--perm-size", gen_random.max_permutation,
                         "Most labels one permutation moves")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  random_cmd->add_flag("--keep-root", gen_random.keep_root, "Never relabel the root");
  random_cmd->add_option("--out", gen_random.out_prefix,
                         "Also write PREFIX.t1.nwk, PREFIX.t2.nwk and PREFIX.script");
  random_cmd->add_flag("--json", gen_random.json, "Print one JSON record");

  std::string reduction_path, reduction_prefix;
  bool reduction_json = false;
  auto* reduction_cmd =
      gen_cmd->add_subcommand("reduction3dm", "Tree pair built from a 3DM instance file");
  reduction_cmd->add_option("instance", reduction_path)->required();
  reduction_cmd->add_option("--out", reduction_prefix, "Also write PREFIX.t1.nwk and PREFIX.t2.nwk");
  reduction_cmd->add_flag("--json", reduction_json, "Print one JSON record");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (dist_cmd->parsed()) return run_dist(dist, out);
    if (script_cmd->parsed()) return run_script(script_t1, script_t2, script_json, out);
    if (verify_cmd->parsed()) {
      return run_verify(verify_t1, verify_script, verify_t2, verify_json, out);
    }
    if (random_cmd->parsed()) return run_gen_random(gen_random, out);
    return run_gen_reduction(reduction_path, reduction_prefix, reduction_json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitFailure;
}

}  // namespace fltree::cli
