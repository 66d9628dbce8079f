// ialwb: command-line workbench for the ial library.
//
// Exit codes: 0 success or derivable, 1 underivable, 2 unknown, 64 usage
// error, 65 input data error. `check` uses 0 valid, 1 valid up to the omega
// bound, 2 invalid.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ial/basic.hpp"
#include "ial/coding.hpp"
#include "ial/embedding.hpp"
#include "ial/flat_search.hpp"
#include "ial/lower_bound.hpp"
#include "ial/machine.hpp"
#include "ial/ordinal.hpp"
#include "ial/search.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ial;

constexpr int kUsage = 64;
constexpr int kDataError = 65;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << text;
}

// Text report with a fixed field order; the same fields go to --json-report.
class Report {
 public:
  explicit Report(std::string command) { j_["command"] = std::move(command); }

  void set(const std::string& key, json value) { j_[key] = std::move(value); }

  int finish(int code, const std::string& json_path, std::chrono::steady_clock::time_point start) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    for (const auto& [k, v] : j_.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    std::cout << "wall_time_ms: " << ms.count() << "\n";
    if (!json_path.empty()) {
      json out = j_;
      out["exit_code"] = code;
      out["wall_time_ms"] = ms.count();
      write_file(json_path, out.dump(2) + "\n");
    }
    return code;
  }

 private:
  json j_;
};

struct SearchFlags {
  SearchOptions opts;
  void add(CLI::App* app) {
    app->add_option("--depth", opts.depth, "Backward steps per branch")->capture_default_str();
    app->add_option("--star-bound", opts.star_bound, "Omega-instances searched for refutations")->capture_default_str();
    app->add_option("--node-limit", opts.node_limit, "Visited goals before giving up")->capture_default_str();
    app->add_flag("--atomic-id", opts.atomic_id, "Use identity axioms on variables only");
  }
  json to_json() const {
    return json{{"depth", opts.depth}, {"star_bound", opts.star_bound}, {"node_limit", opts.node_limit}, {"atomic_id", opts.atomic_id}};
  }
};

struct ProveArgs {
  std::string sequent;
  std::string fragment = "auto";
  std::string hyps_file;
  std::string srs_file;
  std::string emit_proof;
  std::string json_report;
  SearchFlags search;
};

std::string check_system_for(const std::string& fragment, bool hyps) {
  // With hypotheses the automatic choice searches the flat calculus.
  if (fragment == "flat" || (fragment == "auto" && hyps)) return hyps ? "flat+cut" : "flat";
  if (fragment == "bsc") return "bsc";
  return "dyadic";
}

Verdict run_search(const ProveArgs& a, Report& rep, CheckContext& ctx, HypothesisSet& hyps, RewritingSystem& srs) {
  if (!a.hyps_file.empty()) hyps = parse_sequent_list(read_file(a.hyps_file));
  const std::string f = a.fragment == "auto" && !hyps.empty() ? "flat" : a.fragment;
  // The dyadic fragments take hypotheses as zone formulas.
  auto with_hyps = [&](const DSequent& ds) {
    std::vector<Formula> banged;
    for (Formula u : upsilon(hyps)) banged.push_back(Formula::bang(u));
    return weaken_zone(ds, banged);
  };
  if (f == "ne") {
    DSequent ds = with_hyps(absorb_all(to_dyadic(parse_dsequent(a.sequent).flat())));
    const DSequent given = parse_dsequent(a.sequent);
    ds = weaken_zone(ds, given.zone);
    rep.set("goal", print_dsequent(ds));
    ctx = dyadic_context();
    return decide_ne_star_free(ds);
  }
  if (f == "auto" || f == "monoidal") {
    DSequent ds = parse_dsequent(a.sequent);
    if (ds.zone.empty()) ds = absorb_all(to_dyadic(ds.flat()));
    ds = with_hyps(ds);
    rep.set("goal", print_dsequent(ds));
    ctx = dyadic_context();
    if (f == "auto" && !sequent_has_star(ds) && classify_dsequent(ds) == FragmentClass::NE)
      return decide_ne_star_free(ds);
    return prove_bounded(ds, a.search.opts);
  }
  if (f == "flat") {
    const Sequent s = parse_sequent(a.sequent);
    rep.set("goal", print_sequent(s));
    if (!hyps.empty()) {
      ctx = flat_context(hyps, true);
      return prove_from_hypotheses(s, hyps, a.search.opts);
    }
    ctx = flat_context();
    return prove_flat(s, a.search.opts);
  }
  if (f == "bsc") {
    if (a.srs_file.empty()) throw CLI::ValidationError("--fragment bsc needs --srs");
    srs = parse_srs(read_file(a.srs_file));
    const Sequent s = parse_sequent(a.sequent);
    if (!is_bsc_sequent(s)) throw DataError("succedent is not a basic right-hand side");
    rep.set("goal", print_sequent(s));
    ctx = bsc_context(srs);
    return prove_bsc(s, srs, a.search.opts);
  }
  throw CLI::ValidationError("unknown fragment " + f);
}

int cmd_prove(const ProveArgs& a, bool refute) {
  const auto start = std::chrono::steady_clock::now();
  Report rep(refute ? "refute" : "prove");
  rep.set("fragment", a.fragment);
  CheckContext ctx;
  HypothesisSet hyps;
  RewritingSystem srs;
  const Verdict v = run_search(a, rep, ctx, hyps, srs);
  rep.set("verdict", to_string(v.status));
  rep.set("bounds", a.search.to_json());
  rep.set("nodes", v.stats.nodes);
  if (v.witness) {
    rep.set("witness", print_dsequent(*v.witness));
    rep.set("witness_instance", *v.witness_instance);
  }
  if (v.proof) {
    const CheckResult c = check_derivation(v.proof, ctx);
    rep.set("proof_check", to_string(c.verdict));
    rep.set("proof_system", check_system_for(a.fragment, !hyps.empty()));
    rep.set("proof_size", derivation_size(v.proof));
    if (!a.emit_proof.empty()) {
      if (a.emit_proof == "-") {
        std::cout << serialize(v.proof);
      } else {
        write_file(a.emit_proof, serialize(v.proof));
        rep.set("proof_file", a.emit_proof);
      }
    }
  }
  int code = exit_code(v.status);
  if (refute && code != 2) code = 1 - code;
  return rep.finish(code, a.json_report, start);
}

struct CheckArgs {
  std::string file;
  std::string system = "flat";
  std::string hyps_file;
  std::string srs_file;
  bool allow_cut = false;
  std::size_t omega_bound = 5;
  std::string json_report;
};

int cmd_check(const CheckArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  Report rep("check");
  const DerivationPtr d = parse_derivation(read_file(a.file));
  CheckContext ctx;
  RewritingSystem srs;
  if (a.system == "flat") {
    ctx.system = System::Flat;
  } else if (a.system == "dyadic") {
    ctx.system = System::Dyadic;
  } else if (a.system == "bsc") {
    if (a.srs_file.empty()) throw CLI::ValidationError("--system bsc needs --srs");
    ctx.system = System::Bsc;
    srs = parse_srs(read_file(a.srs_file));
    ctx.srs = &srs;
  } else {
    throw CLI::ValidationError("unknown system " + a.system);
  }
  if (!a.hyps_file.empty()) ctx.hypotheses = parse_sequent_list(read_file(a.hyps_file));
  ctx.allow_cut = a.allow_cut;
  ctx.omega_bound = a.omega_bound;
  const CheckResult r = check_derivation(d, ctx);
  rep.set("system", a.system);
  rep.set("conclusion", print_dsequent(d->conclusion));
  rep.set("verdict", to_string(r.verdict));
  rep.set("nodes", r.nodes);
  if (!r.ok()) {
    rep.set("reason", r.reason);
    if (r.where) rep.set("at", print_dsequent(*r.where));
  }
  return rep.finish(exit_code(r.verdict), a.json_report, start);
}

struct EmbedArgs {
  std::string goal;
  std::string hyps_file;
  bool prove = false;
  std::string json_report;
  SearchFlags search;
};

int cmd_embed(const EmbedArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  Report rep("embed");
  const HypothesisSet hyps = parse_sequent_list(read_file(a.hyps_file));
  const Sequent goal = parse_sequent(a.goal);
  json classes = json::array();
  for (const auto& h : hyps) classes.push_back(to_string(classify_hypothesis(h)));
  rep.set("hypothesis_classes", classes);
  const Sequent e = embed(hyps, goal);
  rep.set("embedded", print_sequent(e));
  if (!a.prove) return rep.finish(0, a.json_report, start);
  const Verdict from_hyps = prove_from_hypotheses(goal, hyps, a.search.opts);
  rep.set("from_hypotheses", to_string(from_hyps.status));
  Verdict embedded;
  const FragmentClass c = classify_sequent(e);
  if (!sequent_has_star(DSequent(e)) && c == FragmentClass::NE)
    embedded = decide_ne_star_free(absorb_all(to_dyadic(e)));
  else if (c == FragmentClass::NE || c == FragmentClass::Monoidal)
    embedded = prove_bounded(absorb_all(to_dyadic(e)), a.search.opts);
  else
    embedded = prove_flat(e, a.search.opts);
  rep.set("embedded_verdict", to_string(embedded.status));
  rep.set("bounds", a.search.to_json());
  return rep.finish(exit_code(from_hyps.status), a.json_report, start);
}

struct MeasureArgs {
  std::string sequent;
  std::string proof_file;
  std::string json_report;
};

int cmd_measure(const MeasureArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  Report rep("measure");
  const DSequent ds = parse_dsequent(a.sequent);
  rep.set("sequent", print_dsequent(ds));
  rep.set("fragment", to_string(classify_dsequent(ds)));
  rep.set("c_parameter", c_parameter(ds));
  const OrdVec m = mu_sequent(ds);
  rep.set("mu", to_string(m));
  rep.set("mu_cnf", nu_string(m));
  rep.set("mu_bound", to_string(ord_add(m, OrdVec::finite(1))));
  if (!a.proof_file.empty()) {
    const DerivationPtr d = parse_derivation(read_file(a.proof_file));
    const OrdVec r = rank_upper_bound(d);
    rep.set("rank_upper_bound", to_string(r));
    rep.set("within_bound", r <= ord_add(m, OrdVec::finite(1)));
  }
  return rep.finish(0, a.json_report, start);
}

int cmd_ordinal(const std::string& op, const std::vector<std::string>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw CLI::ValidationError("ordinal " + op + " takes " + std::to_string(n) + " argument(s)");
  };
  auto num = [](const std::string& s) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(s, &used);
      if (used != s.size()) throw DataError("not a natural number: " + s);
      return static_cast<std::uint64_t>(v);
    } catch (const std::logic_error&) {
      throw DataError("not a natural number: " + s);
    }
  };
  if (op == "compare") {
    need(2);
    const auto c = ord_compare(parse_ordvec(args[0]), parse_ordvec(args[1]));
    std::cout << (c < 0 ? "less" : c > 0 ? "greater" : "equal") << "\n";
  } else if (op == "nu") {
    need(1);
    std::cout << nu_string(parse_ordvec(args[0])) << "\n";
  } else if (op == "rho") {
    need(1);
    const auto code = rho(parse_ordvec(args[0]));
    if (!code) throw DataError("code exceeds 64 bits");
    std::cout << *code << "\n";
  } else if (op == "rho-inv") {
    need(1);
    std::cout << to_string(rho_inv(num(args[0]))) << "\n";
  } else if (op == "add") {
    need(2);
    std::cout << to_string(ord_add(parse_ordvec(args[0]), parse_ordvec(args[1]))) << "\n";
  } else if (op == "base-step") {
    need(1);
    const BaseStep bs = base_step(parse_ordvec(args[0]));
    std::cout << "base: " << to_string(bs.base) << "\nstep: " << bs.step << "\n";
  } else if (op == "lift") {
    need(2);
    std::cout << to_string(lift(parse_ordvec(args[0]), num(args[1]))) << "\n";
  } else if (op == "pair") {
    need(2);
    std::cout << pair(num(args[0]), num(args[1])) << "\n";
  } else if (op == "index") {
    need(1);
    const auto idx = decode_index(num(args[0]));
    if (!idx) {
      std::cout << "not an index\n";
      return 1;
    }
    std::cout << "epsilon: " << idx->epsilon << "\nalpha: " << to_string(idx->alpha) << "\ne: " << idx->e << "\n";
  } else {
    throw CLI::ValidationError("unknown ordinal operation " + op);
  }
  return 0;
}

struct MachineBorders {
  std::string l = "l";
  std::string r = "r";
  std::string e = "e";
  void add(CLI::App* app) {
    app->add_option("--left", l, "Left border symbol")->capture_default_str();
    app->add_option("--right", r, "Right border symbol")->capture_default_str();
    app->add_option("--end", e, "End marker symbol")->capture_default_str();
  }
};

int cmd_tm_compile(const std::string& file, const MachineBorders& b, const std::string& out) {
  const RewritingSystem s = compile_tm(parse_machine(read_file(file)), b.l, b.r, b.e);
  if (out.empty())
    std::cout << print_srs(s);
  else
    write_file(out, print_srs(s));
  return 0;
}

struct SrsRunArgs {
  std::string srs_file;
  std::string machine_file;
  std::string start;
  std::string input;
  std::string suffix = "e";
  std::size_t steps = 10'000;
  std::size_t breadth = 1'000'000;
  MachineBorders borders;
  std::string json_report;
};

int cmd_srs_run(const SrsRunArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep("srs-run");
  RewritingSystem s;
  Word start;
  if (!a.machine_file.empty()) {
    const TuringMachine m = parse_machine(read_file(a.machine_file));
    s = compile_tm(m, a.borders.l, a.borders.r, a.borders.e);
    start.push_back(a.borders.l);
    for (const auto& c : parse_word(a.input)) start.push_back(c);
    start.push_back(m.initial);
    start.push_back(a.borders.r);
    const RunResult run = tm_run(m, parse_word(a.input), a.steps);
    rep.set("tm_status", to_string(run.status));
    if (run.status == RunStatus::Output) rep.set("tm_output", print_word(run.output));
  } else if (!a.srs_file.empty()) {
    s = parse_srs(read_file(a.srs_file));
    start = parse_word(a.start);
  } else {
    throw CLI::ValidationError("srs-run needs --srs or --machine");
  }
  if (!a.start.empty() && !a.machine_file.empty()) start = parse_word(a.start);
  const Word suffix = parse_word(a.suffix);
  const ReachResult r =
      srs_reach(s, start, [&](const Word& w) { return has_suffix(w, suffix); }, a.steps, a.breadth);
  rep.set("start", print_word(start));
  json matches = json::array();
  for (const auto& w : r.matches) matches.push_back(print_word(w));
  rep.set("matches", matches);
  rep.set("explored", r.explored);
  rep.set("truncated", r.truncated);
  return rep.finish(r.matches.empty() ? 1 : 0, a.json_report, t0);
}

std::vector<std::size_t> parse_ks(const std::string& text) {
  std::vector<std::size_t> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      ks.push_back(std::stoul(item));
    } catch (const std::logic_error&) {
      throw DataError("bad energy level " + item);
    }
  }
  return ks;
}

struct LowerBoundArgs {
  std::uint64_t x = 0;
  std::string ks;
  std::string m0_file;
  std::string m1_file;
  bool with_hypotheses = false;
  bool prove = false;
  std::string emit_h;
  std::string json_report;
  SearchFlags search;
};

int cmd_gen_lower_bound(const LowerBoundArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep("gen-lower-bound");
  const TuringMachine m0 = a.m0_file.empty() ? identity_machine("m0") : parse_machine(read_file(a.m0_file));
  const TuringMachine m1 = a.m1_file.empty() ? identity_machine("m1") : parse_machine(read_file(a.m1_file));
  const auto ks = parse_ks(a.ks);
  const auto idx = decode_index(a.x);
  rep.set("x", a.x);
  if (idx) {
    rep.set("index", json{{"epsilon", idx->epsilon}, {"alpha", to_string(idx->alpha)}, {"e", idx->e}});
  } else {
    rep.set("index", "none");
  }
  const Sequent s = gen_main_sequent(a.x, ks, m0, m1, a.with_hypotheses);
  rep.set("sequent", print_sequent(s));
  const RewritingSystem srs = build_srs(m0, m1);
  rep.set("hypotheses", srs.rules.size());
  if (!a.emit_h.empty()) {
    std::string text;
    for (const auto& h : build_H(m0, m1)) text += print_sequent(h) + "\n";
    write_file(a.emit_h, text);
    rep.set("hypotheses_file", a.emit_h);
  }
  int code = 0;
  if (a.prove) {
    const Sequent basic = gen_main_sequent(a.x, ks, m0, m1, false);
    const Verdict v = is_bsc_sequent(basic) ? prove_bsc(basic, srs, a.search.opts) : prove_flat(basic, a.search.opts);
    rep.set("bsc_verdict", to_string(v.status));
    rep.set("bounds", a.search.to_json());
    code = exit_code(v.status);
  }
  return rep.finish(code, a.json_report, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for infinitary action logic with exponentiation"};
  app.require_subcommand(1);

  ProveArgs prove_args;
  ProveArgs refute_args;
  for (auto [name, args] : {std::pair{"prove", &prove_args}, std::pair{"refute", &refute_args}}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "prove" ? "Search for a derivation"
                                                                      : "Search for a refutation (exit 0 when underivable)");
    sub->add_option("sequent", args->sequent, "Goal sequent")->required();
    sub->add_option("--fragment", args->fragment, "auto, ne, monoidal, flat or bsc")->capture_default_str();
    sub->add_option("--hyps", args->hyps_file, "Hypothesis file (flat fragment)");
    sub->add_option("--srs", args->srs_file, "Rewriting system file (bsc fragment)");
    sub->add_option("--emit-proof", args->emit_proof, "Write the proof to FILE ('-' for stdout)");
    sub->add_option("--json-report", args->json_report, "Write a JSON report to FILE");
    args->search.add(sub);
  }

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Check a derivation file");
  check->add_option("file", check_args.file, "Derivation s-expression file")->required();
  check->add_option("--system", check_args.system, "flat, dyadic or bsc")->capture_default_str();
  check->add_option("--hyps", check_args.hyps_file, "Hypothesis file");
  check->add_option("--srs", check_args.srs_file, "Rewriting system file");
  check->add_flag("--allow-cut", check_args.allow_cut, "Accept cut rules");
  check->add_option("--omega-bound", check_args.omega_bound, "Explicit omega-instances checked")->capture_default_str();
  check->add_option("--json-report", check_args.json_report, "Write a JSON report to FILE");

  EmbedArgs embed_args;
  auto* emb = app.add_subcommand("embed", "Embed hypotheses as !-formulas");
  emb->add_option("goal", embed_args.goal, "Goal sequent")->required();
  emb->add_option("--hyps", embed_args.hyps_file, "Hypothesis file")->required();
  emb->add_flag("--prove", embed_args.prove, "Decide both formulations");
  emb->add_option("--json-report", embed_args.json_report, "Write a JSON report to FILE");
  embed_args.search.add(emb);

  MeasureArgs measure_args;
  auto* measure = app.add_subcommand("measure", "Measures of a sequent");
  measure->add_option("sequent", measure_args.sequent, "Sequent")->required();
  measure->add_option("--proof", measure_args.proof_file, "Derivation whose rank bound is reported");
  measure->add_option("--json-report", measure_args.json_report, "Write a JSON report to FILE");

  std::string ord_op;
  std::vector<std::string> ord_args;
  auto* ord = app.add_subcommand("ordinal", "Ordinal notation toolkit");
  ord->add_option("op", ord_op, "compare, nu, rho, rho-inv, add, base-step, lift, pair or index")->required();
  ord->add_option("args", ord_args, "Operands such as \"(5,2)\"");

  std::string tm_file;
  std::string tm_out;
  MachineBorders tm_borders;
  auto* tmc = app.add_subcommand("tm-compile", "Compile a machine to a rewriting system");
  tmc->add_option("machine", tm_file, "Machine description file")->required();
  tmc->add_option("-o,--output", tm_out, "Write the rules to FILE");
  tm_borders.add(tmc);

  SrsRunArgs srs_args;
  auto* srs = app.add_subcommand("srs-run", "Rewriting reachability");
  srs->add_option("--srs", srs_args.srs_file, "Rewriting system file");
  srs->add_option("--machine", srs_args.machine_file, "Machine file, compiled first");
  srs->add_option("--start", srs_args.start, "Start word (default for machines: l input q0 r)");
  srs->add_option("--input", srs_args.input, "Machine input word");
  srs->add_option("--suffix", srs_args.suffix, "Suffix of reported words")->capture_default_str();
  srs->add_option("--steps", srs_args.steps, "Rewriting steps")->capture_default_str();
  srs->add_option("--breadth", srs_args.breadth, "Visited words")->capture_default_str();
  srs->add_option("--json-report", srs_args.json_report, "Write a JSON report to FILE");
  srs_args.borders.add(srs);

  LowerBoundArgs lb_args;
  auto* lb = app.add_subcommand("gen-lower-bound", "Generate the energy sequent for a code x");
  lb->add_option("--x", lb_args.x, "Code of the index")->required();
  lb->add_option("--ks", lb_args.ks, "Non-increasing energy levels, e.g. 2,1,1");
  lb->add_option("--m0", lb_args.m0_file, "Base-check machine file");
  lb->add_option("--m1", lb_args.m1_file, "Step-check machine file");
  lb->add_flag("--with-hypotheses", lb_args.with_hypotheses, "Prefix the !-formulas of the hypotheses");
  lb->add_flag("--prove", lb_args.prove, "Search the basic calculus");
  lb->add_option("--emit-h", lb_args.emit_h, "Write the hypotheses to FILE");
  lb->add_option("--json-report", lb_args.json_report, "Write a JSON report to FILE");
  lb_args.search.add(lb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (app.got_subcommand("prove")) return cmd_prove(prove_args, false);
    if (app.got_subcommand("refute")) return cmd_prove(refute_args, true);
    if (app.got_subcommand("check")) return cmd_check(check_args);
    if (app.got_subcommand("embed")) return cmd_embed(embed_args);
    if (app.got_subcommand("measure")) return cmd_measure(measure_args);
    if (app.got_subcommand("ordinal")) return cmd_ordinal(ord_op, ord_args);
    if (app.got_subcommand("tm-compile")) return cmd_tm_compile(tm_file, tm_borders, tm_out);
    if (app.got_subcommand("srs-run")) return cmd_srs_run(srs_args);
    if (app.got_subcommand("gen-lower-bound")) return cmd_gen_lower_bound(lb_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}
