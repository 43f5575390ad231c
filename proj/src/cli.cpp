#include "selfshuffle/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "selfshuffle/checkers.hpp"
#include "selfshuffle/constructive.hpp"
#include "selfshuffle/io.hpp"
#include "selfshuffle/stones.hpp"

namespace selfshuffle {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;

  std::string word_spec;
  std::size_t length = 64;
  std::string alpha, rho, rho_s, rho_l, dir;

  std::size_t k = 2;
  std::size_t depth = 0;
  std::string strategy = "corridor";
  std::size_t memory_budget = 10'000'000;
  std::string emit;

  std::string kind;
  std::string variant = "01";
  bool trace = false;

  std::string check_kind;
  std::size_t horizon = 1000;
  std::string order;
  std::size_t border_length = 0;

  std::string stones_kind;
  std::size_t n = 0;
  std::string svg, csv;

  std::string witness_path;
  std::size_t transport = 0;
};

bool json_out(const Options& o) { return o.format == "json"; }

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (json_out(o)) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

QuadExt need_quad(const std::string& s, const char* flag) {
  if (s.empty()) throw ParseError(std::string("missing ") + flag);
  return QuadExt::parse(s);
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write " + path);
  f << data;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::string preview(const std::string& s, std::size_t n = 64) { return s.size() <= n ? s : s.substr(0, n) + "..."; }

SearchOptions search_options(const Options& o) {
  SearchOptions opt;
  if (o.strategy == "corridor") {
    opt.strategy = SearchStrategy::corridor;
  } else if (o.strategy == "endpoint") {
    opt.strategy = SearchStrategy::endpoint;
  } else {
    throw ParseError("strategy must be corridor or endpoint");
  }
  opt.memory_budget = o.memory_budget;
  return opt;
}

json outcome_json(const SearchOutcome& r) {
  json j{{"kind", r.kind_name()},           {"death", r.death_name()},       {"depth", r.depth},
         {"level", r.level},                {"bound", r.bound},              {"max_frontier", r.max_frontier},
         {"final_frontier", r.final_frontier}, {"truncated", r.truncated},   {"consumed", r.consumed}};
  return j;
}

std::string outcome_text(const SearchOutcome& r) {
  std::ostringstream os;
  os << "outcome: " << r.kind_name();
  if (r.kind == SearchOutcome::Kind::dead) os << " (" << r.death_name() << " at level " << r.level << ")";
  if (r.truncated) os << " (memory budget reached at level " << r.level << ")";
  os << "\ndepth: " << r.depth << "\nmin coordinate: " << r.bound << "\nmax frontier: " << r.max_frontier << '\n';
  if (!r.consumed.empty()) os << "consumed: " << join(r.consumed) << '\n';
  return os.str();
}

// ----- word ------------------------------------------------------------------

int cmd_word(const Options& o, std::ostream& out) {
  InfiniteWord x;
  std::string spec = o.word_spec;
  if (spec == "sturmian") {
    spec = "sturmian:" + need_quad(o.alpha, "--alpha").to_string() + ":" + need_quad(o.rho, "--rho").to_string();
  } else if ((spec == "char" || spec == "pal01" || spec == "pal10") && !o.dir.empty()) {
    spec += ":" + o.dir;
  }
  x = parse_word_spec(spec);
  std::string p = x.to_string(o.length);
  emit(out, o, json{{"schema", 1}, {"word", spec}, {"length", o.length}, {"prefix", p}}, p + '\n');
  return 0;
}

// ----- search ----------------------------------------------------------------

int cmd_search(const Options& o, std::ostream& out) {
  if (o.depth < 1) throw DomainError("depth must be positive");
  InfiniteWord x = parse_word_spec(o.word_spec);
  auto r = search_self_shuffle(x, o.k, o.depth, search_options(o));
  json j{{"schema", 1}, {"word", o.word_spec}, {"k", o.k}, {"outcome", outcome_json(r)}};
  std::string text = "word: " + o.word_spec + "\nk: " + std::to_string(o.k) + '\n' + outcome_text(r);
  if (r.kind == SearchOutcome::Kind::witness && !o.emit.empty()) {
    auto f = make_witness_file(witness_from_search(x, r, o.k), o.depth, o.word_spec);
    write_file(o.emit, to_json(f).dump(2) + '\n');
    j["witness_file"] = o.emit;
    text += "witness written to " + o.emit + '\n';
  }
  emit(out, o, j, text);
  return 0;
}

// ----- shuffle ---------------------------------------------------------------

int cmd_shuffle(const Options& o, std::ostream& out) {
  ShuffleWitness w;
  std::string spec;
  std::vector<std::string> sources;
  std::shared_ptr<RotationMachine> machine;
  std::size_t depth = o.depth;
  const std::string& kind = o.kind;
  if (kind == "tm") {
    w = tm_shuffle();
    spec = "thue-morse";
  } else if (kind == "fibonacci") {
    w = fibonacci_shuffle();
    spec = "fibonacci";
  } else if (kind == "period-doubling") {
    w = period_doubling_shuffle();
    spec = "period-doubling";
  } else if (kind == "full-complexity") {
    w = full_complexity_shuffle();
    spec = "full-complexity";
  } else if (kind == "three") {
    w = three_shuffle_example();
    spec = "three-shuffle-example";
  } else if (kind == "sturmian") {
    QuadExt a = need_quad(o.alpha, "--alpha"), rm = need_quad(o.rho, "--rho");
    QuadExt rs = o.rho_s.empty() ? rm : QuadExt::parse(o.rho_s);
    QuadExt rl = o.rho_l.empty() ? rm : QuadExt::parse(o.rho_l);
    w = sturmian_shuffle(a, rs, rm, rl, &machine);
    auto mk = [&](const QuadExt& r) { return "sturmian:" + a.to_string() + ":" + r.to_string(); };
    spec = mk(rm);
    if (!w.sources.empty()) sources = {mk(rs), mk(rl)};
  } else if (kind == "characteristic") {
    if (!o.dir.empty()) {
      spec = "char:" + DirectiveSequence::parse(o.dir).to_string();
    } else {
      QuadExt a = need_quad(o.alpha, "--alpha or --dir");
      spec = "sturmian:" + a.to_string() + ":" + a.to_string();
    }
    w = characteristic_shuffle(parse_word_spec(spec));
  } else if (kind == "pal") {
    if (o.dir.empty()) throw ParseError("missing --dir");
    auto d = DirectiveSequence::parse(o.dir);
    if (o.variant != "01" && o.variant != "10") throw ParseError("variant must be 01 or 10");
    w = pal_shuffle(d, o.variant == "01" ? PalVariant::c01 : PalVariant::c10);
    spec = "pal" + o.variant + ":" + d.to_string();
  } else {
    throw ParseError("unknown shuffle '" + kind + "' (tm, sturmian, characteristic, pal, three, fibonacci, "
                     "period-doubling, full-complexity)");
  }
  if (depth == 0) depth = kind == "pal" ? 1000 : 10000;
  auto f = make_witness_file(w, depth, spec, sources);
  json j{{"schema", 1}, {"shuffle", kind}, {"word", spec}, {"k", f.k}, {"depth", depth},
         {"verified", true}, {"consumed", f.consumed}, {"steering_prefix", preview(f.steering)}};
  std::ostringstream text;
  text << "shuffle: " << kind << "\nword: " << spec << "\nk: " << f.k << "\nverified to depth " << depth
       << "\nconsumed: " << join(f.consumed) << "\nsteering: " << preview(f.steering) << '\n';
  if (o.trace) {
    if (!machine) throw DomainError("--trace is available for the sturmian shuffle only");
    json tr = json::array();
    text << "initial case: " << case_name(machine->initial_case()) << "\n# from to steps consumed_s consumed_m consumed_l\n";
    for (const auto& t : machine->transitions()) {
      tr.push_back({{"from", case_name(t.from)},  {"to", case_name(t.to)},  {"steps", t.steps},
                    {"consumed_s", t.consumed_s}, {"consumed_m", t.consumed_m}, {"consumed_l", t.consumed_l}});
      text << case_name(t.from) << ' ' << case_name(t.to) << ' ' << t.steps << ' ' << t.consumed_s << ' '
           << t.consumed_m << ' ' << t.consumed_l << '\n';
    }
    j["initial_case"] = case_name(machine->initial_case());
    j["trace"] = tr;
  }
  if (!o.emit.empty()) {
    write_file(o.emit, to_json(f).dump(2) + '\n');
    j["witness_file"] = o.emit;
    text << "witness written to " << o.emit << '\n';
  }
  emit(out, o, j, text.str());
  return 0;
}

// ----- check -----------------------------------------------------------------

std::vector<Letter> parse_order(const std::string& s, const AlphabetPtr& alphabet) {
  std::vector<Letter> order;
  if (s.empty()) return order;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto a = alphabet->find(tok);
    if (!a) throw ParseError("order: unknown letter '" + tok + "'");
    order.push_back(*a);
  }
  return order;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.horizon < 1) throw DomainError("horizon must be positive");
  if (o.check_kind == "delay") {
    QuadExt a = need_quad(o.alpha, "--alpha"), r = need_quad(o.rho, "--rho");
    auto d = shuffling_delay_sturmian(a, r, o.horizon);
    json j{{"schema", 1},
           {"alpha", quad_json(a)},
           {"rho", quad_json(r)},
           {"ab_borderfree", d.ab_borderfree},
           {"borderfree", d.borderfree},
           {"lex", d.lex},
           {"machine", d.machine ? json(*d.machine) : json(nullptr)},
           {"delay", d.delay},
           {"agree", true}};
    std::ostringstream t;
    t << "longest Abelian-border-free prefix: " << d.ab_borderfree << "\nlongest border-free prefix: " << d.borderfree
      << "\nleast lexicographic descent: " << d.lex << "\nrotation machine delay: " << (d.machine ? *d.machine : 0)
      << "\ndelay: " << d.delay << '\n';
    emit(out, o, j, t.str());
    return 0;
  }
  InfiniteWord x = parse_word_spec(o.word_spec);
  if (o.check_kind == "borders") {
    auto ab = longest_ab_borderfree_prefix(x, o.horizon);
    auto bf = longest_borderfree_prefix(x, o.horizon);
    json j{{"schema", 1},
           {"word", o.word_spec},
           {"horizon", o.horizon},
           {"ab_borderfree", {{"length", ab.length}, {"saturated", ab.saturated}}},
           {"borderfree", {{"length", bf.length}, {"saturated", bf.saturated}}}};
    std::ostringstream t;
    t << "longest Abelian-border-free prefix: " << ab.length << (ab.saturated ? " (saturated)" : "")
      << "\nlongest border-free prefix: " << bf.length << (bf.saturated ? " (saturated)" : "") << '\n';
    if (o.border_length > 0) {
      auto rep = abelian_borders(x.prefix(o.border_length));
      j["prefix_borders"] = {{"length", rep.length}, {"borders", rep.borders}, {"border_free", rep.border_free}};
      t << "Abelian borders of the prefix of length " << rep.length << ": "
        << (rep.borders.empty() ? std::string("none") : join(rep.borders)) << '\n';
    }
    emit(out, o, j, t.str());
    return 0;
  }
  if (o.check_kind == "lyndon") {
    auto rep = lyndon_status(x, parse_order(o.order, x.alphabet()), o.horizon);
    json j{{"schema", 1},
           {"word", o.word_spec},
           {"depth", rep.depth},
           {"lyndon_consistent", rep.lyndon_consistent},
           {"exact", rep.exact},
           {"violator", rep.violator ? json(*rep.violator) : json(nullptr)}};
    std::string t = rep.lyndon_consistent
                        ? std::string(rep.exact ? "Lyndon\n" : "consistent with Lyndon to depth " + std::to_string(rep.depth) + "\n")
                        : "not Lyndon: the shift by " + std::to_string(*rep.violator) + " is not larger\n";
    emit(out, o, j, t);
    return 0;
  }
  throw ParseError("unknown check '" + o.check_kind + "' (borders, lyndon, delay)");
}

// ----- stones ----------------------------------------------------------------

int cmd_stones(const Options& o, std::ostream& out) {
  EmbeddingParams p{need_quad(o.alpha, "--alpha"), need_quad(o.rho, "--rho")};
  p.validate();
  json base{{"schema", 1}, {"alpha", quad_json(p.alpha)}, {"rho", quad_json(p.rho)}};
  if (o.stones_kind == "path") {
    std::size_t n = o.n ? o.n : 1000;
    auto r = path_extract(p, n);
    json j = base;
    j["n"] = n;
    j["outcome"] = outcome_json(r.outcome);
    j["certified"] = r.certified;
    std::string t = outcome_text(r.outcome) + (r.certified ? "no stepping stone path (certified)\n" : "");
    if (!r.path.points.empty()) {
      json pts = json::array();
      std::string pre;
      for (std::size_t i = 0; i < std::min<std::size_t>(r.path.points.size(), 16); ++i) {
        pts.push_back({r.path.points[i].first, r.path.points[i].second});
        pre += (i ? " " : "") + std::string("(") + std::to_string(r.path.points[i].first) + "," +
               std::to_string(r.path.points[i].second) + ")";
      }
      j["path_prefix"] = pts;
      t += "path: " + pre + " ...\n";
    }
    if (!o.svg.empty()) write_file(o.svg, stones_svg(p, r.path));
    if (!o.csv.empty()) write_file(o.csv, stones_csv(p, r.path));
    emit(out, o, j, t);
    return 0;
  }
  if (o.stones_kind == "classify") {
    if (!in_regime(p)) throw DomainError("classification needs (1-rho)/2 < alpha < min(rho, 1-rho)");
    std::size_t n = o.n ? o.n : 10000;
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> pick(0, 4 * n);
    std::map<std::string, std::size_t> counts{{"D", 0}, {"T1", 0}, {"T2", 0}, {"F", 0}};
    std::size_t disagree = 0, tilde_runs = 0, tilde_longest = 0;
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t i = pick(rng), jj = pick(rng);
      CirclePoint x(QuadExt(static_cast<std::int64_t>(i)) * p.alpha), y(QuadExt(static_cast<std::int64_t>(jj)) * p.alpha);
      Region r = region_classify(x, y, p);
      if (r != region_by_definition(x, y, p)) ++disagree;
      ++counts[region_name(r)];
      if (r == Region::F) {
        for (int b = 1; b <= 2; ++b) {
          auto tm = tilde_map(x, y, b, p);
          ++tilde_runs;
          tilde_longest = std::max(tilde_longest, tm.transcript.size());
        }
      }
    }
    json j = base;
    j["points"] = n;
    j["seed"] = o.seed;
    j["counts"] = counts;
    j["disagreements"] = disagree;
    j["tilde_runs"] = tilde_runs;
    j["tilde_longest"] = tilde_longest;
    std::ostringstream t;
    t << "points: " << n << " (seed " << o.seed << ")\n";
    for (const auto& [k, v] : counts) t << k << ": " << v << '\n';
    t << "closed form vs definition disagreements: " << disagree << "\ntilde_map runs: " << tilde_runs
      << " (none reached D, longest transcript " << tilde_longest << ")\n";
    emit(out, o, j, t.str());
    return disagree == 0 ? 0 : 1;
  }
  if (o.stones_kind == "check") {
    std::size_t n = o.n ? o.n : 500;
    auto rep = graph_vs_embedding_check(p, n);
    json mism = json::array();
    for (const auto& m : rep.mismatches) mism.push_back({{"i", m.i}, {"j", m.j}, {"graph", m.graph}, {"embedding", m.embedding}});
    json j = base;
    j["n"] = n;
    j["ok"] = rep.ok;
    j["checked"] = rep.checked;
    j["mismatch_count"] = rep.mismatch_count;
    j["mismatches"] = mism;
    std::string t = std::string(rep.ok ? "ok" : "MISMATCH") + ": " + std::to_string(rep.checked) +
                    " lattice points with i + j <= " + std::to_string(n) + ", " + std::to_string(rep.mismatch_count) +
                    " mismatches\n";
    emit(out, o, j, t);
    return rep.ok ? 0 : 1;
  }
  throw ParseError("unknown stones command '" + o.stones_kind + "' (path, classify, check)");
}

// ----- verify ----------------------------------------------------------------

Morphism random_morphism(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 4), bit(0, 1);
  std::vector<std::vector<Letter>> images(2);
  for (auto& im : images) {
    int l = len(rng);
    for (int i = 0; i < l; ++i) im.push_back(static_cast<Letter>(bit(rng)));
  }
  return Morphism(Alphabet::binary(), Alphabet::binary(), images);
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::ifstream in(o.witness_path);
  if (!in) throw ParseError("cannot read " + o.witness_path);
  json raw;
  try {
    raw = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("witness: ") + e.what());
  }
  WitnessFile f = witness_file_from_json(raw);
  auto c = verify_witness_file(f);
  bool ok = c.report.ok && c.consumed_match;
  json j{{"schema", 1},       {"word", f.word},           {"k", f.k},
         {"depth", f.depth},   {"ok", ok},                 {"consumed", c.report.consumed},
         {"consumed_match", c.consumed_match}, {"degenerate", c.report.degenerate()}};
  std::ostringstream t;
  t << (ok ? "ok" : "FAILED") << ": " << f.word << " k=" << f.k << " depth " << f.depth
    << " consumed " << join(c.report.consumed) << '\n';
  if (!c.report.ok) t << "reason: " << c.report.reason << '\n';
  if (c.report.ok && !c.consumed_match) t << "reason: consumed lengths differ from the file\n";
  if (c.report.degenerate()) t << "note: some copy consumed nothing\n";
  if (ok && o.transport > 0) {
    if (!f.sources.empty()) throw DomainError("transport needs a self-shuffle witness");
    ShuffleWitness w;
    w.word = parse_word_spec(f.word);
    if (w.word.alphabet()->size() != 2) throw DomainError("transport uses binary morphisms");
    w.k = f.k;
    std::vector<Letter> s;
    for (char ch : f.steering) s.push_back(static_cast<Letter>(ch - '1'));
    w.steering = finite_steering(s, f.k);
    w.horizon = f.depth;
    std::mt19937_64 rng(o.seed);
    json runs = json::array();
    std::size_t passed = 0;
    for (std::size_t r = 0; r < o.transport; ++r) {
      Morphism tau = random_morphism(rng);
      auto tw = morphic_transport(w, tau);
      auto rep = verify_witness(tw, *tw.horizon);
      passed += rep.ok;
      runs.push_back({{"morphism", tau.to_string()}, {"depth", *tw.horizon}, {"ok", rep.ok}});
      t << "transport by " << tau.to_string() << ": " << (rep.ok ? "ok" : "FAILED") << " to depth " << *tw.horizon << '\n';
    }
    ok = passed == o.transport;
    j["transport"] = runs;
    j["ok"] = ok;
  }
  emit(out, o, j, t.str());
  return ok ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Search, construct and verify self-shuffles of infinite words", "selfshuffle"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "seed for randomized runs");

  auto* word = app.add_subcommand("word", "print a prefix of a word");
  word->fallthrough();
  word->add_option("spec", o.word_spec, word_spec_help())->required();
  word->add_option("--length", o.length, "prefix length");
  word->add_option("--alpha", o.alpha, "slope for 'sturmian'");
  word->add_option("--rho", o.rho, "intercept for 'sturmian'");
  word->add_option("--dir", o.dir, "directive sequence for 'char', 'pal01', 'pal10'");

  auto* search = app.add_subcommand("search", "search the shuffle graph");
  search->fallthrough();
  search->add_option("--word", o.word_spec, word_spec_help())->required();
  search->add_option("--k", o.k, "number of copies");
  search->add_option("--depth", o.depth, "search depth")->required();
  search->add_option("--strategy", o.strategy, "corridor or endpoint");
  search->add_option("--memory-budget", o.memory_budget, "stored tuples");
  search->add_option("--emit-witness", o.emit, "write the witness JSON here");

  auto* shuffle = app.add_subcommand("shuffle", "run an explicit construction and verify it");
  shuffle->fallthrough();
  shuffle->add_option("kind", o.kind, "tm, sturmian, characteristic, pal, three, fibonacci, period-doubling, full-complexity")
      ->required();
  shuffle->add_option("--depth", o.depth, "verification depth (default 10000, pal 1000)");
  shuffle->add_option("--alpha", o.alpha, "slope");
  shuffle->add_option("--rho", o.rho, "intercept of the shuffled word");
  shuffle->add_option("--rho-s", o.rho_s, "intercept of the smaller copy (default --rho)");
  shuffle->add_option("--rho-l", o.rho_l, "intercept of the larger copy (default --rho)");
  shuffle->add_option("--dir", o.dir, "directive sequence, e.g. 0,0,1,0,1,1,0,1,[0,1]");
  shuffle->add_option("--variant", o.variant, "01 or 10 for pal");
  shuffle->add_flag("--trace", o.trace, "print the rotation machine transitions");
  shuffle->add_option("--emit-witness", o.emit, "write the witness JSON here");

  auto* check = app.add_subcommand("check", "necessary conditions");
  check->fallthrough();
  check->add_option("kind", o.check_kind, "borders, lyndon or delay")->required();
  check->add_option("--word", o.word_spec, word_spec_help());
  check->add_option("--horizon", o.horizon, "scan horizon");
  check->add_option("--order", o.order, "letter order for lyndon, smallest first, e.g. 1,0");
  check->add_option("--prefix-borders", o.border_length, "also list the Abelian borders of this prefix");
  check->add_option("--alpha", o.alpha, "slope for delay");
  check->add_option("--rho", o.rho, "intercept for delay");

  auto* stones = app.add_subcommand("stones", "the stepping-stone model");
  stones->fallthrough();
  stones->add_option("kind", o.stones_kind, "path, classify or check")->required();
  stones->add_option("--alpha", o.alpha, "slope")->required();
  stones->add_option("--rho", o.rho, "intercept")->required();
  stones->add_option("--n", o.n, "depth (path), points (classify) or i + j bound (check)");
  stones->add_option("--svg", o.svg, "write the path figure here");
  stones->add_option("--csv", o.csv, "write the path points here");

  auto* verify = app.add_subcommand("verify", "re-verify a witness file");
  verify->fallthrough();
  verify->add_option("witness", o.witness_path, "witness JSON")->required();
  verify->add_option("--transport", o.transport, "also transport through this many random morphisms (uses --seed)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  try {
    if (word->parsed()) return cmd_word(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (shuffle->parsed()) return cmd_shuffle(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (stones->parsed()) return cmd_stones(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace selfshuffle
