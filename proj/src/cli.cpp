#include "jordanlab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "jordanlab/acceptance.hpp"
#include "jordanlab/error.hpp"
#include "jordanlab/identities.hpp"
#include "jordanlab/parser.hpp"
#include "jordanlab/tideal.hpp"

namespace jordanlab {

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr int kReportFormatVersion = 1;

using Json = nlohmann::ordered_json;

struct GlobalFlags {
  std::string format = "text";
  std::string cache_dir;
  uint64_t seed = kDefaultSeed;
  std::string primes;
  size_t max_cols = 20000;
  size_t max_rows = 400000;
  bool no_cache = false;
  bool deep = false;
};

ComponentOptions component_options(const GlobalFlags& g) {
  ComponentOptions c;
  c.max_cols = g.max_cols;
  c.max_rows = g.max_rows;
  c.cache_dir = g.cache_dir;
  c.no_cache = g.no_cache;
  if (!g.primes.empty()) {
    std::stringstream ss(g.primes);
    std::string part;
    size_t i = 0;
    while (std::getline(ss, part, ',') && i < 3) {
      c.primes[i++] = std::stoull(part);
    }
    if (i != 3)
      throw Error(ErrorCode::ParseError, "--primes wants three values");
  }
  return c;
}

void render_text(std::ostream& out, const Json& j, int indent = 0) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || v.is_array()) {
        out << pad << k << ":\n";
        render_text(out, v, indent + 1);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>()
                                                  : v.dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        out << pad << "-\n";
        render_text(out, v, indent + 1);
      } else {
        out << pad << "- "
            << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

class ReportEmitter {
 public:
  ReportEmitter(const GlobalFlags& flags, std::string verb)
      : flags_(flags), start_(std::chrono::steady_clock::now()) {
    j_["verb"] = std::move(verb);
    j_["inputs"] = Json::object();
    j_["results"] = Json::object();
  }

  Json& inputs() { return j_["inputs"]; }
  Json& results() { return j_["results"]; }

  void emit(ComponentContext* ctx = nullptr) {
    if (ctx) {
      j_["cache"] = {{"hits", ctx->stats().cache_hits},
                     {"writes", ctx->stats().cache_writes}};
      Json comps = Json::array();
      for (const auto& [d, ms] : ctx->stats().build_ms)
        comps.push_back({{"degree", d.str()}, {"ms", ms}});
      j_["timings"] = {{"total_ms", elapsed_ms()}, {"components", comps}};
    } else {
      j_["timings"] = {{"total_ms", elapsed_ms()}};
    }
    j_["tool_version"] = kToolVersion;
    j_["format_version"] = kReportFormatVersion;
    if (flags_.format == "json")
      std::cout << j_.dump(2) << "\n";
    else
      render_text(std::cout, j_);
  }

 private:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }
  const GlobalFlags& flags_;
  Json j_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<JPoly> resolve_generators(const std::string& spec) {
  std::vector<JPoly> gens;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    std::ifstream file(part);
    if (file) {
      std::string line;
      while (std::getline(file, line)) {
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        gens.push_back(parse_jordan(line));
      }
    } else {
      gens.push_back(catalog_value(part));
    }
  }
  if (gens.empty())
    throw Error(ErrorCode::ParseError,
                "no generators found in '" + spec + "'");
  return gens;
}

Json component_report(ComponentContext& ctx, const MultiDegree& d,
                      bool with_s_basis) {
  const ComponentSpace& sp = ctx.space(d);
  SubspaceCert cert = ctx.s_space(d);
  Json r;
  r["degree"] = d.str();
  r["basis_size"] = sp.basis_size();
  r["rank"] = sp.rank();
  r["quotient_dim"] = sp.quotient_dim();
  r["s_dim"] = cert.dim;
  r["prime_agreement"] = sp.prime_agreement();
  if (with_s_basis) {
    Json basis = Json::array();
    for (const auto& v : cert.vectors)
      basis.push_back(sp.from_coords(v).str());
    r["s_basis"] = basis;
  }
  return r;
}

int dispatch(const GlobalFlags& flags, const std::string& verb,
             const std::vector<std::string>& args) {
  if (verb == "lift") {
    Word u = parse_word(args.at(0));
    ReportEmitter rep(flags, "lift");
    rep.inputs()["word"] = u.str();
    LiftTable table;
    const JPoly& lifted = table.lift(u);
    rep.results()["jpoly"] = lifted.str();
    rep.results()["gamma"] = gamma(lifted).str();
    rep.results()["gamma_check"] = gamma(lifted) == symmetrize(u);
    Json trace = Json::array();
    for (const auto& t : table.rule_trace(u)) {
      Json e;
      e["word"] = t.rep.str();
      e["rule"] = t.rule;
      Json kids = Json::array();
      for (const Word& c : t.children) kids.push_back(c.str());
      e["children"] = kids;
      trace.push_back(e);
    }
    rep.results()["rule_trace"] = trace;
    rep.emit();
    return 0;
  }
  if (verb == "gamma") {
    JPoly f = parse_jordan(args.at(0));
    ReportEmitter rep(flags, "gamma");
    rep.inputs()["expr"] = f.str();
    rep.results()["gamma"] = gamma(f).str();
    rep.emit();
    return 0;
  }
  if (verb == "scheck") {
    JPoly f = parse_jordan(args.at(0));
    ReportEmitter rep(flags, "scheck");
    rep.inputs()["expr"] = f.str();
    AssocPoly g = gamma(f);
    rep.results()["gamma_zero"] = g.is_zero();
    if (!g.is_zero()) rep.results()["gamma"] = g.str();
    rep.emit();
    return 0;
  }
  if (verb == "zeroj") {
    JPoly f = parse_jordan(args.at(0));
    ReportEmitter rep(flags, "zeroj");
    rep.inputs()["expr"] = f.str();
    ComponentContext ctx(component_options(flags));
    JPoly witness;
    bool zero = ctx.is_zero_in_J(f, &witness);
    rep.results()["zero_in_J"] = zero;
    if (!zero) rep.results()["witness"] = witness.str();
    rep.emit(&ctx);
    return 0;
  }
  if (verb == "jdim" || verb == "sdim") {
    MultiDegree d = parse_multidegree(args.at(0));
    ReportEmitter rep(flags, verb);
    rep.inputs()["degree"] = d.str();
    ComponentContext ctx(component_options(flags));
    rep.results() = component_report(ctx, d, verb == "sdim");
    rep.emit(&ctx);
    return 0;
  }
  if (verb == "tdim") {
    std::vector<JPoly> gens = resolve_generators(args.at(0));
    MultiDegree d = parse_multidegree(args.at(1));
    ReportEmitter rep(flags, "tdim");
    rep.inputs()["generators"] = args.at(0);
    rep.inputs()["degree"] = d.str();
    ComponentContext ctx(component_options(flags));
    TComponent tc = t_component(ctx, gens, d);
    SubspaceCert s = ctx.s_space(d);
    rep.results()["t_dim"] = tc.cert.dim;
    rep.results()["s_dim"] = s.dim;
    rep.results()["instances"] = tc.instances.size();
    rep.results()["quotient_dim"] = tc.cert.ambient_dim;
    rep.emit(&ctx);
    return 0;
  }
  if (verb == "tmember") {
    JPoly f = parse_jordan(args.at(0));
    std::vector<JPoly> gens = resolve_generators(args.at(1));
    ReportEmitter rep(flags, "tmember");
    rep.inputs()["expr"] = f.str();
    rep.inputs()["generators"] = args.at(1);
    ComponentContext ctx(component_options(flags));
    TMembership m = t_membership(ctx, f, gens);
    rep.results()["member"] = m.member;
    rep.results()["verified"] = m.verified;
    if (m.member) {
      Json coeffs = Json::array();
      for (const auto& [idx, c] : m.coefficients)
        coeffs.push_back({{"instance", idx}, {"coefficient", rat_str(c)}});
      rep.results()["certificate"] = coeffs;
    }
    rep.emit(&ctx);
    return m.member && !m.verified ? 1 : 0;
  }
  if (verb == "catalog") {
    ReportEmitter rep(flags, "catalog");
    if (!args.empty() && args.at(0) == "get") {
      JPoly v = catalog_value(args.at(1));
      rep.inputs()["name"] = args.at(1);
      rep.results()["value"] = v.str();
      rep.results()["gamma_zero"] = gamma(v).is_zero();
      rep.emit();
      return 0;
    }
    Json list = Json::array();
    for (const auto& e : builtin_catalog()) {
      Json item;
      item["name"] = e.name;
      item["description"] = e.description;
      item["multidegree"] =
          e.value.is_zero() ? "0" : e.value.multidegree().str();
      item["gamma_zero"] = gamma(e.value).is_zero();
      if (e.known_zero_in_J) item["zero_in_J"] = *e.known_zero_in_J;
      list.push_back(item);
    }
    rep.results()["entries"] = list;
    rep.results()["families"] = "g:<word over x,y> (commutator s-identities)";
    rep.emit();
    return 0;
  }
  if (verb == "albert-eval" || verb == "sym-eval") {
    JPoly f = parse_jordan(args.at(0));
    int points = args.size() > 1 ? std::stoi(args.at(1)) : 1;
    int k = args.size() > 2 ? std::stoi(args.at(2)) : 4;
    ReportEmitter rep(flags, verb);
    rep.inputs()["expr"] = f.str();
    rep.inputs()["seed"] = flags.seed;
    rep.inputs()["points"] = points;
    int width = 0;
    for (const auto& [t, c] : f.terms())
      width = std::max(width, t.multidegree().width());
    SplitMix64 rng(flags.seed);
    Json per_point = Json::array();
    size_t nonzero = 0;
    std::string first_value;
    for (int i = 0; i < points; ++i) {
      bool zero;
      std::string value;
      if (verb == "albert-eval") {
        std::vector<AlbertElement> pt;
        for (int g = 0; g < std::max(width, 3); ++g)
          pt.push_back(random_albert(rng));
        AlbertElement v = evaluate(f, pt, AlbertElement());
        zero = v.is_zero();
        value = v.str();
      } else {
        rep.inputs()["k"] = k;
        std::vector<SymMatrix> pt;
        for (int g = 0; g < std::max(width, 3); ++g)
          pt.push_back(random_sym(rng, k));
        SymMatrix v = evaluate(f, pt, SymMatrix(k));
        zero = v.is_zero();
        value = v.str();
      }
      if (!zero) ++nonzero;
      if (i == 0) first_value = value;
      per_point.push_back({{"point", i}, {"zero", zero}});
    }
    rep.results()["nonzero_points"] = nonzero;
    rep.results()["per_point"] = per_point;
    rep.results()["first_value"] = first_value;
    rep.emit();
    return 0;
  }
  if (verb == "verify-all") {
    AcceptanceOptions opts;
    opts.comp = component_options(flags);
    opts.seed = flags.seed;
    opts.deep = flags.deep;
    if (flags.deep) {
      opts.comp.max_cols = std::max<size_t>(opts.comp.max_cols, 60000);
      opts.comp.max_rows = std::max<size_t>(opts.comp.max_rows, 2000000);
    }
    if (flags.format == "json") {
      AcceptanceReport r = run_acceptance(opts, nullptr);
      ReportEmitter rep(flags, "verify-all");
      Json list = Json::array();
      for (const auto& c : r.criteria)
        list.push_back({{"id", c.id},
                        {"name", c.name},
                        {"pass", c.pass},
                        {"gating", c.gating},
                        {"details", c.details},
                        {"ms", c.elapsed_ms}});
      rep.results()["criteria"] = list;
      rep.results()["all_pass"] = r.all_pass();
      rep.emit();
      return r.all_pass() ? 0 : 1;
    }
    AcceptanceReport r = run_acceptance(opts, &std::cout);
    std::cout << (r.all_pass() ? "verify-all: PASS" : "verify-all: FAIL")
              << "\n";
    return r.all_pass() ? 0 : 1;
  }
  throw Error(ErrorCode::ParseError, "unknown verb " + verb);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"jordanlab: exact computation around Jordan s-identities in "
               "three variables"};
  app.require_subcommand(1);

  GlobalFlags flags;
  if (const char* env = std::getenv("JORDANLAB_CACHE"))
    flags.cache_dir = env;
  app.add_option("--format", flags.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", flags.cache_dir,
                 "Component cache directory (default: $JORDANLAB_CACHE)");
  app.add_option("--seed", flags.seed, "Seed for evaluation points");
  app.add_option("--primes", flags.primes,
                 "Three comma-separated elimination primes");
  app.add_option("--max-cols", flags.max_cols, "Column cap per component");
  app.add_option("--max-rows", flags.max_rows, "Relation row cap");
  app.add_flag("--no-cache", flags.no_cache, "Bypass the disk cache");
  app.add_flag("--deep", flags.deep,
               "Include the degree-9 T-ideal comparison in verify-all");

  struct Sub {
    CLI::App* cmd;
    std::vector<std::string>* args;
  };
  std::map<std::string, std::vector<std::string>> arg_store;
  auto add_sub = [&](const std::string& name, const std::string& desc,
                     const std::vector<std::pair<std::string, bool>>& pos) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    auto& store = arg_store[name];
    store.resize(pos.size());
    for (size_t i = 0; i < pos.size(); ++i) {
      auto* opt = cmd->add_option(pos[i].first, store[i]);
      if (pos[i].second) opt->required();
    }
    return cmd;
  };

  add_sub("lift", "Shirshov-Cohn lift of a word", {{"word", true}});
  add_sub("gamma", "Image of a Jordan expression under gamma",
          {{"expr", true}});
  add_sub("scheck", "Check gamma(expr) = 0", {{"expr", true}});
  add_sub("zeroj", "Check expr = 0 in the free Jordan algebra",
          {{"expr", true}});
  add_sub("jdim", "Component dimensions at a multidegree",
          {{"degree", true}});
  add_sub("sdim", "s-identity space at a multidegree", {{"degree", true}});
  add_sub("tdim", "T-ideal component dimension",
          {{"generators", true}, {"degree", true}});
  CLI::App* tmember_cmd =
      app.add_subcommand("tmember", "T-ideal membership with certificate");
  auto& tmember_args = arg_store["tmember"];
  tmember_args.resize(2);
  tmember_cmd->add_option("expr", tmember_args[0])->required();
  tmember_cmd->add_option("--gens", tmember_args[1], "Generator list")
      ->required();
  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "List or emit catalog identities");
  auto& catalog_args = arg_store["catalog"];
  catalog_cmd->add_option("action", catalog_args)
      ->expected(0, 2);
  CLI::App* albert_cmd =
      app.add_subcommand("albert-eval", "Evaluate in the Albert algebra");
  auto& albert_args = arg_store["albert-eval"];
  albert_args.resize(3);
  albert_args[1] = "1";
  albert_args[2] = "4";
  albert_cmd->add_option("expr", albert_args[0])->required();
  albert_cmd->add_option("--points", albert_args[1], "Number of points");
  CLI::App* sym_cmd =
      app.add_subcommand("sym-eval", "Evaluate in H_k(Q)");
  auto& sym_args = arg_store["sym-eval"];
  sym_args.resize(3);
  sym_args[1] = "1";
  sym_args[2] = "4";
  sym_cmd->add_option("expr", sym_args[0])->required();
  sym_cmd->add_option("--points", sym_args[1], "Number of points");
  sym_cmd->add_option("--k", sym_args[2], "Matrix size");
  add_sub("verify-all", "Run the acceptance criteria", {});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    return dispatch(flags, sub->get_name(), arg_store[sub->get_name()]);
  } catch (const Error& e) {
    std::cerr << "jordanlab: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "jordanlab: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace jordanlab
