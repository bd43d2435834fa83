#include "sandwich/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "sandwich/eggbox.hpp"
#include "sandwich/generation.hpp"
#include "sandwich/idempotents.hpp"
#include "sandwich/regular.hpp"
#include "sandwich/verify.hpp"

namespace sandwich {

namespace {

struct CliConfig {
  std::string variant = "pt";
  int m = 0;
  int n = 0;
  std::string a_text;
  std::string scope = "regular";
  std::string format = "text";
  long long cap = kDefaultCap;
  long long budget = 2'000'000;
  int max_size = 2;
  int threads = 1;
  std::string out_path;
  std::string f_text;
  std::string kind = "D";
};

Sandwich make_sandwich(const CliConfig& cfg) {
  Variant v = variant_from_string(cfg.variant);
  PartialMap a = parse_map(cfg.a_text, cfg.n, cfg.m, v);
  return Sandwich(v, cfg.m, cfg.n, a, cfg.cap);
}

void write_payload(const CliConfig& cfg, const std::string& payload,
                   std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + cfg.out_path);
  f << payload;
}

int cmd_info(const CliConfig& cfg, std::ostream& out) {
  Sandwich S = make_sandwich(cfg);
  out << "variant: " << variant_name(S.variant()) << "\n";
  out << "m: " << S.m() << "\nn: " << S.n() << "\n";
  out << "a: " << format_map(S.a()) << "\n";
  auto c = classify(S.a());
  out << "a is: " << (c.full ? "full" : "non-full") << ", "
      << (c.injective ? "injective" : "non-injective") << ", "
      << (c.surjective ? "surjective" : "non-surjective") << "\n";
  out << "b: " << format_map(S.b()) << "\n";
  out << "alpha: " << S.alpha() << "\nbeta: " << S.beta()
      << "\nxi: " << S.xi() << "\n";
  out << "lambda:";
  for (int l : S.lambda()) out << " " << l;
  out << "\nLambda: " << S.Lambda() << "\n";
  long long size = hom_set_size(S.variant(), S.m(), S.n(), cfg.cap);
  if (size >= 0)
    out << "elements: " << size << "\n";
  else
    out << "elements: above cap\n";
  return 0;
}

int cmd_enumerate(const CliConfig& cfg, std::ostream& out) {
  Sandwich S = make_sandwich(cfg);
  for (const PartialMap& f : S.hom_set().elements())
    out << format_map(f) << "\n";
  return 0;
}

int cmd_pset(const CliConfig& cfg, std::ostream& out) {
  Sandwich S = make_sandwich(cfg);
  PartialMap f = parse_map(cfg.f_text, cfg.m, cfg.n, S.variant());
  PSetFlags flags = S.pset(f);
  out << "f: " << format_map(f) << "\n";
  out << "p1: " << (flags.p1 ? "yes" : "no") << "\n";
  out << "p2: " << (flags.p2 ? "yes" : "no") << "\n";
  out << "p3: " << (flags.p3 ? "yes" : "no") << "\n";
  out << "regular: " << (flags.regular ? "yes" : "no") << "\n";
  return 0;
}

int cmd_greens(const CliConfig& cfg, std::ostream& out) {
  Sandwich S = make_sandwich(cfg);
  PartialMap f = parse_map(cfg.f_text, cfg.m, cfg.n, S.variant());
  GreenKind kind = green_kind_from_string(cfg.kind);
  ClassDescriptor cd = S.green_class(kind, f);
  out << green_kind_name(kind) << "^a-class of " << format_map(f) << ": "
      << cd.members.size() << " element(s)\n";
  for (const PartialMap& g : cd.members) out << "  " << format_map(g) << "\n";
  return 0;
}

int cmd_regular(const CliConfig& cfg, std::ostream& out) {
  Sandwich S = make_sandwich(cfg);
  ExactInt formula = reg_size_formula(S);
  out << "|Reg| formula: " << formula << "\n";
  auto regs = S.regular_elements();
  out << "|Reg| enumerated: " << regs.size() << "\n";
  out << "agreement: "
      << (formula == ExactInt(static_cast<long long>(regs.size())) ? "yes"
                                                                   : "NO")
      << "\n";
  for (auto [mu, count] : S.regular_dclasses())
    out << "D^a_" << mu << ": " << count << " element(s)\n";
  if (S.variant() != Variant::I)
    out << "rank(Reg) formula: " << reg_rank_formula(S) << "\n";
  else
    out << "rank(Reg): not provided for variant i (symmetric inverse "
           "monoid)\n";
  if (formula != ExactInt(static_cast<long long>(regs.size()))) return 2;
  return 0;
}

int cmd_idempotents(const CliConfig& cfg, std::ostream& out) {
  Sandwich S = make_sandwich(cfg);
  ExactInt formula = idempotent_count_formula(S);
  auto idems = idempotents(S);
  out << "idempotents formula: " << formula << "\n";
  out << "idempotents enumerated: " << idems.size() << "\n";
  out << "agreement: "
      << (formula == ExactInt(static_cast<long long>(idems.size())) ? "yes"
                                                                    : "NO")
      << "\n";
  if (formula != ExactInt(static_cast<long long>(idems.size()))) return 2;
  return 0;
}

int cmd_egen(const CliConfig& cfg, std::ostream& out) {
  Sandwich S = make_sandwich(cfg);
  auto egen = egen_closure(S);
  auto idems = idempotents(S);
  out << "|E|: " << idems.size() << "\n";
  out << "|<E>|: " << egen.size() << "\n";
  long long by_char = 0;
  for (const PartialMap& f : S.hom_set().elements())
    if (egen_membership(S, f)) ++by_char;
  out << "|<E>| by characterisation: " << by_char << "\n";
  EgenRankFormula rep = egen_rank_formula(S);
  if (rep.semilattice_size_only) {
    out << "idempotent-generated subsemigroup is the semilattice E; |E| = "
        << rep.rank << "\n";
  } else {
    out << "rank formula: " << rep.rank << "\n";
    out << "idrank formula: " << rep.idrank << "\n";
  }
  auto witness = egen_witness(S);
  out << "witness generators: " << witness.size() << "\n";
  bool wit_ok = star_closure(S, witness) == egen;
  out << "witness generates: " << (wit_ok ? "yes" : "NO") << "\n";
  if (cfg.budget > 0) {
    RankSearchResult id = idrank_exact(S, egen, cfg.budget);
    if (id.exact)
      out << "idrank exact: " << id.value << "\n";
    else
      out << "idrank exact: in [" << id.lower << ", " << id.upper
          << "] (budget exhausted)\n";
  }
  if (by_char != static_cast<long long>(egen.size()) || !wit_ok) return 2;
  return 0;
}

int cmd_rank(const CliConfig& cfg, std::ostream& out) {
  Sandwich S = make_sandwich(cfg);
  GenReport rep = rank_formula(S);
  out << "rank formula: " << rep.rank_value << "\n";
  out << "case: " << rep.case_tag << "\n";
  out << "lower bound: " << rep.lower_bound_witness << "\n";
  out << "generating set (" << rep.generating_set.size() << "):\n";
  for (const PartialMap& g : rep.generating_set)
    out << "  " << format_map(g) << "\n";
  bool gen_ok = is_generating(S, rep.generating_set);
  out << "generates: " << (gen_ok ? "yes" : "NO") << "\n";
  std::string cert_note;
  auto cert = certify_lower_bound(S, rep, &cert_note);
  if (cert)
    out << "certified lower bound: " << *cert << " (" << cert_note << ")\n";
  else
    out << "certified lower bound: unavailable\n";
  int code = gen_ok ? 0 : 2;
  if (cfg.budget > 0) {
    RankSearchResult exact = rank_exact(S, cfg.budget);
    if (exact.exact) {
      out << "rank exact: " << exact.value << "\n";
      if (exact.value != rep.rank_value) code = 2;
    } else {
      out << "rank exact: in [" << exact.lower << ", " << exact.upper
          << "] (budget exhausted)\n";
      if (code == 0) code = 3;
    }
  }
  return code;
}

int cmd_eggbox(const CliConfig& cfg, std::ostream& out) {
  Sandwich S = make_sandwich(cfg);
  EggBoxScope scope = cfg.scope == "full" ? EggBoxScope::Full
                                          : EggBoxScope::Regular;
  EggBox box = build_eggbox(S, scope);
  std::string payload;
  if (cfg.format == "json")
    payload = render_json(box);
  else if (cfg.format == "dot")
    payload = render_dot(box);
  else
    payload = render_ascii(box);
  write_payload(cfg, payload, out);
  return 0;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  VerifyOptions opt;
  opt.variant = variant_from_string(cfg.variant);
  opt.max_size = cfg.max_size;
  opt.cap = cfg.cap;
  opt.budget = cfg.budget;
  VerifyOutcome outcome = run_verify(opt, out);
  if (!outcome.ok) return 2;
  if (outcome.budget_exhausted) return 3;
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CliConfig cfg;
  if (const char* env_cap = std::getenv("SANDWICH_CAP"))
    cfg.cap = std::atoll(env_cap);

  CLI::App app{"sandwich semigroups of partial transformations"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool needs_a) {
    sub->add_option("--variant", cfg.variant, "pt, t or i")
        ->check(CLI::IsMember({"pt", "t", "i"}));
    sub->add_option("--m", cfg.m, "size of the source ground set X");
    sub->add_option("--n", cfg.n, "size of the target ground set Y");
    auto* a_opt = sub->add_option("--a", cfg.a_text,
                                  "sandwich element, tableau for Y -> X");
    if (needs_a) a_opt->required();
    sub->add_option("--cap", cfg.cap, "enumeration cap");
    sub->add_option("--budget", cfg.budget,
                    "closure budget for exact searches (0 disables)");
    sub->add_option("--threads", cfg.threads, "accepted for compatibility");
    sub->add_option("--out", cfg.out_path, "write output to a file");
  };

  auto* info = app.add_subcommand("info", "parameters of the sandwich");
  add_common(info, true);
  auto* enumerate = app.add_subcommand("enumerate", "list the hom-set");
  add_common(enumerate, true);
  auto* pset = app.add_subcommand("pset", "P-set flags of one element");
  add_common(pset, true);
  pset->add_option("f", cfg.f_text, "element tableau")->required();
  auto* greens = app.add_subcommand("greens", "sandwich Green's class");
  add_common(greens, true);
  greens->add_option("kind", cfg.kind, "R, L, H, D or J")->required();
  greens->add_option("f", cfg.f_text, "element tableau")->required();
  auto* regular = app.add_subcommand("regular", "regular subsemigroup");
  add_common(regular, true);
  auto* idem = app.add_subcommand("idempotents", "idempotent census");
  add_common(idem, true);
  auto* egen = app.add_subcommand("egen",
                                  "idempotent-generated subsemigroup");
  add_common(egen, true);
  auto* rank = app.add_subcommand("rank", "rank of the sandwich semigroup");
  add_common(rank, true);
  auto* eggbox = app.add_subcommand("eggbox", "egg-box diagram");
  add_common(eggbox, true);
  eggbox->add_option("--scope", cfg.scope, "full or regular")
      ->check(CLI::IsMember({"full", "regular"}));
  eggbox->add_option("--format", cfg.format, "json, dot, ascii or text")
      ->check(CLI::IsMember({"json", "dot", "ascii", "text"}));
  auto* verify = app.add_subcommand("verify", "differential conformance");
  add_common(verify, false);
  verify->add_option("--max-size", cfg.max_size, "check all a at sizes <= N");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (info->parsed()) return cmd_info(cfg, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out);
    if (pset->parsed()) return cmd_pset(cfg, out);
    if (greens->parsed()) return cmd_greens(cfg, out);
    if (regular->parsed()) return cmd_regular(cfg, out);
    if (idem->parsed()) return cmd_idempotents(cfg, out);
    if (egen->parsed()) return cmd_egen(cfg, out);
    if (rank->parsed()) return cmd_rank(cfg, out);
    if (eggbox->parsed()) return cmd_eggbox(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const std::length_error& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 1;
}

}  // namespace sandwich
