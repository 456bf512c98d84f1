// vll: command-line front end.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vll/deduction.hpp"
#include "vll/gset.hpp"
#include "vll/io.hpp"
#include "vll/lattice.hpp"
#include "vll/replay.hpp"
#include "vll/semigroup.hpp"
#include "vll/variety.hpp"
#include "vll/verify.hpp"

using namespace vll;

namespace {

  std::vector<std::string> split_list(std::string const& text) {
    std::vector<std::string> out;
    std::stringstream        ss(text);
    std::string              item;
    while (std::getline(ss, item, ',')) {
      auto first = item.find_first_not_of(' ');
      auto last  = item.find_last_not_of(' ');
      if (first != std::string::npos) {
        out.push_back(item.substr(first, last - first + 1));
      }
    }
    return out;
  }

  std::vector<Word> parse_words(std::string const& text) {
    std::vector<Word> out;
    for (auto const& w : split_list(text)) {
      out.push_back(parse_word(w));
    }
    return out;
  }

  std::vector<Identity> identities_from(std::vector<std::string> const& ids,
                                        std::string const&              file) {
    std::vector<Identity> out;
    for (auto const& text : ids) {
      out.push_back(parse_identity(text));
    }
    if (!file.empty()) {
      auto in   = open_input(file);
      auto more = read_identities(in);
      out.insert(out.end(), more.begin(), more.end());
    }
    return out;
  }

  FiniteSemigroup model_from(std::string const& spec) {
    if (spec.rfind("file:", 0) == 0) {
      auto in = open_input(spec.substr(5));
      return read_cayley_table(in, spec.substr(5));
    }
    return builtin_semigroup(spec);
  }

  //////////////////////////////////////////////////////////////////////
  // check
  //////////////////////////////////////////////////////////////////////

  struct CheckArgs {
    std::string              variety;
    std::string              patterns;
    std::vector<std::string> ids;
    std::string              file;
  };

  int cmd_check(CheckArgs const& a) {
    VarietyId v = VarietyId::trivial();
    if (a.variety == "ZR" || a.variety == "ZeroReduced") {
      if (a.patterns.empty()) {
        throw CLI::ValidationError("--patterns",
                                   "the ZR variety needs --patterns");
      }
      v = VarietyId::zero_reduced(parse_words(a.patterns));
    } else {
      v = parse_variety(a.variety);
    }
    auto const ids = identities_from(a.ids, a.file);
    if (ids.empty()) {
      throw CLI::ValidationError("--id", "no identities given");
    }
    bool all = true;
    for (auto const& id : ids) {
      auto r = holds(v, id);
      all &= r.holds;
      std::cout << to_string(id) << ": " << (r.holds ? "holds" : "fails")
                << " in " << to_string(v) << " (" << to_string(r.clause);
      if (r.witness) {
        std::cout << ", letter " << to_string(*r.witness);
      }
      std::cout << ")\n";
    }
    return all ? 0 : 1;
  }

  //////////////////////////////////////////////////////////////////////
  // replay
  //////////////////////////////////////////////////////////////////////

  int cmd_replay(std::string const& u, std::string const& v, bool json) {
    auto const r = proof_replay(parse_word(u), parse_word(v));
    if (json) {
      std::cout << to_json(r) << '\n';
    } else {
      for (auto const& line : r.trace) {
        std::cout << line << '\n';
      }
      std::cout << "structure holds: "
                << (r.structure_holds() ? "yes" : "no") << '\n';
    }
    return r.structure_holds() ? 0 : 1;
  }

  //////////////////////////////////////////////////////////////////////
  // verify-paper
  //////////////////////////////////////////////////////////////////////

  int cmd_verify(std::string const& profile_name,
                 std::string const& json_path,
                 std::string const& only) {
    auto const profile = resolve_profile(profile_name);
    std::cout << "profile " << profile.name << '\n';
    auto report = run_suite(profile, split_list(only), [](auto const& c) {
      std::cout << std::left << std::setw(5) << c.id << ' ' << std::setw(8)
                << to_string(c.status) << std::right << std::setw(8)
                << c.millis.count() << " ms  " << c.title << '\n';
      if (!c.witness.empty()) {
        std::cout << "      witness: " << c.witness << '\n';
      }
    });
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) {
        throw std::runtime_error("cannot write " + json_path);
      }
      out << to_json(report) << '\n';
    }
    std::cout << (report.passed() ? "all checks passed" : "checks failed")
              << '\n';
    return report.passed() ? 0 : 1;
  }

  //////////////////////////////////////////////////////////////////////
  // lattice
  //////////////////////////////////////////////////////////////////////

  struct LatticeArgs {
    std::string file;
    std::string catalog;
    bool        classify    = false;
    bool        congruences = false;
    bool        lemmas      = false;
  };

  std::string show_pair(FiniteLattice const& L, LawWitness w) {
    return "(" + L.label(w.first) + ", " + L.label(w.second) + ")";
  }

  int cmd_lattice(LatticeArgs const& a) {
    if (a.file.empty() == a.catalog.empty()) {
      throw CLI::ValidationError("lattice",
                                 "give exactly one of --file, --catalog");
    }
    FiniteLattice L = [&] {
      if (!a.file.empty()) {
        auto in = open_input(a.file);
        return read_lattice(in);
      }
      return catalog_lattice(a.catalog);
    }();
    std::cout << "lattice of size " << L.size() << ", bottom "
              << L.label(L.bottom()) << ", top " << L.label(L.top())
              << ", 0-distributive: "
              << (is_zero_distributive(L) ? "yes" : "no") << '\n';
    int status = 0;
    if (a.classify) {
      for (std::size_t x = 0; x < L.size(); ++x) {
        auto const c = classify_element(L, x);
        std::cout << L.label(x) << ':';
        auto flag = [&](char const* name, bool ok,
                        std::optional<LawWitness> const& w) {
          std::cout << ' ' << (ok ? "" : "non-") << name;
          if (w) {
            std::cout << show_pair(L, *w);
          }
        };
        flag("modular", c.modular, c.modular_witness);
        flag("lower-modular", c.lower_modular, c.lower_modular_witness);
        flag("upper-modular", c.upper_modular, c.upper_modular_witness);
        flag("distributive", c.distributive, c.distributive_witness);
        std::cout << '\n';
      }
    }
    if (a.congruences) {
      auto const thetas = enumerate_lattice_congruences(L);
      std::cout << thetas.size() << " congruences\n";
      for (auto const& t : thetas) {
        for (auto const& cls : t.classes()) {
          std::cout << '{';
          for (std::size_t i = 0; i < cls.size(); ++i) {
            std::cout << (i ? "," : "") << L.label(cls[i]);
          }
          std::cout << '}';
        }
        std::cout << '\n';
      }
    }
    if (a.lemmas) {
      auto lift = check_lower_modular_lift(L);
      auto pres = check_upper_modular_preservation(L);
      std::cout << "lower-modular lift: "
                << (lift ? "counterexample x=" + L.label(lift->first)
                               + ", a=" + L.label(lift->second)
                         : std::string("holds"))
                << '\n'
                << "upper-modular preservation: "
                << (pres ? "counterexample at " + L.label(pres->x)
                         : std::string("holds"))
                << '\n';
      status = lift || pres ? 1 : 0;
    }
    return status;
  }

  //////////////////////////////////////////////////////////////////////
  // gset
  //////////////////////////////////////////////////////////////////////

  int cmd_gset(std::string const& lambda_text,
               bool               enumerate,
               bool               list,
               std::size_t        max_carrier) {
    auto const lambda = parse_lambda(lambda_text);
    auto const G      = build_wlambda(lambda);
    std::cout << "|W_(" << to_string(lambda) << ")| = " << G.size()
              << ", |S_lambda| = " << G.group().size() << '\n';
    if (list) {
      for (auto const& w : G.carrier()) {
        std::cout << to_string(w) << '\n';
      }
    }
    if (enumerate) {
      EnumerationLimits limits;
      limits.max_carrier = max_carrier;
      auto const con     = enumerate_congruences(G, limits);
      std::cout << con.size() << " congruences\n";
      for (auto const& c : con) {
        for (auto const& cls : c.partition().classes()) {
          std::cout << '{';
          for (std::size_t i = 0; i < cls.size(); ++i) {
            std::cout << (i ? "," : "") << to_string(G.carrier()[cls[i]]);
          }
          std::cout << '}';
        }
        std::cout << '\n';
      }
    }
    return 0;
  }

  //////////////////////////////////////////////////////////////////////
  // sapir
  //////////////////////////////////////////////////////////////////////

  int cmd_sapir(std::size_t        r,
                std::string const& basis,
                std::string const& basis_file,
                std::string const& verbal) {
    auto words = parse_words(basis);
    if (!basis_file.empty()) {
      auto        in = open_input(basis_file);
      std::string line;
      while (std::getline(in, line)) {
        auto cut = line.find('#');
        for (auto& w : parse_words(line.substr(0, cut))) {
          words.push_back(std::move(w));
        }
      }
    }
    auto const s = sapir_with_verbal(r, words, parse_words(verbal));
    std::cout << "label: " << s.generated.label << '\n';
    for (std::size_t i = 0; i < s.generated.equations.size(); ++i) {
      std::cout << to_string(s.generated.equations[i]) << "  # "
                << to_string(s.families[i]) << '\n';
    }
    return 0;
  }

  //////////////////////////////////////////////////////////////////////
  // derive, refute
  //////////////////////////////////////////////////////////////////////

  void print_trace(DeductionResult const& r) {
    for (auto const& step : r.trace) {
      std::cout << "  " << to_string(step.before) << " -> "
                << to_string(step.after);
      if (step.kind == RewriteStep::Kind::zero_collapse) {
        std::cout << "  (zero collapse)";
      } else {
        std::cout << "  (axiom " << step.axiom + 1
                  << (step.reversed ? " reversed" : "") << " at "
                  << step.position << ')';
      }
      std::cout << '\n';
    }
  }

  int cmd_derive(std::string const&              system_file,
                 std::vector<std::string> const& axioms,
                 std::string const&              goal_text,
                 Bounds const&                   bounds) {
    IdentitySystem sigma;
    if (!system_file.empty()) {
      auto in = open_input(system_file);
      sigma   = read_identity_system(in);
    }
    for (auto const& a : axioms) {
      sigma.add(parse_identity(a));
    }
    auto const goal = parse_identity(goal_text);
    auto const r    = derive(sigma, goal, bounds);
    std::cout << to_string(goal) << ": " << to_string(r.outcome) << " ("
              << r.states << " states)\n";
    if (r.proved()) {
      print_trace(r);
      bool ok = replay_trace(sigma, goal, r.trace);
      std::cout << "trace replays: " << (ok ? "yes" : "no") << '\n';
      return ok ? 0 : 1;
    }
    return 1;
  }

  int cmd_refute(std::vector<std::string> const& models,
                 std::string const&              id_text) {
    std::vector<FiniteSemigroup> ms;
    for (auto const& m : models) {
      ms.push_back(model_from(m));
    }
    auto const id = parse_identity(id_text);
    auto const r  = refute(ms, id);
    std::cout << to_string(id) << ": " << to_string(r.outcome);
    if (r.outcome == DeductionResult::Outcome::refuted) {
      std::cout << " in " << r.model << " at " << to_string(*r.assignment);
    }
    std::cout << '\n';
    return r.outcome == DeductionResult::Outcome::refuted ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semigroup varieties, G-set congruences and finite lattices"};
  app.require_subcommand(1);
  int status = 0;

  CheckArgs check;
  auto*     sc = app.add_subcommand("check", "decide identities in a variety");
  sc->add_option("--variety", check.variety,
                 "T, SL, LZ, RZ, COM, C<m>, P, Prev or ZR")
      ->required();
  sc->add_option("--patterns", check.patterns,
                 "comma-separated zero patterns for ZR");
  sc->add_option("--id", check.ids, "identity \"u = v\" or \"w = 0\"");
  sc->add_option("--file", check.file, "identity file")
      ->check(CLI::ExistingFile);
  sc->callback([&] { status = cmd_check(check); });

  std::string u, v;
  bool        replay_json = false;
  auto*       rp = app.add_subcommand("replay", "replay the G-set argument");
  rp->add_option("--u", u, "left word")->required();
  rp->add_option("--v", v, "right word")->required();
  rp->add_flag("--json", replay_json, "print a JSON report");
  rp->callback([&] { status = cmd_replay(u, v, replay_json); });

  std::string profile = "quick", json_path, only;
  auto*       vp      = app.add_subcommand("verify-paper",
                                    "run the acceptance suite");
  vp->add_option("--profile", profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  vp->add_option("--json", json_path, "write a JSON report");
  vp->add_option("--only", only, "comma-separated check ids");
  vp->callback([&] { status = cmd_verify(profile, json_path, only); });

  LatticeArgs lattice;
  auto*       lp = app.add_subcommand("lattice", "inspect a finite lattice");
  lp->add_option("--file", lattice.file, "lattice file")
      ->check(CLI::ExistingFile);
  lp->add_option("--catalog", lattice.catalog,
                 "chain(n), boolean(n), M3, N5, product(A,B), dual(A)");
  lp->add_flag("--classify", lattice.classify, "classify every element");
  lp->add_flag("--congruences", lattice.congruences, "list congruences");
  lp->add_flag("--lemmas", lattice.lemmas, "check the lift lemmas");
  lp->callback([&] { status = cmd_lattice(lattice); });

  std::string lambda;
  bool        enumerate = false, list = false;
  std::size_t max_carrier = EnumerationLimits{}.max_carrier;
  auto*       gp = app.add_subcommand("gset", "the G-set W_lambda");
  gp->add_option("--lambda", lambda, "e.g. 3,2,1,1")->required();
  gp->add_flag("--enumerate", enumerate, "enumerate congruences");
  gp->add_flag("--list", list, "list the carrier");
  gp->add_option("--max-carrier", max_carrier, "enumeration cap");
  gp->callback(
      [&] { status = cmd_gset(lambda, enumerate, list, max_carrier); });

  std::size_t r = 0;
  std::string basis, basis_file, verbal;
  auto*       sp = app.add_subcommand("sapir", "generate S(G) or S(G,X)");
  sp->add_option("--r", r, "group exponent")->required();
  sp->add_option("--basis", basis, "comma-separated basis words");
  sp->add_option("--basis-file", basis_file, "basis words, one per line")
      ->check(CLI::ExistingFile);
  sp->add_option("--verbal", verbal, "comma-separated words generating X");
  sp->callback([&] { status = cmd_sapir(r, basis, basis_file, verbal); });

  std::string              system_file, goal;
  std::vector<std::string> axioms;
  Bounds                   bounds;
  auto* dp = app.add_subcommand("derive", "bounded deduction");
  dp->add_option("--system", system_file, "identity-system file")
      ->check(CLI::ExistingFile);
  dp->add_option("--axiom", axioms, "axiom identity");
  dp->add_option("--goal", goal, "identity to derive")->required();
  dp->add_option("--max-length", bounds.max_word_length);
  dp->add_option("--max-image", bounds.max_subst_image_length);
  dp->add_option("--max-states", bounds.max_states);
  dp->callback([&] {
    bounds.validate();
    status = cmd_derive(system_file, axioms, goal, bounds);
  });

  std::vector<std::string> models;
  std::string              refute_id;
  auto* fp = app.add_subcommand("refute", "search finite models");
  fp->add_option("--model", models,
                 "LZ2, RZ2, SL2, NilN2, Z<r>, CM<m> or file:<table>")
      ->required();
  fp->add_option("--id", refute_id, "identity")->required();
  fp->callback([&] { status = cmd_refute(models, refute_id); });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
