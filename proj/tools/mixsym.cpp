// mixsym: symmetry algebras of mixed-order ODE systems y^(k) = 0, z^(l) = 0.
// Exit codes: 0 ok, 1 a mathematical assertion failed, 2 bad input.

#include <mixsym/cli/commands.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

using namespace mixsym;
using namespace mixsym::cli;

struct SpecArgs {
  int k = 2, l = 3, shift = 0;
  TableauSpec spec() const { return TableauSpec(k, l, shift); }
};

void add_spec(CLI::App* cmd, SpecArgs& a) {
  cmd->add_option("--k", a.k, "order of y")->required();
  cmd->add_option("--l", a.l, "order of z")->required();
  cmd->add_option("--shift", a.shift, "tableau shift δ")->required();
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

int emit(const Report& r, const std::string& format) {
  if (format == "json")
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
  if (!r.ok()) {
    for (const auto& a : r.agreements)
      if (!a.ok) std::cerr << "assertion failed: " << a.name << " (" << a.detail << ")\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry algebras of y^(k) = 0, z^(l) = 0 via determining systems, Tanaka and Sternberg prolongation"};
  app.require_subcommand(1);
  std::string format = "text";
  std::optional<int> bound, cap, against;

  SpecArgs sym_args;
  std::string method = "determining";
  auto* sym = app.add_subcommand("symmetries", "point symmetries of the shifted system");
  add_spec(sym, sym_args);
  sym->add_option("--degree-bound", bound, "polynomial degree bound (default: raise from k+l until stable)");
  sym->add_option("--method", method)->check(CLI::IsMember({"determining", "known", "both"}))->capture_default_str();
  add_format(sym, format);

  SpecArgs pro_args;
  std::string engine;
  bool transpose = false;
  auto* pro = app.add_subcommand("prolong", "Tanaka or Sternberg prolongation");
  add_spec(pro, pro_args);
  pro->add_option("--engine", engine)->required()->check(CLI::IsMember({"tanaka", "sternberg"}));
  pro->add_flag("--transpose", transpose, "prolong the transposed symbol algebra (sternberg)");
  pro->add_option("--cap", cap, "Sternberg degree cap (default k+l)");
  add_format(pro, format);

  SpecArgs cmp_args;
  auto* cmp = app.add_subcommand("compare", "all methods on one spec");
  add_spec(cmp, cmp_args);
  cmp->add_option("--degree-bound", bound, "polynomial degree bound (default: raise from k+l until stable)");
  cmp->add_option("--against", against, "also compare with the algebra of (k, l, AGAINST)");
  add_format(cmp, format);

  SpecArgs tab_args;
  auto* tab = app.add_subcommand("tableau", "skew tableau and projection chain");
  add_spec(tab, tab_args);
  add_format(tab, format);

  std::string part;
  int lr = 0, lp = 1, lq = 0;
  auto* lem = app.add_subcommand("lemma", "kernel identities for the truncated total derivative");
  lem->add_option("--part", part)->required()->check(CLI::IsMember({"a", "b", "c", "d"}));
  lem->add_option("--r", lr, "r, or i for part a");
  lem->add_option("--p", lp, "p, or j for part a");
  lem->add_option("--q", lq);
  add_format(lem, format);

  int fk = 2, fl = 4;
  std::string ff = "0", fg = "0";
  auto* flg = app.add_subcommand("flags", "derived flag of y^(k) = f, z^(l) = g");
  flg->add_option("--k", fk)->required();
  flg->add_option("--l", fl)->required();
  flg->add_option("--f", ff, "right-hand side for y")->capture_default_str();
  flg->add_option("--g", fg, "right-hand side for z")->capture_default_str();
  add_format(flg, format);

  int max_sum = 9, max_bound = kMaxAutoBound;
  auto* suite = app.add_subcommand("suite", "triple-agreement grid over all valid specs");
  suite->add_option("--max-sum", max_sum, "largest k+l")->capture_default_str();
  suite->add_option("--max-bound", max_bound, "largest degree bound tried")->capture_default_str();
  add_format(suite, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool json = format == "json";
  try {
    if (*sym) return emit(cmd_symmetries(sym_args.spec(), bound, method), format);
    if (*pro) return emit(cmd_prolong(pro_args.spec(), engine, transpose, cap), format);
    if (*cmp) return emit(cmd_compare(cmp_args.spec(), bound, against), format);
    if (*tab) {
      const auto t = cmd_tableau(tab_args.spec());
      if (json)
        std::cout << Json{{"spec", spec_to_json(tab_args.spec())}, {"tableau", t.tableau}, {"chain", t.chain}}.dump(2)
                  << "\n";
      else
        std::cout << t.tableau << t.chain << "\n";
      return 0;
    }
    if (*lem) {
      const auto r = cmd_lemma(part, lr, lp, lq);
      if (json)
        std::cout << Json{{"part", r.part}, {"ok", r.ok}, {"kernel_dim", r.kernel_dim}, {"detail", r.detail}}.dump(2)
                  << "\n";
      else
        std::cout << "part " << r.part << ": " << (r.ok ? "verified" : "FAILED") << ", " << r.detail << "\n";
      if (!r.ok) std::cerr << "assertion failed: lemma part " << r.part << "\n";
      return r.ok ? 0 : 1;
    }
    if (*flg) {
      const auto ranks = cmd_flags(fk, fl, ff, fg);
      if (json) {
        std::cout << Json{{"k", fk}, {"l", fl}, {"f", ff}, {"g", fg}, {"ranks", ranks}}.dump(2) << "\n";
      } else {
        std::string s;
        for (auto r : ranks) s += (s.empty() ? "" : ",") + std::to_string(r);
        std::cout << "ranks: " << s << "\n";
      }
      return 0;
    }
    if (*suite) {
      const auto rows = cmd_suite(max_sum, max_bound);
      bool all = true;
      Json out = Json::array();
      if (!json) std::printf("%-14s %5s %5s %6s %9s %6s  %s\n", "spec", "bound", "det", "tanaka", "sternberg", "known", "");
      for (const auto& r : rows) {
        all = all && r.ok;
        if (json) {
          out.push_back(to_json(r));
          continue;
        }
        const std::string known = r.known ? std::to_string(*r.known) : "-";
        std::printf("%-14s %5d %5zu %6zu %9zu %6s  %s\n", r.spec.label().c_str(), r.bound, r.determining, r.tanaka,
                    r.sternberg, known.c_str(), r.ok ? "PASS" : ("FAIL " + r.error).c_str());
      }
      if (json) std::cout << out.dump(2) << "\n";
      if (!all) std::cerr << "assertion failed: triple agreement\n";
      return all ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const eds::NotStabilized& e) {
    std::cerr << "assertion failed: stabilization: " << e.what() << "\n";
    return 1;
  } catch (const sternberg::NotTerminated& e) {
    std::cerr << "assertion failed: termination: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
