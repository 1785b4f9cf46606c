#include "fuzzylie/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fuzzylie/ifalgebra.hpp"
#include "fuzzylie/verifier.hpp"
#include "fuzzylie/workspace.hpp"

namespace fuzzylie {

namespace {

/// Usage problems detected after CLI11 has finished parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Workspace load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

/// Output workspace: the algebras a result needs, then the result itself.
struct Emitter {
  Workspace ws;

  std::string algebra(const std::string& name, const AlgebraPtr& a) {
    for (const auto& [n, b] : ws.algebras())
      if (n == name) return n;
    ws.add_algebra(name, a);
    return name;
  }
  void print(std::ostream& out) const { out << serialize(ws); }
};

void print_witness(std::ostream& out, const std::string& set, const std::string& alg, IFKind wanted,
                   const IFAlgebraWitness& w) {
  if (w.holds()) {
    out << set << " is a fuzzy " << to_string(wanted) << " of " << alg << "\n";
    return;
  }
  out << set << " is not a fuzzy " << to_string(wanted) << " of " << alg << " (strongest: " << to_string(w.kind)
      << ")\n";
  for (const auto& v : w.violations) {
    out << "violation " << v.condition << ":";
    if (v.condition.rfind("scale", 0) == 0)
      out << " x=" << v.witness.at(0) << " alpha=" << v.witness.at(1);
    else
      for (auto x : v.witness) out << ' ' << x;
    out << "\n";
  }
}

std::string cut_description(const std::string& s, const std::string& t, bool strict_s, bool strict_t) {
  return std::string("mu ") + (strict_s ? ">" : ">=") + " " + s + ", lambda " + (strict_t ? "<" : "<=") + " " + t;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intuitionistic fuzzy subalgebras and ideals of finite n-Lie algebras", "fuzzylie"};
  app.require_subcommand(1);
  app.fallthrough(false);

  std::string file, set_a, set_b, map_name, name, s_text = "0", t_text = "1", x_text, theorem, family = "auto";
  std::string left_name, right_name;
  bool strict_s = false, strict_t = false;
  unsigned p = 3, denominator = 3;
  std::size_t d = 2, n = 2, trials = 500, levels = 3;
  std::uint64_t seed = 1;

  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", file, "workspace file")->required(); };
  auto name_opt = [&](CLI::App* sub) { sub->add_option("--name", name, "name of the result"); };

  auto* validate = app.add_subcommand("validate", "parse and validate a workspace file");
  file_arg(validate);

  auto* check_sub = app.add_subcommand("check-subalgebra", "is SET a fuzzy subalgebra of its algebra");
  auto* check_ideal = app.add_subcommand("check-ideal", "is SET a fuzzy ideal of its algebra");
  for (auto* sub : {check_sub, check_ideal}) {
    file_arg(sub);
    sub->add_option("set", set_a, "fuzzy set name")->required();
  }

  auto* intersect = app.add_subcommand("intersect", "A ∩ B");
  auto* sum = app.add_subcommand("sum", "A + B");
  auto* product = app.add_subcommand("product", "A × B on the direct product of the carriers");
  for (auto* sub : {intersect, sum, product}) {
    file_arg(sub);
    sub->add_option("a", set_a, "first fuzzy set")->required();
    sub->add_option("b", set_b, "second fuzzy set")->required();
    name_opt(sub);
  }

  auto* box = app.add_subcommand("box", "□A = (mu, 1 - mu)");
  auto* diamond = app.add_subcommand("diamond", "◇A = (1 - lambda, lambda)");
  auto* quotient = app.add_subcommand("quotient", "L/A for a fuzzy ideal A");
  for (auto* sub : {box, diamond, quotient}) {
    file_arg(sub);
    sub->add_option("set", set_a, "fuzzy set name")->required();
    name_opt(sub);
  }

  auto* levelcut = app.add_subcommand("levelcut", "members of {mu >= s, lambda <= t} in index order");
  file_arg(levelcut);
  levelcut->add_option("set", set_a, "fuzzy set name")->required();
  levelcut->add_option("--s", s_text, "mu threshold (rational)");
  levelcut->add_option("--t", t_text, "lambda threshold (rational)");
  levelcut->add_flag("--strict-s", strict_s, "use mu > s");
  levelcut->add_flag("--strict-t", strict_t, "use lambda < t");

  auto* image = app.add_subcommand("image", "image of A under a homomorphism, on the image subalgebra");
  auto* preimage = app.add_subcommand("preimage", "preimage of B under a homomorphism");
  for (auto* sub : {image, preimage}) {
    file_arg(sub);
    sub->add_option("map", map_name, "homomorphism name")->required();
    sub->add_option("set", set_a, "fuzzy set name")->required();
    name_opt(sub);
  }

  auto* coset_cmd = app.add_subcommand("coset", "x + A for a fuzzy ideal A");
  file_arg(coset_cmd);
  coset_cmd->add_option("set", set_a, "fuzzy set name")->required();
  coset_cmd->add_option("--x", x_text, "element index or coordinates c0,c1,...")->required();
  name_opt(coset_cmd);

  auto algebra_opts = [&](CLI::App* sub) {
    sub->add_option("--p", p, "field characteristic");
    sub->add_option("--d", d, "dimension");
    sub->add_option("--n", n, "arity");
    sub->add_option("--family", family, "auto, abelian, f2 or heisenberg");
    sub->add_option("--seed", seed, "random seed");
  };
  auto* verify_cmd = app.add_subcommand("verify", "check a theorem (or 'all') by brute force");
  verify_cmd->add_option("theorem", theorem, "T3.2 T3.3 T3.4 C3.5 T4.1 T4.2 T5.1 NEG5 T6.1 T6.2 L7.2 T7.3 or all")
      ->required();
  algebra_opts(verify_cmd);
  verify_cmd->add_option("--trials", trials, "trials per check");
  verify_cmd->add_option("--levels", levels, "chain length of generated sets");

  auto* hunt = app.add_subcommand("hunt-product-counterexample",
                                  "search two-level ideal pairs whose product is not an ideal");
  algebra_opts(hunt);
  hunt->add_option("--denominator", denominator, "degrees are k/denominator");
  hunt->add_option("--workspace", file, "take the factors from a workspace file");
  hunt->add_option("--left", left_name, "left factor (with --workspace)");
  hunt->add_option("--right", right_name, "right factor (with --workspace)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (!app.get_subcommands().empty()) err << app.get_subcommands().front()->help();
    return 2;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();

    if (cmd == "validate") {
      const auto ws = load(file);
      for (const auto& [nm, a] : ws.algebras())
        out << "algebra " << nm << ": p=" << a->field().p() << " d=" << a->dim() << " n=" << a->arity() << ", "
            << a->structure_constants().size() << " structure constants, Filippov identity holds\n";
      for (const auto& s : ws.ifsets()) out << "ifset " << s.name << " over " << s.algebra << ": valid\n";
      for (const auto& m : ws.maps())
        out << "map " << m.name << ' ' << m.from << " -> " << m.to << ": "
            << (m.map.is_homomorphism() ? "homomorphism" : "linear, not a homomorphism") << "\n";
      return 0;
    }

    if (cmd == "check-subalgebra" || cmd == "check-ideal") {
      const auto ws = load(file);
      const auto& s = ws.ifset(set_a);
      const bool ideal = cmd == "check-ideal";
      const auto w = ideal ? is_if_ideal(s.set) : is_if_subalgebra(s.set);
      print_witness(out, s.name, s.algebra, ideal ? IFKind::ideal : IFKind::subalgebra, w);
      return w.holds() ? 0 : 1;
    }

    if (cmd == "intersect" || cmd == "sum") {
      const auto ws = load(file);
      const auto &a = ws.ifset(set_a), &b = ws.ifset(set_b);
      const bool is_sum = cmd == "sum";
      const auto result = is_sum ? if_sum(*a.set.carrier(), a.set, b.set) : if_intersect(a.set, b.set);
      Emitter e;
      const auto alg = e.algebra(a.algebra, a.set.carrier());
      e.ws.add_ifset(name.empty() ? a.name + (is_sum ? "_plus_" : "_and_") + b.name : name, alg, result);
      e.print(out);
      return 0;
    }

    if (cmd == "product") {
      const auto ws = load(file);
      const auto &a = ws.ifset(set_a), &b = ws.ifset(set_b);
      const auto result = if_cartesian_product(a.set, b.set);
      Emitter e;
      const auto alg = e.algebra(a.algebra + "_x_" + b.algebra, result.carrier());
      e.ws.add_ifset(name.empty() ? a.name + "_x_" + b.name : name, alg, result);
      e.print(out);
      return 0;
    }

    if (cmd == "box" || cmd == "diamond") {
      const auto ws = load(file);
      const auto& a = ws.ifset(set_a);
      const auto result = cmd == "box" ? if_box(a.set) : if_diamond(a.set);
      Emitter e;
      const auto alg = e.algebra(a.algebra, a.set.carrier());
      e.ws.add_ifset(name.empty() ? cmd + "_" + a.name : name, alg, result);
      e.print(out);
      return 0;
    }

    if (cmd == "levelcut") {
      const auto ws = load(file);
      const auto& a = ws.ifset(set_a);
      const auto cut = level_cut(a.set, Degree::parse(s_text), Degree::parse(t_text), {strict_s, strict_t});
      out << "# " << a.name << " over " << a.algebra << ": "
          << cut_description(to_string(Degree::parse(s_text)), to_string(Degree::parse(t_text)), strict_s, strict_t)
          << "\n";
      out << "members:";
      const auto members = cut.members();
      if (members.empty()) out << " (none)";
      for (auto x : members) out << ' ' << x;
      out << "\nsize: " << members.size() << "\n";
      return 0;
    }

    if (cmd == "image" || cmd == "preimage") {
      const auto ws = load(file);
      const auto& m = ws.map(map_name);
      const auto& a = ws.ifset(set_a);
      if (!m.map.is_homomorphism()) throw UsageError("map '" + m.name + "' is not a homomorphism");
      Emitter e;
      if (cmd == "image") {
        if (a.algebra != m.from && !(*a.set.carrier() == *m.map.source()))
          throw UsageError("set '" + a.name + "' does not live on the source of '" + m.name + "'");
        const auto img = image_subalgebra(m.map);
        const auto alg = e.algebra(m.name + "_image", img.algebra);
        e.ws.add_ifset(name.empty() ? "image_" + a.name : name, alg, if_image(m.map, a.set, img));
      } else {
        if (a.algebra != m.to && !(*a.set.carrier() == *m.map.target()))
          throw UsageError("set '" + a.name + "' does not live on the target of '" + m.name + "'");
        const auto alg = e.algebra(m.from, m.map.source());
        e.ws.add_ifset(name.empty() ? "preimage_" + a.name : name, alg, if_preimage(m.map, a.set));
      }
      e.print(out);
      return 0;
    }

    if (cmd == "coset") {
      const auto ws = load(file);
      const auto& a = ws.ifset(set_a);
      const auto& L = *a.set.carrier();
      const auto x = parse_element(L, x_text);
      Emitter e;
      const auto alg = e.algebra(a.algebra, a.set.carrier());
      e.ws.add_ifset(name.empty() ? "coset_" + std::to_string(x) + "_" + a.name : name, alg,
                     coset(L, a.set, L.vector(x)));
      e.print(out);
      return 0;
    }

    if (cmd == "quotient") {
      const auto ws = load(file);
      const auto& a = ws.ifset(set_a);
      const auto Q = quotient_if(a.set.carrier(), a.set);
      const auto qname = name.empty() ? a.algebra + "_mod_" + a.name : name;
      out << "# " << qname << " = " << a.algebra << " / " << a.name << ", kernel ideal of dimension "
          << Q.kernel().dim() << "\n";
      for (std::size_t q = 0; q < Q.labels().size(); ++q)
        out << "# coset " << q << " = " << to_string(Q.labels()[q].representative) << " + " << a.name << "\n";
      out << serialize_algebra(qname, *Q.algebra());
      return 0;
    }

    if (cmd == "verify") {
      VerifyConfig cfg;
      cfg.family = family;
      cfg.p = p;
      cfg.d = d;
      cfg.n = n;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.levels = levels;
      std::vector<TheoremId> ids;
      if (theorem == "all") {
        ids = all_theorems();
      } else if (auto id = parse_theorem_id(theorem)) {
        ids.push_back(*id);
      } else {
        throw UsageError("unknown theorem id '" + theorem + "'");
      }
      bool all_passed = true;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto r = verify(ids[i], cfg);
        if (i) out << "\n";
        out << serialize(report_workspace(r));
        err << to_string(ids[i]) << ": " << r.outcome << " in " << r.elapsed.count() << " ms\n";
        all_passed = all_passed && r.passed();
      }
      return all_passed ? 0 : 1;
    }

    if (cmd == "hunt-product-counterexample") {
      ProductSearchConfig cfg;
      cfg.seed = seed;
      cfg.denominator = denominator;
      if (!file.empty()) {
        if (left_name.empty() || right_name.empty()) throw UsageError("--workspace needs --left and --right");
        const auto ws = load(file);
        cfg.left = ws.algebra(left_name);
        cfg.right = ws.algebra(right_name);
      } else {
        cfg.left = family_algebra(family, p, d, n);
        cfg.right = std::make_shared<const NLieAlgebra>(NLieAlgebra::abelian(PrimeField(p), 1, n));
      }
      const auto r = search_product_ideal_counterexample(cfg);
      out << serialize(report_workspace(r));
      err << "NEG5: " << r.outcome << " in " << r.elapsed.count() << " ms\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace fuzzylie
