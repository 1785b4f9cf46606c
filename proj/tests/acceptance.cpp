// Acceptance run: one PASS/FAIL line per criterion, each checked at its stated
// scale and time limit. Library results are cross-checked against the
// independent oracles in oracles.hpp wherever a value is computed.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "fuzzylie/generators.hpp"
#include "fuzzylie/ifalgebra.hpp"
#include "fuzzylie/verifier.hpp"
#include "fuzzylie/workspace.hpp"
#include "golden_cases.hpp"
#include "oracles.hpp"

using namespace fuzzylie;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

AlgebraPtr make(NLieAlgebra a) { return std::make_shared<const NLieAlgebra>(std::move(a)); }

AlgebraPtr fixture_f2() { return family_algebra("f2", 3, 2, 2); }
AlgebraPtr heisenberg() { return family_algebra("heisenberg", 2, 3, 2); }
AlgebraPtr abelian(unsigned p, std::size_t d, std::size_t n) { return make(NLieAlgebra::abelian(PrimeField(p), d, n)); }

std::string describe(const NLieAlgebra& L) {
  return "p=" + std::to_string(L.field().p()) + " d=" + std::to_string(L.dim()) + " n=" + std::to_string(L.arity());
}

oracle::Table table(const IFSet& a) { return oracle::Table(a); }

bool oracle_fuzzy(const IFSet& a, IFKind kind) {
  const oracle::Algebra L(*a.carrier());
  return oracle::if_check(L, table(a), kind == IFKind::ideal, kind != IFKind::subspace);
}

/// Every fuzzy claim recorded in the witness agrees with the oracle.
bool claims_match_oracle(const Witness& w) {
  for (const auto& c : w.claims)
    if (c.claim == ClaimKind::fuzzy && oracle_fuzzy(w.set(c.set), c.kind) != c.holds) return false;
  return true;
}

// 1. Filippov identity on the families and their direct products; a corrupted
// structure constant is rejected with a witness tuple.
Outcome algebra_validity(double& worst) {
  Outcome o;
  std::vector<AlgebraPtr> base{fixture_f2(), heisenberg()};
  for (unsigned p : {2u, 3u})
    for (std::size_t n : {2u, 3u})
      for (std::size_t d = 1; d <= 3; ++d) base.push_back(abelian(p, d, n));
  std::vector<AlgebraPtr> all = base;
  for (const auto& a : base)
    for (const auto& b : base)
      if (a->field() == b->field() && a->arity() == b->arity() && a->dim() + b->dim() <= 6)
        all.push_back(make(direct_product(*a, *b)));

  std::size_t exhaustive = 0;
  for (const auto& L : all) {
    const auto t0 = Clock::now();
    const bool basis_ok = validate_filippov(*L).valid();
    const bool oracle_ok = !oracle::filippov_failure(oracle::Algebra(*L));
    // The basis check is complete by multilinearity; small algebras also get the element-level one.
    const double tuples = std::pow(double(L->field().p()), double(L->dim() * (2 * L->arity() - 1)));
    bool full_ok = true;
    if (tuples <= double(1 << 20)) {
      full_ok = validate_filippov_exhaustive(*L).valid();
      ++exhaustive;
    }
    const double t = seconds_since(t0);
    worst = std::max(worst, t);
    o.require(basis_ok && oracle_ok && full_ok, "Filippov check failed on " + describe(*L));
    o.require(t < 1.0, "check took " + std::to_string(t) + " s on " + describe(*L));
  }

  // Heisenberg with [e0, e2] = e0 added.
  const auto t0 = Clock::now();
  PrimeField F(2);
  NLieAlgebra bad(F, 3, 2, {{{0, 1}, FVector::unit(F, 3, 2)}, {{0, 2}, FVector::unit(F, 3, 0)}});
  const auto report = validate_filippov(bad);
  o.require(!report.valid(), "corrupted structure constant accepted");
  std::string tuple;
  if (!report.valid()) {
    const auto& v = report.violations.front();
    o.require(!oracle::filippov_holds_at(oracle::Algebra(bad), v.xs, v.ys), "reported witness does not violate");
    for (auto i : v.xs) tuple += "e" + std::to_string(i) + " ";
    tuple += "|";
    for (auto i : v.ys) tuple += " e" + std::to_string(i);
    try {
      parse_workspace("[algebra bad]\np=2\nd=3\nn=2\nsc 0 1 = 0,0,1\nsc 0 2 = 1,0,0\n");
      o.require(false, "workspace parser accepted the corrupted algebra");
    } catch (const FilippovError& e) {
      o.require(e.witness().xs == v.xs && e.witness().ys == v.ys, "parser witness differs");
    }
  }
  worst = std::max(worst, seconds_since(t0));
  if (o.pass)
    o.detail = std::to_string(all.size()) + " algebras incl. products (" + std::to_string(exhaustive) +
               " also element-exhaustive); corrupted constant rejected at " + tuple;
  return o;
}

// 2. The five level-cut statements agree, by the verifier and by the oracle.
Outcome level_cut_equivalence() {
  Outcome o;
  const std::size_t per_algebra = 250;
  std::size_t sets = 0, oracle_checks = 0;
  for (const auto& L : {fixture_f2(), heisenberg()}) {
    VerifyConfig cfg;
    cfg.algebra = L;
    cfg.trials = per_algebra;
    cfg.seed = 2026;
    const auto r = verify(TheoremId::C3_5, cfg);
    o.require(r.failure_count == 0, std::to_string(r.failure_count) + " discrepancies on " + describe(*L));
    o.require(r.control_detections > 0, "no negative control detected on " + describe(*L));

    // Independent run: the same mix of inputs, evaluated by the oracle and by the library.
    const oracle::Algebra OL(*L);
    std::mt19937_64 rng(77);
    for (std::size_t t = 0; t < per_algebra; ++t) {
      const IFSet a = t % 3 == 0   ? random_if_subalgebra(L, 1 + t % 4, rng())
                      : t % 3 == 1 ? random_if_ideal(L, 1 + t % 4, rng())
                                   : random_ifset(L, rng, 4);
      const auto A = table(a);
      for (const bool ideal : {false, true}) {
        const auto kind = ideal ? IFKind::ideal : IFKind::subalgebra;
        const bool base = oracle::statement(OL, A, ideal, 0);
        Witness w{"", {{"A", a}}, {}, {}};
        o.require(evaluate_claim(w, Claim{ClaimKind::fuzzy, kind, {}, "A", false}) == base,
                  "library predicate differs from the oracle");
        for (int k = 1; k <= 4; ++k) {
          const bool cut = oracle::statement(OL, A, ideal, k);
          o.require(cut == base, "oracle finds statement " + std::to_string(k) + " disagreeing on " + describe(*L));
          const CutKind ck{k >= 3, k == 2 || k == 4};
          o.require(evaluate_claim(w, Claim{ClaimKind::cuts, kind, ck, "A", false}) == cut,
                    "library cut statement differs from the oracle");
          ++oracle_checks;
        }
      }
      ++sets;
    }
  }
  if (o.pass)
    o.detail = std::to_string(2 * per_algebra) + " verifier sets + " + std::to_string(sets) +
               " oracle sets on F2 (p=3) and Heisenberg (p=2), " + std::to_string(oracle_checks) +
               " cut statements, 0 discrepancies";
  return o;
}

// 3. Closure theorems with negative controls.
Outcome closure_theorems() {
  Outcome o;
  std::size_t trials = 0, detections = 0, witnesses = 0;
  for (const auto& L : {fixture_f2(), heisenberg()})
    for (auto id : {TheoremId::T3_2, TheoremId::T4_1, TheoremId::T4_2, TheoremId::T5_1, TheoremId::T6_1,
                    TheoremId::T6_2}) {
      VerifyConfig cfg;
      cfg.algebra = L;
      cfg.trials = 500;
      cfg.seed = 11;
      const auto r = verify(id, cfg);
      const auto where = to_string(id) + " on " + describe(*L);
      o.require(r.trials >= 500, where + " ran fewer than 500 trials");
      o.require(r.failure_count == 0, where + ": " + std::to_string(r.failure_count) + " failures");
      o.require(r.control_detections >= 1, where + ": negative control never detected");
      for (const auto& w : r.controls) {
        o.require(replay(w), where + ": control witness does not replay");
        o.require(claims_match_oracle(w), where + ": control witness disagrees with the oracle");
        ++witnesses;
      }
      trials += r.trials;
      detections += r.control_detections;
    }
  if (o.pass)
    o.detail = "T3.2 T4.1 T4.2 T5.1 T6.1 T6.2 on F2 and Heisenberg, " + std::to_string(trials) +
               " trials, 0 failures, " + std::to_string(detections) + " control detections (" +
               std::to_string(witnesses) + " witnesses confirmed by the oracle)";
  return o;
}

// 4. if_sum against the double-loop oracle.
Outcome sum_oracle() {
  Outcome o;
  std::mt19937_64 rng(4);
  const std::vector<AlgebraPtr> algebras{fixture_f2(), heisenberg(), family_algebra("f2", 2, 3, 3)};
  for (int i = 0; i < 100; ++i) {
    const auto& L = algebras[i % algebras.size()];
    const IFSet a = i % 2 ? random_if_ideal(L, 1 + i % 3, rng()) : random_ifset(L, rng, 1 + rng() % 6);
    const IFSet b = i % 4 < 2 ? random_if_subalgebra(L, 1 + i % 4, rng()) : random_ifset(L, rng, 1 + rng() % 6);
    const auto got = if_sum(*L, a, b);
    const auto [mu, lambda] = oracle::sum(oracle::Algebra(*L), table(a), table(b));
    const auto G = table(got);
    o.require(G.mu == mu && G.lambda == lambda, "pair " + std::to_string(i) + " on " + describe(*L) + " differs");
  }
  if (o.pass) o.detail = "100 pairs on F2, Heisenberg and a ternary algebra, exact equality";
  return o;
}

// 5. Quotients by generated ideals.
Outcome quotient_correctness() {
  Outcome o;
  const std::vector<AlgebraPtr> algebras{fixture_f2(), heisenberg(), abelian(3, 2, 2), family_algebra("f2", 2, 3, 3),
                                         family_algebra("heisenberg", 2, 4, 3)};
  std::size_t ideals = 0, pairs = 0, sweeps = 0;
  for (std::size_t i = 0; i < 120; ++i) {
    const auto& L = algebras[i % algebras.size()];
    const auto A = random_if_ideal(L, 1 + i % 4, 1000 + i);
    const auto where = "ideal " + std::to_string(i) + " on " + describe(*L);
    const oracle::Algebra OL(*L);
    const auto T = table(A);
    o.require(oracle::if_check(OL, T, true), where + " is not an ideal by the oracle");

    const auto Q = quotient_if(L, A);
    const oracle::Algebra OQ(*Q.algebra());
    o.require(validate_filippov(*Q.algebra()).valid() && !oracle::filippov_failure(OQ),
              where + ": quotient fails the Filippov identity");

    // Coset criterion against literal table equality, on all pairs.
    const auto cls = oracle::coset_classes(OL, T);
    for (std::size_t x = 0; x < OL.size; ++x)
      for (std::size_t y = 0; y < OL.size; ++y) {
        const bool same = cls[x] == cls[y];
        const auto diff = OL.index(OL.sub(OL.vec(x), OL.vec(y)));
        const bool criterion = T.mu[diff] == T.mu[0] && T.lambda[diff] == T.lambda[0];
        o.require(criterion == same, where + ": criterion differs from coset tables");
        o.require(cosets_equal(*L, A, L->vector(x), L->vector(y)) == same,
                  where + ": cosets_equal differs from coset tables");
        ++pairs;
      }

    // Library labels form a bijection with the coset classes.
    std::vector<Element> q(OL.size);
    std::map<std::size_t, Element> class_to_q;
    std::map<Element, std::size_t> q_to_class;
    for (std::size_t x = 0; x < OL.size; ++x) {
      q[x] = Q.label_of(L->vector(x)).quotient_element;
      auto [it, fresh] = class_to_q.emplace(cls[x], q[x]);
      auto [jt, fresh2] = q_to_class.emplace(q[x], cls[x]);
      o.require(it->second == q[x] && jt->second == cls[x], where + ": labels do not match coset classes");
    }
    o.require(class_to_q.size() == OQ.size, where + ": quotient size differs from the number of cosets");

    // Representative sweeps: results depend only on the classes, and the
    // library operations and quotient algebra agree with them.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> add_table;
    for (std::size_t x = 0; x < OL.size; ++x)
      for (std::size_t y = 0; y < OL.size; ++y) {
        const auto s = OL.index(OL.add(OL.vec(x), OL.vec(y)));
        auto [it, fresh] = add_table.emplace(std::pair{cls[x], cls[y]}, cls[s]);
        o.require(it->second == cls[s], where + ": addition depends on representatives");
        o.require(Q.add(L->vector(x), L->vector(y)).quotient_element == q[s], where + ": library addition differs");
        o.require(OQ.index(OQ.add(OQ.vec(q[x]), OQ.vec(q[y]))) == q[s], where + ": quotient addition differs");
        ++sweeps;
      }
    std::map<std::pair<unsigned, std::size_t>, std::size_t> scale_table;
    for (unsigned alpha = 0; alpha < OL.p; ++alpha)
      for (std::size_t x = 0; x < OL.size; ++x) {
        const auto s = OL.index(OL.scale(alpha, OL.vec(x)));
        auto [it, fresh] = scale_table.emplace(std::pair{alpha, cls[x]}, cls[s]);
        o.require(it->second == cls[s], where + ": scaling depends on representatives");
        o.require(Q.scale(Scalar(L->field(), alpha), L->vector(x)).quotient_element == q[s],
                  where + ": library scaling differs");
        o.require(OQ.index(OQ.scale(alpha, OQ.vec(q[x]))) == q[s], where + ": quotient scaling differs");
        ++sweeps;
      }
    std::map<std::vector<std::size_t>, std::size_t> bracket_table;
    OL.for_each_tuple([&](const std::vector<std::size_t>& t) {
      const auto b = OL.bracket_index(t);
      std::vector<std::size_t> key, qs;
      std::vector<FVector> args;
      for (auto x : t) {
        key.push_back(cls[x]);
        qs.push_back(q[x]);
        args.push_back(L->vector(static_cast<Element>(x)));
      }
      auto [it, fresh] = bracket_table.emplace(key, cls[b]);
      o.require(it->second == cls[b], where + ": bracket depends on representatives");
      o.require(Q.bracket(args).quotient_element == q[b], where + ": library bracket differs");
      o.require(OQ.bracket_index(qs) == q[b], where + ": quotient bracket differs");
      ++sweeps;
    });
    ++ideals;
  }
  if (o.pass)
    o.detail = std::to_string(ideals) + " generated ideals on 5 algebras (n = 2, 3), " + std::to_string(pairs) +
               " coset pairs, " + std::to_string(sweeps) + " representative combinations";
  return o;
}

// 6. Product-of-ideals search on F2 x abelian GF(3).
Outcome product_search() {
  Outcome o;
  auto run = [](std::uint64_t seed) {
    ProductSearchConfig cfg;
    cfg.left = fixture_f2();
    cfg.right = abelian(3, 1, 2);
    cfg.seed = seed;
    return search_product_ideal_counterexample(cfg);
  };
  const auto a = run(1), b = run(1), c = run(99);
  o.require(serialize(report_workspace(a)) == serialize(report_workspace(b)), "same seed gave different reports");
  o.require(a.outcome == "WITNESS FOUND" || a.outcome == "NOT FOUND AT SCALE", "unexpected outcome " + a.outcome);
  o.require(a.outcome == c.outcome && a.trials == c.trials, "outcome depends on the visiting order");
  for (const auto& note : a.notes)
    o.require(note.find("not exhausted") == std::string::npos, "search space not exhausted");
  for (const auto& w : a.failures) {
    o.require(replay(w), "witness does not replay");
    o.require(claims_match_oracle(w), "witness disagrees with the oracle");
  }
  if (o.pass) o.detail = a.outcome + " over " + std::to_string(a.trials) + " pairs, identical for repeated seeds";
  return o;
}

// 7. Serialization round-trips and golden CLI coverage.
Outcome cli_round_trip() {
  Outcome o;
  const std::string dir = FUZZYLIE_GOLDEN_DIR;
  std::set<std::string> covered;
  std::size_t cases = 0, artifacts = 0;
  for (const auto& c : golden::load_cases(dir)) {
    const auto r = golden::run(c);
    o.require(golden::read_file(dir + "/" + c.name + ".out") == r.transcript, "golden case " + c.name + " differs");
    if (r.code != 2 && golden::prints_workspace(c.args.front())) {
      o.require(golden::round_trips(r.out), "output of " + c.name + " does not round-trip");
      ++artifacts;
    }
    covered.insert(c.args.front());
    ++cases;
  }
  for (const auto& cmd : golden::subcommands()) o.require(covered.count(cmd) > 0, "no golden case for " + cmd);

  // Reports of every theorem, with their witnesses.
  VerifyConfig cfg;
  cfg.trials = 20;
  for (auto id : all_theorems()) {
    const auto r = id == TheoremId::NEG5 ? search_product_ideal_counterexample({}) : verify(id, cfg);
    const auto text = serialize(report_workspace(r));
    const auto ws = parse_workspace(text);
    o.require(serialize(ws) == text && parse_workspace(serialize(ws)) == ws, to_string(id) + " report does not round-trip");
    for (const auto& w : report_witnesses(ws, ws.reports().front()))
      o.require(replay(w), to_string(id) + " witness does not replay after parsing");
    ++artifacts;
  }

  // Computed sets on each fixture.
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const auto L = i % 2 ? fixture_f2() : heisenberg();
    const auto a = random_ifset(L, rng, 1 + rng() % 12);
    const auto b = random_if_ideal(L, 1 + i % 4, rng());
    Workspace ws;
    ws.add_algebra("L", L);
    ws.add_ifset("S", "L", if_sum(*L, a, b));
    ws.add_ifset("B", "L", if_box(a));
    ws.add_ifset("C", "L", coset(*L, b, L->vector(rng() % L->size())));
    o.require(parse_workspace(serialize(ws)) == ws, "computed set does not round-trip");
    artifacts += 3;
  }
  if (o.pass)
    o.detail = std::to_string(cases) + " golden cases covering all " + std::to_string(golden::subcommands().size()) +
               " subcommands; " + std::to_string(artifacts) + " artifacts re-parse equal";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    double limit;  ///< seconds
    std::function<Outcome()> run;
  };
  double worst_filippov = 0;
  const std::vector<Criterion> criteria{
      {1, "algebra validity", 60, [&] { return algebra_validity(worst_filippov); }},
      {2, "level-cut equivalence", 60, level_cut_equivalence},
      {3, "closure theorems with negative controls", 300, closure_theorems},
      {4, "sum oracle", 10, sum_oracle},
      {5, "quotient correctness", 120, quotient_correctness},
      {6, "product-of-ideals search", 120, product_search},
      {7, "CLI round-trip and golden coverage", 300, cli_round_trip},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double t = seconds_since(t0);
    if (t > c.limit) o.require(false, "took " + std::to_string(t) + " s, limit " + std::to_string(c.limit) + " s");
    all = all && o.pass;
    std::ostringstream time;
    time << std::fixed << std::setprecision(2) << t << " s";
    if (c.number == 1) time << ", slowest check " << worst_filippov << " s";
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.number << ". " << c.title << ": " << o.detail << " ("
              << time.str() << ")" << std::endl;
  }
  return all ? 0 : 1;
}
