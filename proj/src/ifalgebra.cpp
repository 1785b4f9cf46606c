#include "fuzzylie/ifalgebra.hpp"

#include <random>

#include "fuzzylie/random.hpp"

namespace fuzzylie {

std::string to_string(IFKind kind) {
  switch (kind) {
    case IFKind::none: return "none";
    case IFKind::subspace: return "subspace";
    case IFKind::subalgebra: return "subalgebra";
    case IFKind::ideal: return "ideal";
  }
  return "?";
}

namespace {

void require_carrier(const NLieAlgebra& L, const IFSet& a) {
  if (!(*a.carrier() == L)) throw std::invalid_argument("fuzzy set does not live on this algebra");
}

std::uint64_t tuple_count(std::size_t size, std::size_t arity, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    total *= size;
    if (total > cap) return cap + 1;
  }
  return total;
}

/// Runs `visit` over all tuples of the given arity, or over a seeded sample of
/// them when the exhaustive count exceeds the guard.
template <typename Visit>
void for_each_tuple(const NLieAlgebra& L, std::size_t arity, const CheckOptions& opts, Visit&& visit) {
  const auto total = tuple_count(L.size(), arity, opts.tuple_guard);
  std::vector<Element> t(arity, 0);
  if (total <= opts.tuple_guard) {
    while (true) {
      visit(std::span<const Element>(t));
      std::size_t i = arity;
      while (i-- > 0) {
        if (++t[i] < L.size()) break;
        t[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
    return;
  }
  if (!opts.sample_seed)
    throw GuardExceeded("exhaustive check over " + std::to_string(L.size()) + "^" +
                        std::to_string(arity) + " tuples exceeds the guard");
  std::mt19937_64 rng(*opts.sample_seed);
  for (std::size_t s = 0; s < opts.samples; ++s) {
    for (auto& x : t) x = static_cast<Element>(uniform_below(rng, L.size()));
    visit(std::span<const Element>(t));
  }
}

struct Collector {
  const CheckOptions& opts;
  std::vector<Violation>& out;
  bool failed = false;

  void add(const char* condition, std::vector<Element> witness) {
    failed = true;
    if (out.size() < opts.max_violations) out.push_back({condition, std::move(witness)});
  }
};

/// Conditions (i) and (ii); returns true when both hold.
bool check_subspace(const NLieAlgebra& L, const IFSet& a, const CheckOptions& opts,
                    std::vector<Violation>& out) {
  Collector c{opts, out};
  for_each_tuple(L, 2, opts, [&](std::span<const Element> xy) {
    const Element s = L.add(xy[0], xy[1]);
    if (a.mu(s) < degree_min(a.mu(xy[0]), a.mu(xy[1]))) c.add("sum-mu", {xy[0], xy[1]});
    if (a.lambda(s) > degree_max(a.lambda(xy[0]), a.lambda(xy[1])))
      c.add("sum-lambda", {xy[0], xy[1]});
  });
  for (Element x = 0; x < L.size(); ++x)
    for (unsigned alpha = 0; alpha < L.field().p(); ++alpha) {
      const Element y = L.scale(alpha, x);
      if (a.mu(y) < a.mu(x)) c.add("scale-mu", {x, alpha});
      if (a.lambda(y) > a.lambda(x)) c.add("scale-lambda", {x, alpha});
    }
  return !c.failed;
}

struct BracketOutcome {
  bool subalgebra_ok = true;
  bool ideal_ok = true;
};

/// Condition (iii) (min side) and (iii)' (max side) in one pass; violations are
/// recorded only for the side named by `record_ideal`.
BracketOutcome check_bracket(const NLieAlgebra& L, const IFSet& a, const CheckOptions& opts,
                             bool record_ideal, std::vector<Violation>& out) {
  Collector c{opts, out};
  BracketOutcome r;
  auto check = [&](std::span<const Element> xs, Element br) {
    Degree mu_min = Degree::one(), mu_max = Degree::zero();
    Degree la_min = Degree::one(), la_max = Degree::zero();
    for (auto x : xs) {
      mu_min = degree_min(mu_min, a.mu(x));
      mu_max = degree_max(mu_max, a.mu(x));
      la_min = degree_min(la_min, a.lambda(x));
      la_max = degree_max(la_max, a.lambda(x));
    }
    std::vector<Element> w(xs.begin(), xs.end());
    if (a.mu(br) < mu_min || a.lambda(br) > la_max) {
      r.subalgebra_ok = false;
      if (!record_ideal) {
        if (a.mu(br) < mu_min) c.add("bracket-mu-min", w);
        if (a.lambda(br) > la_max) c.add("bracket-lambda-max", w);
      }
    }
    if (a.mu(br) < mu_max || a.lambda(br) > la_min) {
      r.ideal_ok = false;
      if (record_ideal) {
        if (a.mu(br) < mu_max) c.add("bracket-mu-max", w);
        if (a.lambda(br) > la_min) c.add("bracket-lambda-min", w);
      }
    }
  };

  const auto total = tuple_count(L.size(), L.arity(), opts.tuple_guard);
  if (total <= opts.tuple_guard) {
    L.for_each_bracket(check);
  } else {
    for_each_tuple(L, L.arity(), opts, [&](std::span<const Element> xs) { check(xs, L.bracket(xs)); });
  }
  return r;
}

}  // namespace

IFAlgebraWitness is_if_subspace(const NLieAlgebra& L, const IFSet& a, const CheckOptions& opts) {
  require_carrier(L, a);
  IFAlgebraWitness w;
  w.kind = check_subspace(L, a, opts, w.violations) ? IFKind::subspace : IFKind::none;
  return w;
}

IFAlgebraWitness is_if_subalgebra(const NLieAlgebra& L, const IFSet& a, const CheckOptions& opts) {
  require_carrier(L, a);
  IFAlgebraWitness w;
  const bool subspace = check_subspace(L, a, opts, w.violations);
  const auto br = check_bracket(L, a, opts, false, w.violations);
  if (!subspace)
    w.kind = IFKind::none;
  else if (br.ideal_ok)
    w.kind = IFKind::ideal;
  else
    w.kind = br.subalgebra_ok ? IFKind::subalgebra : IFKind::subspace;
  return w;
}

IFAlgebraWitness is_if_ideal(const NLieAlgebra& L, const IFSet& a, const CheckOptions& opts) {
  require_carrier(L, a);
  IFAlgebraWitness w;
  const bool subspace = check_subspace(L, a, opts, w.violations);
  const auto br = check_bracket(L, a, opts, true, w.violations);
  if (!subspace)
    w.kind = IFKind::none;
  else if (br.ideal_ok)
    w.kind = IFKind::ideal;
  else
    w.kind = br.subalgebra_ok ? IFKind::subalgebra : IFKind::subspace;
  return w;
}

IFSet if_sum(const NLieAlgebra& L, const IFSet& a, const IFSet& b) {
  require_carrier(L, a);
  require_carrier(L, b);
  const auto n = L.size();
  std::vector<Degree> mu(n, Degree::zero()), lambda(n, Degree::one());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element z = L.sub(x, y);
      mu[x] = degree_max(mu[x], degree_min(a.mu(y), b.mu(z)));
      lambda[x] = degree_min(lambda[x], degree_max(a.lambda(y), b.lambda(z)));
    }
  return IFSet(a.carrier(), std::move(mu), std::move(lambda));
}

IFSet if_cartesian_product(const IFSet& a, const IFSet& b) {
  return if_cartesian_product(
      a, b, std::make_shared<const NLieAlgebra>(direct_product(*a.carrier(), *b.carrier())));
}

IFSet if_cartesian_product(const IFSet& a, const IFSet& b, AlgebraPtr product) {
  if (product->size() != a.size() * b.size() ||
      product->dim() != a.carrier()->dim() + b.carrier()->dim())
    throw std::invalid_argument("product algebra does not match the factors");
  std::vector<Degree> mu(product->size()), lambda(product->size());
  for (Element y = 0; y < b.size(); ++y)
    for (Element x = 0; x < a.size(); ++x) {
      const std::size_t idx = x + a.size() * y;
      mu[idx] = degree_min(a.mu(x), b.mu(y));
      lambda[idx] = degree_max(a.lambda(x), b.lambda(y));
    }
  return IFSet(std::move(product), std::move(mu), std::move(lambda));
}

IFSet if_image(const LinearMap& phi, const IFSet& a) { return if_image(phi, a, image_subalgebra(phi)); }

IFSet if_image(const LinearMap& phi, const IFSet& a, const ImageSubalgebra& image) {
  if (!phi.is_homomorphism()) throw std::invalid_argument("image: map is not a homomorphism");
  require_carrier(*phi.source(), a);
  const auto n = image.algebra->size();
  std::vector<Degree> mu(n, Degree::zero()), lambda(n, Degree::one());
  std::vector<bool> hit(n, false);
  for (Element x = 0; x < a.size(); ++x) {
    const Element y = image.element_of(phi.apply(phi.source()->vector(x)));
    if (!hit[y]) {
      hit[y] = true;
      mu[y] = a.mu(x);
      lambda[y] = a.lambda(x);
    } else {
      mu[y] = degree_max(mu[y], a.mu(x));
      lambda[y] = degree_min(lambda[y], a.lambda(x));
    }
  }
  return IFSet(image.algebra, std::move(mu), std::move(lambda));
}

IFSet if_preimage(const LinearMap& phi, const IFSet& b) {
  if (!phi.is_homomorphism()) throw std::invalid_argument("preimage: map is not a homomorphism");
  require_carrier(*phi.target(), b);
  const auto n = phi.source()->size();
  std::vector<Degree> mu(n), lambda(n);
  for (Element x = 0; x < n; ++x) {
    const Element y = phi.apply(x);
    mu[x] = b.mu(y);
    lambda[x] = b.lambda(y);
  }
  return IFSet(phi.source(), std::move(mu), std::move(lambda));
}

IFSet coset(const NLieAlgebra& L, const IFSet& a, const FVector& x) {
  const Element xe = L.element(x);
  if (!is_if_ideal(L, a).holds()) throw std::invalid_argument("coset: fuzzy set is not an ideal");
  std::vector<Degree> mu(a.size()), lambda(a.size());
  for (Element y = 0; y < a.size(); ++y) {
    const Element d = L.sub(y, xe);
    mu[y] = a.mu(d);
    lambda[y] = a.lambda(d);
  }
  return IFSet(a.carrier(), std::move(mu), std::move(lambda));
}

bool cosets_equal(const NLieAlgebra& L, const IFSet& a, const FVector& x, const FVector& y) {
  require_carrier(L, a);
  const Element d = L.sub(L.element(x), L.element(y));
  return a.mu(d) == a.mu(0) && a.lambda(d) == a.lambda(0);
}

CrispSubspace kernel_ideal(const NLieAlgebra& L, const IFSet& a) {
  require_carrier(L, a);
  CrispSubset members(a.size());
  for (Element x = 0; x < a.size(); ++x)
    if (a.mu(x) == a.mu(0) && a.lambda(x) == a.lambda(0)) members.insert(x);
  auto s = as_subspace(L.field(), L.dim(), members);
  if (!s || !is_crisp_ideal(L, *s))
    throw std::invalid_argument("kernel of the fuzzy set is not a crisp ideal");
  return *s;
}

IFQuotient::IFQuotient(AlgebraPtr algebra, IFSet ideal)
    : source_(std::move(algebra)),
      ideal_(std::move(ideal)),
      quotient_([&] {
        if (!is_if_ideal(*source_, ideal_).holds())
          throw std::invalid_argument("quotient: fuzzy set is not an ideal");
        return quotient_by_crisp_ideal(source_, kernel_ideal(*source_, ideal_));
      }()) {
  for (Element q = 0; q < quotient_.algebra->size(); ++q)
    labels_.push_back({quotient_.lift(q), q});
}

CosetLabel IFQuotient::label_of(const FVector& x) const {
  return labels_.at(quotient_.projection.apply(source_->element(x)));
}

CosetLabel IFQuotient::add(const FVector& x, const FVector& y) const { return label_of(x + y); }

CosetLabel IFQuotient::scale(const Scalar& alpha, const FVector& x) const { return label_of(alpha * x); }

CosetLabel IFQuotient::bracket(std::span<const FVector> xs) const {
  return label_of(source_->bracket(xs));
}

IFQuotient quotient_if(const AlgebraPtr& L, const IFSet& a) { return IFQuotient(L, a); }

}  // namespace fuzzylie
