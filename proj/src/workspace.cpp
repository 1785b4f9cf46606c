#include "fuzzylie/workspace.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

namespace fuzzylie {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  for (auto w : split(s, ' '))
    if (!w.empty()) out.push_back(w);
  return out;
}

std::optional<std::uint64_t> to_uint(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

bool valid_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

std::string join_coords(const FVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string cut_token(const Claim& c) {
  if (c.claim != ClaimKind::cuts) return "-";
  return std::string(c.cut.strict_mu ? "s" : "n") + (c.cut.strict_lambda ? "s" : "n");
}

const char* claim_token(ClaimKind k) {
  switch (k) {
    case ClaimKind::fuzzy: return "fuzzy";
    case ClaimKind::cuts: return "cuts";
    case ClaimKind::coset_criterion: return "coset-criterion";
    case ClaimKind::quotient: return "quotient";
  }
  return "?";
}

bool same_map(const LinearMap& a, const LinearMap& b) {
  return *a.source() == *b.source() && *a.target() == *b.target() && a.columns() == b.columns();
}

/// Line-oriented parser; sections are built when the next header (or EOF) is seen.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Workspace run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      auto end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no_;
      line(trim(text_.substr(pos, end - pos)));
      pos = end + 1;
    }
    finish();
    return std::move(ws_);
  }

 private:
  enum class Kind { none, algebra, ifset, map, report };

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_no_, msg); }
  [[noreturn]] void fail_at(std::size_t line, const std::string& msg) const { throw ParseError(line, msg); }

  void line(std::string_view l) {
    if (l.empty() || l.front() == '#') return;
    if (l.front() == '[') {
      finish();
      header(l);
      return;
    }
    if (kind_ == Kind::none) fail("content outside of a section");
    body_.emplace_back(line_no_, std::string(l));
  }

  void header(std::string_view l) {
    if (l.back() != ']') fail("unterminated section header");
    const auto w = words(l.substr(1, l.size() - 2));
    header_line_ = line_no_;
    body_.clear();
    if (w.size() == 2 && w[0] == "algebra") {
      kind_ = Kind::algebra;
    } else if (w.size() == 4 && w[0] == "ifset" && w[2] == "over") {
      kind_ = Kind::ifset;
      target_ = std::string(w[3]);
    } else if (w.size() == 5 && w[0] == "map" && w[3] == "->") {
      kind_ = Kind::map;
      from_ = std::string(w[2]);
      target_ = std::string(w[4]);
    } else if (w.size() == 2 && w[0] == "report") {
      kind_ = Kind::report;
    } else {
      fail("unrecognized section header");
    }
    name_ = std::string(w[1]);
    if (kind_ != Kind::report) {
      if (!valid_name(name_)) fail("invalid name '" + name_ + "'");
      if (ws_.has_name(name_)) fail("duplicate name '" + name_ + "'");
    }
    for (const auto* ref : {&from_, &target_})
      if ((kind_ == Kind::ifset || (kind_ == Kind::map)) && !ref->empty() && !ws_.has_algebra(*ref))
        fail("unknown algebra '" + *ref + "'");
  }

  void finish() {
    switch (kind_) {
      case Kind::algebra: build_algebra(); break;
      case Kind::ifset: build_ifset(); break;
      case Kind::map: build_map(); break;
      case Kind::report: build_report(); break;
      case Kind::none: break;
    }
    kind_ = Kind::none;
    from_.clear();
    target_.clear();
  }

  /// key=value with optional spaces.
  static std::optional<std::pair<std::string_view, std::string_view>> key_value(std::string_view l) {
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) return std::nullopt;
    return std::pair{trim(l.substr(0, eq)), trim(l.substr(eq + 1))};
  }

  std::vector<std::uint8_t> coords(std::size_t line, std::string_view list, std::size_t dim, unsigned p) const {
    std::vector<std::uint8_t> out;
    if (dim == 0 && list.empty()) return out;
    for (auto c : split(list, ',')) {
      const auto v = to_uint(c);
      if (!v) fail_at(line, "expected a coefficient, got '" + std::string(c) + "'");
      if (*v >= p) fail_at(line, "coefficient " + std::to_string(*v) + " is not below p=" + std::to_string(p));
      out.push_back(static_cast<std::uint8_t>(*v));
    }
    if (out.size() != dim)
      fail_at(line, "expected " + std::to_string(dim) + " coefficients, got " + std::to_string(out.size()));
    return out;
  }

  void build_algebra() {
    std::optional<std::uint64_t> p, d, n;
    std::vector<std::pair<std::size_t, std::string>> sc_lines;
    for (const auto& [ln, l] : body_) {
      if (l.rfind("sc ", 0) == 0) {
        sc_lines.emplace_back(ln, l);
        continue;
      }
      const auto kv = key_value(l);
      if (!kv) fail_at(ln, "expected key=value or an sc line");
      const auto v = to_uint(kv->second);
      if (!v) fail_at(ln, "expected a non-negative integer");
      std::optional<std::uint64_t>* slot = kv->first == "p" ? &p : kv->first == "d" ? &d : kv->first == "n" ? &n : nullptr;
      if (!slot) fail_at(ln, "unknown key '" + std::string(kv->first) + "'");
      if (*slot) fail_at(ln, "duplicate key '" + std::string(kv->first) + "'");
      *slot = *v;
    }
    if (!p || !d || !n) fail_at(header_line_, "algebra '" + name_ + "' needs p=, d= and n=");
    if (*p > 251 || !is_prime(static_cast<unsigned>(*p))) fail_at(header_line_, "p must be a prime <= 251");
    if (*n < 2) fail_at(header_line_, "n must be at least 2");
    if (*d > 64) fail_at(header_line_, "d is too large");
    const PrimeField F(static_cast<unsigned>(*p));

    std::map<BasisTuple, FVector> sc;
    for (const auto& [ln, l] : sc_lines) {
      const auto kv = key_value(std::string_view(l).substr(3));
      if (!kv) fail_at(ln, "sc line needs '='");
      BasisTuple t;
      for (auto w : words(kv->first)) {
        const auto i = to_uint(w);
        if (!i) fail_at(ln, "expected a basis index, got '" + std::string(w) + "'");
        if (*i >= *d) fail_at(ln, "basis index " + std::to_string(*i) + " out of range");
        if (!t.empty() && *i <= t.back()) fail_at(ln, "basis indices must be strictly increasing");
        t.push_back(static_cast<std::size_t>(*i));
      }
      if (t.size() != *n) fail_at(ln, "sc line needs " + std::to_string(*n) + " indices");
      if (sc.count(t)) fail_at(ln, "duplicate sc line");
      sc.emplace(t, FVector(F, coords(ln, kv->second, *d, F.p())));
    }
    AlgebraPtr L;
    try {
      L = std::make_shared<const NLieAlgebra>(F, *d, *n, std::move(sc));
    } catch (const std::length_error& e) {
      fail_at(header_line_, e.what());
    }
    const auto report = validate_filippov(*L);
    if (!report.valid()) {
      const auto& v = report.violations.front();
      std::string tuple;
      for (auto i : v.xs) tuple += " e" + std::to_string(i);
      tuple += " |";
      for (auto i : v.ys) tuple += " e" + std::to_string(i);
      throw FilippovError("line " + std::to_string(header_line_) + ": algebra '" + name_ +
                              "' fails the Filippov identity at" + tuple,
                          v);
    }
    ws_.add_algebra(name_, L);
  }

  /// x is checked against mu + lambda <= 1 unless it is nullopt.
  std::pair<Degree, Degree> degrees(std::size_t ln, std::string_view rhs, std::optional<Element> x) const {
    const auto w = words(rhs);
    if (w.size() != 2) fail_at(ln, "expected '<mu> <lambda>'");
    Degree mu, lambda;
    try {
      mu = Degree::parse(w[0]);
      lambda = Degree::parse(w[1]);
    } catch (const std::invalid_argument& e) {
      fail_at(ln, e.what());
    }
    if (x) check_sum(ln, mu, lambda, *x);
    return {mu, lambda};
  }

  static void check_sum(std::size_t ln, const Degree& mu, const Degree& lambda, Element x) {
    if (!sum_at_most_one(mu, lambda))
      throw InvariantError("line " + std::to_string(ln) + ": mu + lambda > 1 at element " + std::to_string(x) +
                               " (" + to_string(mu) + " + " + to_string(lambda) + ")",
                           x);
  }

  void build_ifset() {
    const auto& L = ws_.algebra(target_);
    std::optional<std::pair<Degree, Degree>> fallback;
    std::size_t fallback_line = 0;
    std::map<Element, std::pair<Degree, Degree>> listed;
    for (const auto& [ln, l] : body_) {
      const auto kv = key_value(l);
      if (!kv) fail_at(ln, "expected 'deg <x> = <mu> <lambda>' or 'default = <mu> <lambda>'");
      if (kv->first == "default") {
        if (fallback) fail_at(ln, "duplicate default line");
        fallback = degrees(ln, kv->second, std::nullopt);
        fallback_line = ln;
        continue;
      }
      const auto w = words(kv->first);
      if (w.size() != 2 || w[0] != "deg") fail_at(ln, "expected 'deg <x> = <mu> <lambda>'");
      const auto x = to_uint(w[1]);
      if (!x) fail_at(ln, "expected an element index");
      if (*x >= L->size()) fail_at(ln, "element " + std::to_string(*x) + " out of range");
      if (listed.count(static_cast<Element>(*x))) fail_at(ln, "duplicate element " + std::to_string(*x));
      listed.emplace(static_cast<Element>(*x), degrees(ln, kv->second, static_cast<Element>(*x)));
    }
    if (!fallback) fail_at(header_line_, "ifset '" + name_ + "' needs a 'default = <mu> <lambda>' line");
    // The default is reported against the first element it actually covers.
    for (Element x = 0; x < L->size(); ++x)
      if (!listed.count(x)) {
        check_sum(fallback_line, fallback->first, fallback->second, x);
        break;
      }
    std::vector<Degree> mu(L->size(), fallback->first), lambda(L->size(), fallback->second);
    for (const auto& [x, v] : listed) {
      mu[x] = v.first;
      lambda[x] = v.second;
    }
    ws_.add_ifset(name_, target_, IFSet(L, std::move(mu), std::move(lambda)));
  }

  void build_map() {
    const auto& S = ws_.algebra(from_);
    const auto& T = ws_.algebra(target_);
    std::vector<std::optional<FVector>> cols(S->dim());
    for (const auto& [ln, l] : body_) {
      const auto kv = key_value(l);
      const auto w = kv ? words(kv->first) : std::vector<std::string_view>{};
      if (w.size() != 2 || w[0] != "col") fail_at(ln, "expected 'col <j> = c0,...'");
      const auto j = to_uint(w[1]);
      if (!j || *j >= S->dim()) fail_at(ln, "column index out of range");
      if (cols[*j]) fail_at(ln, "duplicate column " + std::to_string(*j));
      cols[*j] = FVector(T->field(), coords(ln, kv->second, T->dim(), T->field().p()));
    }
    std::vector<FVector> columns;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!cols[j]) fail_at(header_line_, "map '" + name_ + "' is missing column " + std::to_string(j));
      columns.push_back(*cols[j]);
    }
    if (S->field() != T->field()) fail_at(header_line_, "map between algebras over different fields");
    if (S->arity() != T->arity()) fail_at(header_line_, "map between algebras of different arity");
    ws_.add_map(name_, from_, target_, LinearMap(S, T, std::move(columns)));
  }

  void build_report() {
    ReportBlock r{name_, {}};
    for (const auto& [ln, l] : body_) {
      const auto eq = l.find(" = ");
      if (eq == std::string::npos) fail_at(ln, "expected 'key = value'");
      r.entries.emplace_back(std::string(trim(std::string_view(l).substr(0, eq))),
                             std::string(trim(std::string_view(l).substr(eq + 3))));
    }
    ws_.add_report(std::move(r));
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  Kind kind_ = Kind::none;
  std::size_t header_line_ = 0;
  std::string name_, from_, target_;
  std::vector<std::pair<std::size_t, std::string>> body_;
  Workspace ws_;
};

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::vector<std::string> ReportBlock::values(std::string_view key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries)
    if (k == key) out.push_back(v);
  return out;
}

const AlgebraPtr& Workspace::algebra(std::string_view name) const {
  for (const auto& [n, a] : algebras_)
    if (n == name) return a;
  throw std::out_of_range("no algebra named '" + std::string(name) + "'");
}

const NamedIFSet& Workspace::ifset(std::string_view name) const {
  for (const auto& s : ifsets_)
    if (s.name == name) return s;
  throw std::out_of_range("no ifset named '" + std::string(name) + "'");
}

const NamedMap& Workspace::map(std::string_view name) const {
  for (const auto& m : maps_)
    if (m.name == name) return m;
  throw std::out_of_range("no map named '" + std::string(name) + "'");
}

bool Workspace::has_algebra(std::string_view name) const {
  return std::any_of(algebras_.begin(), algebras_.end(), [&](const auto& a) { return a.first == name; });
}

bool Workspace::has_name(std::string_view name) const {
  return has_algebra(name) ||
         std::any_of(ifsets_.begin(), ifsets_.end(), [&](const auto& s) { return s.name == name; }) ||
         std::any_of(maps_.begin(), maps_.end(), [&](const auto& m) { return m.name == name; });
}

std::string Workspace::name_of(const AlgebraPtr& algebra) const {
  for (const auto& [n, a] : algebras_)
    if (a == algebra) return n;
  for (const auto& [n, a] : algebras_)
    if (*a == *algebra) return n;
  throw std::out_of_range("algebra is not part of the workspace");
}

void Workspace::add_algebra(std::string name, AlgebraPtr algebra) {
  if (!valid_name(name)) throw std::invalid_argument("invalid name '" + name + "'");
  if (has_name(name)) throw std::invalid_argument("duplicate name '" + name + "'");
  algebras_.emplace_back(std::move(name), std::move(algebra));
}

void Workspace::add_ifset(std::string name, std::string algebra, IFSet set) {
  if (!valid_name(name)) throw std::invalid_argument("invalid name '" + name + "'");
  if (has_name(name)) throw std::invalid_argument("duplicate name '" + name + "'");
  if (!(*this->algebra(algebra) == *set.carrier()))
    throw std::invalid_argument("ifset '" + name + "' does not live on '" + algebra + "'");
  ifsets_.push_back({std::move(name), std::move(algebra), std::move(set)});
}

void Workspace::add_map(std::string name, std::string from, std::string to, LinearMap map) {
  if (!valid_name(name)) throw std::invalid_argument("invalid name '" + name + "'");
  if (has_name(name)) throw std::invalid_argument("duplicate name '" + name + "'");
  if (!(*algebra(from) == *map.source()) || !(*algebra(to) == *map.target()))
    throw std::invalid_argument("map '" + name + "' does not match its declared algebras");
  maps_.push_back({std::move(name), std::move(from), std::move(to), std::move(map)});
}

void Workspace::add_report(ReportBlock report) { reports_.push_back(std::move(report)); }

bool Workspace::operator==(const Workspace& o) const {
  if (algebras_.size() != o.algebras_.size() || ifsets_.size() != o.ifsets_.size() ||
      maps_.size() != o.maps_.size() || reports_ != o.reports_)
    return false;
  for (std::size_t i = 0; i < algebras_.size(); ++i)
    if (algebras_[i].first != o.algebras_[i].first || !(*algebras_[i].second == *o.algebras_[i].second))
      return false;
  for (std::size_t i = 0; i < ifsets_.size(); ++i) {
    const auto &a = ifsets_[i], &b = o.ifsets_[i];
    if (a.name != b.name || a.algebra != b.algebra || !(a.set == b.set)) return false;
  }
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const auto &a = maps_[i], &b = o.maps_[i];
    if (a.name != b.name || a.from != b.from || a.to != b.to || !same_map(a.map, b.map)) return false;
  }
  return true;
}

Workspace parse_workspace(std::string_view text) { return Parser(text).run(); }

std::string serialize_algebra(std::string_view name, const NLieAlgebra& L) {
  std::ostringstream out;
  out << "[algebra " << name << "]\n";
  out << "p=" << L.field().p() << "\nd=" << L.dim() << "\nn=" << L.arity() << "\n";
  for (const auto& [t, v] : L.structure_constants()) {
    out << "sc";
    for (auto i : t) out << ' ' << i;
    out << " = " << join_coords(v) << "\n";
  }
  return out.str();
}

std::string serialize_ifset(std::string_view name, std::string_view algebra, const IFSet& set) {
  // Most frequent pair as default; ties go to the pair seen first by index.
  std::map<std::pair<Degree, Degree>, std::pair<std::size_t, Element>> counts;
  for (Element x = 0; x < set.size(); ++x) {
    auto [it, fresh] = counts.try_emplace({set.mu(x), set.lambda(x)}, 0, x);
    ++it->second.first;
  }
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it)
    if (it->second.first > best->second.first ||
        (it->second.first == best->second.first && it->second.second < best->second.second))
      best = it;
  const auto& [dmu, dla] = best->first;

  std::ostringstream out;
  out << "[ifset " << name << " over " << algebra << "]\n";
  out << "default = " << to_string(dmu) << ' ' << to_string(dla) << "\n";
  for (Element x = 0; x < set.size(); ++x)
    if (!(set.mu(x) == dmu) || !(set.lambda(x) == dla))
      out << "deg " << x << " = " << to_string(set.mu(x)) << ' ' << to_string(set.lambda(x)) << "\n";
  return out.str();
}

std::string serialize_map(std::string_view name, std::string_view from, std::string_view to, const LinearMap& map) {
  std::ostringstream out;
  out << "[map " << name << ' ' << from << " -> " << to << "]\n";
  for (std::size_t j = 0; j < map.columns().size(); ++j) out << "col " << j << " = " << join_coords(map.columns()[j]) << "\n";
  return out.str();
}

std::string serialize(const Workspace& ws) {
  std::vector<std::string> blocks;
  for (const auto& [name, a] : ws.algebras()) blocks.push_back(serialize_algebra(name, *a));
  for (const auto& s : ws.ifsets()) blocks.push_back(serialize_ifset(s.name, s.algebra, s.set));
  for (const auto& m : ws.maps()) blocks.push_back(serialize_map(m.name, m.from, m.to, m.map));
  for (const auto& r : ws.reports()) {
    std::string b = "[report " + r.id + "]\n";
    for (const auto& [k, v] : r.entries) b += k + " = " + v + "\n";
    blocks.push_back(std::move(b));
  }
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "\n";
    out += blocks[i];
  }
  return out;
}

Workspace report_workspace(const CheckReport& report) {
  Workspace ws;
  ReportBlock r{to_string(report.id), {}};
  r.entries.emplace_back("algebra", report.algebra);
  r.entries.emplace_back("seed", std::to_string(report.seed));
  r.entries.emplace_back("trials", std::to_string(report.trials));
  r.entries.emplace_back("failures", std::to_string(report.failure_count));
  if (report.control_trials > 0)
    r.entries.emplace_back("controls",
                           std::to_string(report.control_detections) + "/" + std::to_string(report.control_trials));
  r.entries.emplace_back("outcome", report.outcome);
  for (const auto& note : report.notes) r.entries.emplace_back("note", note);

  auto add = [&](const Witness& w, const std::string& prefix) {
    r.entries.emplace_back("witness", prefix + " " + w.detail);
    std::vector<std::pair<AlgebraPtr, std::string>> carriers;
    auto carrier_name = [&](const AlgebraPtr& a) {
      for (const auto& [ptr, name] : carriers)
        if (ptr == a || *ptr == *a) return name;
      const auto name = prefix + "_L" + std::to_string(carriers.size() + 1);
      ws.add_algebra(name, a);
      carriers.emplace_back(a, name);
      return name;
    };
    for (const auto& [name, set] : w.sets) ws.add_ifset(prefix + "_" + name, carrier_name(set.carrier()), set);
    for (const auto& [name, map] : w.maps) {
      const auto from = carrier_name(map.source()), to = carrier_name(map.target());
      ws.add_map(prefix + "_" + name, from, to, map);
    }
    for (const auto& c : w.claims)
      r.entries.emplace_back("claim", prefix + " " + prefix + "_" + c.set + " " + claim_token(c.claim) + " " +
                                          to_string(c.kind) + " " + cut_token(c) + " " +
                                          (c.holds ? "true" : "false"));
  };
  for (std::size_t i = 0; i < report.failures.size(); ++i) add(report.failures[i], "f" + std::to_string(i + 1));
  for (std::size_t i = 0; i < report.controls.size(); ++i) add(report.controls[i], "c" + std::to_string(i + 1));
  ws.add_report(std::move(r));
  return ws;
}

std::vector<Witness> report_witnesses(const Workspace& ws, const ReportBlock& report) {
  std::vector<Witness> out;
  for (const auto& entry : report.values("witness")) {
    const auto space = entry.find(' ');
    const auto prefix = entry.substr(0, space);
    Witness w{space == std::string::npos ? "" : entry.substr(space + 1), {}, {}, {}};
    const auto stem = prefix + "_";
    for (const auto& s : ws.ifsets())
      if (s.name.rfind(stem, 0) == 0) w.sets.emplace_back(s.name.substr(stem.size()), s.set);
    for (const auto& m : ws.maps())
      if (m.name.rfind(stem, 0) == 0) w.maps.emplace_back(m.name.substr(stem.size()), m.map);
    for (const auto& claim : report.values("claim")) {
      const auto t = words(claim);
      if (t.size() != 6) throw std::invalid_argument("malformed claim '" + claim + "'");
      if (t[0] != prefix) continue;
      Claim c;
      c.set = std::string(t[1].substr(stem.size()));
      if (t[2] == "fuzzy") c.claim = ClaimKind::fuzzy;
      else if (t[2] == "cuts") c.claim = ClaimKind::cuts;
      else if (t[2] == "coset-criterion") c.claim = ClaimKind::coset_criterion;
      else if (t[2] == "quotient") c.claim = ClaimKind::quotient;
      else throw std::invalid_argument("unknown claim kind '" + std::string(t[2]) + "'");
      if (t[3] == "subspace") c.kind = IFKind::subspace;
      else if (t[3] == "subalgebra") c.kind = IFKind::subalgebra;
      else if (t[3] == "ideal") c.kind = IFKind::ideal;
      else throw std::invalid_argument("unknown predicate '" + std::string(t[3]) + "'");
      if (c.claim == ClaimKind::cuts) {
        if (t[4].size() != 2) throw std::invalid_argument("malformed cut '" + std::string(t[4]) + "'");
        c.cut = {t[4][0] == 's', t[4][1] == 's'};
      }
      c.holds = t[5] == "true";
      w.claims.push_back(std::move(c));
    }
    out.push_back(std::move(w));
  }
  return out;
}

Element parse_element(const NLieAlgebra& L, std::string_view text) {
  text = trim(text);
  if (text.find(',') == std::string_view::npos) {
    const auto v = to_uint(text);
    if (!v || *v >= L.size()) throw std::invalid_argument("element '" + std::string(text) + "' out of range");
    return static_cast<Element>(*v);
  }
  std::vector<std::uint8_t> c;
  for (auto part : split(text, ',')) {
    const auto v = to_uint(part);
    if (!v || *v >= L.field().p()) throw std::invalid_argument("bad coordinate '" + std::string(part) + "'");
    c.push_back(static_cast<std::uint8_t>(*v));
  }
  if (c.size() != L.dim()) throw std::invalid_argument("element needs " + std::to_string(L.dim()) + " coordinates");
  return L.element(FVector(L.field(), std::move(c)));
}

}  // namespace fuzzylie
