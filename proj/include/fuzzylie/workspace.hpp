#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzylie/algebra.hpp"
#include "fuzzylie/ifset.hpp"
#include "fuzzylie/verifier.hpp"

namespace fuzzylie {

/// Malformed workspace text. what() starts with "line N: ".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An algebra section whose structure constants break the Filippov identity.
class FilippovError : public std::invalid_argument {
 public:
  FilippovError(const std::string& what, FilippovViolation witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const FilippovViolation& witness() const { return witness_; }

 private:
  FilippovViolation witness_;
};

/// `[report ID]` block: ordered key = value lines, keys may repeat.
struct ReportBlock {
  std::string id;
  std::vector<std::pair<std::string, std::string>> entries;

  bool operator==(const ReportBlock&) const = default;
  /// Values of every entry with this key, in order.
  std::vector<std::string> values(std::string_view key) const;
};

struct NamedIFSet {
  std::string name;
  std::string algebra;
  IFSet set;
};

struct NamedMap {
  std::string name;
  std::string from;
  std::string to;
  LinearMap map;
};

/// Parsed contents of a workspace file, in file order per section kind.
/// Sets and maps refer to algebras declared earlier in the file.
class Workspace {
 public:
  const std::vector<std::pair<std::string, AlgebraPtr>>& algebras() const { return algebras_; }
  const std::vector<NamedIFSet>& ifsets() const { return ifsets_; }
  const std::vector<NamedMap>& maps() const { return maps_; }
  const std::vector<ReportBlock>& reports() const { return reports_; }

  /// Throw std::out_of_range when the name is unknown.
  const AlgebraPtr& algebra(std::string_view name) const;
  const NamedIFSet& ifset(std::string_view name) const;
  const NamedMap& map(std::string_view name) const;
  bool has_algebra(std::string_view name) const;
  bool has_name(std::string_view name) const;

  /// Name of an algebra in this workspace that is the same object or structurally equal.
  std::string name_of(const AlgebraPtr& algebra) const;

  /// Adders validate names (unique, [A-Za-z0-9_.-]+) and references.
  void add_algebra(std::string name, AlgebraPtr algebra);
  void add_ifset(std::string name, std::string algebra, IFSet set);
  void add_map(std::string name, std::string from, std::string to, LinearMap map);
  void add_report(ReportBlock report);

  /// Same names, same structures, same order.
  bool operator==(const Workspace& o) const;

 private:
  std::vector<std::pair<std::string, AlgebraPtr>> algebras_;
  std::vector<NamedIFSet> ifsets_;
  std::vector<NamedMap> maps_;
  std::vector<ReportBlock> reports_;
};

/// Parses and validates: algebras pass the Filippov check, fuzzy sets satisfy
/// mu + lambda <= 1 (InvariantError names the element), maps are linear maps
/// between declared algebras of equal arity.
Workspace parse_workspace(std::string_view text);

std::string serialize(const Workspace& ws);
std::string serialize_algebra(std::string_view name, const NLieAlgebra& algebra);
/// The most frequent (mu, lambda) pair becomes the default line; the rest are
/// listed by element index.
std::string serialize_ifset(std::string_view name, std::string_view algebra, const IFSet& set);
std::string serialize_map(std::string_view name, std::string_view from, std::string_view to, const LinearMap& map);

/// A report with its witnesses. Witness k of the failures (controls) is
/// stored under names prefixed "fK_" ("cK_"); claims are listed in the report block.
Workspace report_workspace(const CheckReport& report);
/// Rebuilds the witnesses recorded by report_workspace.
std::vector<Witness> report_witnesses(const Workspace& ws, const ReportBlock& report);

/// Element index from "5" or from coordinates "1,0,2".
Element parse_element(const NLieAlgebra& algebra, std::string_view text);

}  // namespace fuzzylie
