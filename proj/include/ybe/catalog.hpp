#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/construct.hpp"
#include "ybe/errors.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// The YBX/1 text format:
//
//   YBX/1 <kind>              kind: solution | brace | datum | census
//   n=<int>                   m=<int> for brace and datum
//   <row>                     space-separated 0-indexed integers
//   ...
//   --                        section separator
//   <row>
//   ==                        optional; key=value lines follow
//   indecomposable=true
//   canonical_hash=fnv1a64:<16 hex digits>
//
// solution: one section, the sigma-table (row x lists sigma_x).
// brace: two sections, + then o.
// datum: + and o, then one section per chosen orbit whose first row is the
//   representative a_i and whose further rows are the subgroups K_{i,j}.
// census: one sigma-table section per solution, in canonical order.

enum class RecordKind { Solution, Brace, Datum, Census };

std::string_view kind_name(RecordKind k);

using Table = std::vector<std::vector<int>>;

struct CatalogRecord {
  RecordKind kind = RecordKind::Solution;
  int size = 0;  // n or m
  std::vector<Table> sections;
  /// Ordered key=value pairs; keys the library does not know are kept as is.
  std::vector<std::pair<std::string, std::string>> invariants;

  /// Value of `key` or "" when absent.
  std::string get(std::string_view key) const;
  void set(const std::string& key, const std::string& value);

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

/// Parse failure with a 1-based position.
class ParseError : public FormatError {
 public:
  ParseError(int line, int column, const std::string& what)
      : FormatError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        detail_(what) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  /// The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

/// Header names a format version other than YBX/1.
class VersionError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A store already holds a different payload under the same hash.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

std::string serialize(const CatalogRecord& r);
CatalogRecord parse(std::string_view text);
/// Several records back to back, each starting at its own header line.
std::vector<CatalogRecord> parse_all(std::string_view text);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);
/// "fnv1a64:" followed by 16 lowercase hex digits of the hash of the
/// serialized payload (header, size line and sections, no invariants).
std::string payload_hash(const CatalogRecord& r);

/// Payload only. The record_of_* variants also add computed invariants and
/// canonical_hash, which is taken on the canonical form so that isomorphic
/// inputs share it.
CatalogRecord solution_record(const Solution& s);
CatalogRecord brace_record(const Brace& b);
CatalogRecord datum_record(const Brace& b, const ConstructionDatum& d);

CatalogRecord record_of_solution(const Solution& s);
CatalogRecord record_of_brace(const Brace& b);

Solution solution_from(const CatalogRecord& r);
Brace brace_from(const CatalogRecord& r);
std::pair<Brace, ConstructionDatum> datum_from(const CatalogRecord& r);

/// Files are <dir>/<hex>.ybx named by the record's canonical_hash (or its
/// payload hash when it has none). Writes go to a temporary file that is then
/// renamed. Re-putting the same payload replaces the record; a different
/// payload under an existing name throws IntegrityError.
std::filesystem::path store_put(const std::filesystem::path& dir, const CatalogRecord& r);

/// All records in `dir` whose invariants match every key=value in `filter`
/// ("hash" matches the canonical_hash with or without its prefix). Sorted by
/// file name; a missing directory is an empty store.
std::vector<CatalogRecord> store_query(const std::filesystem::path& dir,
                                       const std::map<std::string, std::string>& filter = {});

}  // namespace ybe
