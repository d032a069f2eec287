#include "ybe/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace ybe {

namespace {

constexpr std::string_view kMagic = "YBX/";
constexpr std::string_view kVersion = "1";

struct KindInfo {
  RecordKind kind;
  std::string_view name;
  char size_key;
};

constexpr KindInfo kKinds[] = {
    {RecordKind::Solution, "solution", 'n'},
    {RecordKind::Brace, "brace", 'm'},
    {RecordKind::Datum, "datum", 'm'},
    {RecordKind::Census, "census", 'n'},
};

const KindInfo& info(RecordKind k) {
  for (const auto& i : kKinds)
    if (i.kind == k) return i;
  throw ConsistencyError("unknown record kind");
}

std::string join(std::span<const int> row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(row[i]);
  }
  return out;
}

std::string payload_text(const CatalogRecord& r) {
  const KindInfo& k = info(r.kind);
  std::string out;
  out += kMagic;
  out += kVersion;
  out += ' ';
  out += k.name;
  out += '\n';
  out += k.size_key;
  out += '=' + std::to_string(r.size) + '\n';
  for (std::size_t s = 0; s < r.sections.size(); ++s) {
    if (s) out += "--\n";
    for (const auto& row : r.sections[s]) out += join(row) + '\n';
  }
  return out;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Table rows_of(std::span<const int> flat, int m) {
  Table t;
  for (int x = 0; x < m; ++x) {
    const auto row = flat.subspan(static_cast<std::size_t>(x * m), static_cast<std::size_t>(m));
    t.emplace_back(row.begin(), row.end());
  }
  return t;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string factors_text(std::span<const int> f) {
  std::string out;
  for (int x : f) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out.empty() ? "1" : out;
}

// Row-count and entry-range rules per kind; datum orbit sections are free-form.
void check_shape(const CatalogRecord& r, const std::vector<int>& section_lines) {
  auto fail = [&](std::size_t s, int row, const std::string& what) {
    const int line = s < section_lines.size() ? section_lines[s] + row : 1;
    throw ParseError(line, 1, "section " + std::to_string(s + 1) + ", row " + std::to_string(row + 1) + ": " + what);
  };
  const std::size_t square = r.kind == RecordKind::Datum ? 2 : r.sections.size();
  if (r.kind == RecordKind::Solution && r.sections.size() != 1)
    throw ParseError(1, 1, "a solution has exactly one section, found " + std::to_string(r.sections.size()));
  if (r.kind == RecordKind::Brace && r.sections.size() != 2)
    throw ParseError(1, 1, "a brace has exactly two sections, found " + std::to_string(r.sections.size()));
  if (r.kind == RecordKind::Datum && r.sections.size() < 3)
    throw ParseError(1, 1, "a datum needs the two brace tables and at least one orbit section");
  for (std::size_t s = 0; s < r.sections.size(); ++s) {
    const Table& t = r.sections[s];
    if (s < square && static_cast<int>(t.size()) != r.size)
      fail(s, std::max(0, static_cast<int>(t.size()) - 1),
           "table has " + std::to_string(t.size()) + " rows, expected " + std::to_string(r.size));
    if (s >= square && t.empty()) fail(s, 0, "empty orbit section");
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (s < square && static_cast<int>(t[i].size()) != r.size)
        fail(s, static_cast<int>(i),
             "row has " + std::to_string(t[i].size()) + " entries, expected " + std::to_string(r.size));
      if (s >= square && i == 0 && t[i].size() != 1) fail(s, 0, "orbit section must start with a single representative");
      for (int v : t[i])
        if (v < 0 || v >= r.size) fail(s, static_cast<int>(i), "entry " + std::to_string(v) + " out of range");
    }
  }
}

}  // namespace

std::string_view kind_name(RecordKind k) { return info(k).name; }

std::string CatalogRecord::get(std::string_view key) const {
  for (const auto& [k, v] : invariants)
    if (k == key) return v;
  return {};
}

void CatalogRecord::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : invariants)
    if (k == key) {
      v = value;
      return;
    }
  invariants.emplace_back(key, value);
}

std::string serialize(const CatalogRecord& r) {
  std::string out = payload_text(r);
  if (!r.invariants.empty()) {
    out += "==\n";
    for (const auto& [k, v] : r.invariants) out += k + '=' + v + '\n';
  }
  return out;
}

CatalogRecord parse(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError(1, 1, "empty input");

  CatalogRecord r;
  const std::string_view header = lines[0];
  if (header.substr(0, kMagic.size()) != kMagic) throw ParseError(1, 1, "expected header 'YBX/1 <kind>'");
  const std::size_t space = header.find(' ');
  const std::string_view version = header.substr(kMagic.size(), space == std::string_view::npos ? std::string_view::npos : space - kMagic.size());
  if (version != kVersion)
    throw VersionError(1, static_cast<int>(kMagic.size()) + 1,
                       "unsupported format version '" + std::string(version) + "' (this reader handles YBX/1)");
  if (space == std::string_view::npos) throw ParseError(1, static_cast<int>(header.size()) + 1, "missing record kind");
  const std::string_view kind = header.substr(space + 1);
  const KindInfo* ki = nullptr;
  for (const auto& k : kKinds)
    if (k.name == kind) ki = &k;
  if (!ki) throw ParseError(1, static_cast<int>(space) + 2, "unknown record kind '" + std::string(kind) + "'");
  r.kind = ki->kind;

  if (lines.size() < 2) throw ParseError(2, 1, "missing size line");
  const std::string_view size_line = lines[1];
  if (size_line.size() < 3 || size_line[0] != ki->size_key || size_line[1] != '=')
    throw ParseError(2, 1, std::string("expected '") + ki->size_key + "=<int>'");
  {
    const char* first = size_line.data() + 2;
    const char* last = size_line.data() + size_line.size();
    auto [p, ec] = std::from_chars(first, last, r.size);
    if (ec != std::errc() || p != last || r.size < 1)
      throw ParseError(2, static_cast<int>(p - size_line.data()) + 1, "size must be a positive integer");
  }

  std::vector<int> section_lines;
  std::size_t i = 2;
  r.sections.emplace_back();
  section_lines.push_back(3);
  for (; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const int lineno = static_cast<int>(i) + 1;
    if (line == "==") break;
    if (line == "--") {
      r.sections.emplace_back();
      section_lines.push_back(lineno + 1);
      continue;
    }
    if (line.empty() && i + 1 == lines.size()) break;
    std::vector<int> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (line[pos] == ' ') {
        ++pos;
        continue;
      }
      int v = 0;
      auto [p, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
      if (ec != std::errc() || (p != line.data() + line.size() && *p != ' '))
        throw ParseError(lineno, static_cast<int>(pos) + 1, "expected a non-negative integer");
      row.push_back(v);
      pos = static_cast<std::size_t>(p - line.data());
    }
    if (row.empty()) throw ParseError(lineno, 1, "empty row");
    r.sections.back().push_back(std::move(row));
  }
  if (i < lines.size()) {
    for (++i; i < lines.size(); ++i) {
      const std::string_view line = lines[i];
      if (line.empty() && i + 1 == lines.size()) break;
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos || eq == 0)
        throw ParseError(static_cast<int>(i) + 1, 1, "expected key=value");
      r.invariants.emplace_back(std::string(line.substr(0, eq)), std::string(line.substr(eq + 1)));
    }
  }
  check_shape(r, section_lines);
  return r;
}

std::vector<CatalogRecord> parse_all(std::string_view text) {
  std::vector<std::size_t> starts;
  for (std::size_t pos = 0; pos < text.size();) {
    if (text.substr(pos, kMagic.size()) == kMagic) starts.push_back(pos);
    const std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (starts.size() <= 1 || starts.front() != 0) return {parse(text)};
  std::vector<CatalogRecord> out;
  int line_offset = 0;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const std::size_t end = i + 1 < starts.size() ? starts[i + 1] : text.size();
    const std::string_view chunk = text.substr(starts[i], end - starts[i]);
    try {
      out.push_back(parse(chunk));
    } catch (const VersionError& e) {
      throw VersionError(e.line() + line_offset, e.column(), "record " + std::to_string(i + 1) + ": " + e.detail());
    } catch (const ParseError& e) {
      throw ParseError(e.line() + line_offset, e.column(), "record " + std::to_string(i + 1) + ": " + e.detail());
    }
    line_offset += static_cast<int>(std::count(chunk.begin(), chunk.end(), '\n'));
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string payload_hash(const CatalogRecord& r) { return "fnv1a64:" + hex64(fnv1a64(payload_text(r))); }

CatalogRecord solution_record(const Solution& s) {
  CatalogRecord r;
  r.kind = RecordKind::Solution;
  r.size = s.size();
  r.sections.push_back(s.table());
  return r;
}

CatalogRecord brace_record(const Brace& b) {
  CatalogRecord r;
  r.kind = RecordKind::Brace;
  r.size = b.order();
  r.sections.push_back(rows_of(b.add_table(), b.order()));
  r.sections.push_back(rows_of(b.mul_table(), b.order()));
  return r;
}

CatalogRecord datum_record(const Brace& b, const ConstructionDatum& d) {
  CatalogRecord r = brace_record(b);
  r.kind = RecordKind::Datum;
  for (std::size_t i = 0; i < d.representatives.size(); ++i) {
    Table t{{d.representatives[i]}};
    for (const auto& k : d.families[i]) t.push_back(k);
    r.sections.push_back(std::move(t));
  }
  return r;
}

CatalogRecord record_of_solution(const Solution& s) {
  CatalogRecord r = solution_record(s);
  const ValidationReport v = validate(s);
  r.set("solution", bool_text(v.ok()));
  if (v.ok()) {
    const auto mpl = multipermutation_level(s);
    r.set("indecomposable", bool_text(is_indecomposable(s)));
    r.set("uniconnected", bool_text(is_uniconnected(s)));
    r.set("mpl", mpl ? std::to_string(*mpl) : "none");
    r.set("group_order", std::to_string(s.permutation_group().order()));
    r.set("group", describe(s.permutation_group().table()));
    r.set("class", std::to_string(dehornoy_class_direct(s)));
    r.set("canonical_hash", payload_hash(solution_record(canonical_form(s).form)));
  }
  return r;
}

CatalogRecord record_of_brace(const Brace& b) {
  CatalogRecord r = brace_record(b);
  const BraceReport v = validate_brace(b);
  r.set("brace", bool_text(v.ok));
  if (v.ok) {
    r.set("additive", factors_text(additive_invariants(b)));
    r.set("multiplicative", describe(b.multiplicative_group()));
    r.set("socle", std::to_string(socle(b).size()));
    r.set("exponent", std::to_string(additive_exponent(b)));
    r.set("canonical_hash", payload_hash(brace_record(canonical_brace(b))));
  }
  return r;
}

Solution solution_from(const CatalogRecord& r) {
  if (r.kind != RecordKind::Solution) throw FormatError("expected a solution record, got " + std::string(kind_name(r.kind)));
  return Solution(r.sections.at(0));
}

Brace brace_from(const CatalogRecord& r) {
  if (r.kind != RecordKind::Brace && r.kind != RecordKind::Datum)
    throw FormatError("expected a brace record, got " + std::string(kind_name(r.kind)));
  std::vector<int> add, mul;
  for (const auto& row : r.sections.at(0)) add.insert(add.end(), row.begin(), row.end());
  for (const auto& row : r.sections.at(1)) mul.insert(mul.end(), row.begin(), row.end());
  return Brace(r.size, std::move(add), std::move(mul));
}

std::pair<Brace, ConstructionDatum> datum_from(const CatalogRecord& r) {
  if (r.kind != RecordKind::Datum) throw FormatError("expected a datum record, got " + std::string(kind_name(r.kind)));
  ConstructionDatum d;
  for (std::size_t s = 2; s < r.sections.size(); ++s) {
    d.representatives.push_back(r.sections[s][0][0]);
    d.families.emplace_back(r.sections[s].begin() + 1, r.sections[s].end());
    if (d.families.back().empty()) d.families.back().push_back({0});
  }
  return {brace_from(r), std::move(d)};
}

std::filesystem::path store_put(const std::filesystem::path& dir, const CatalogRecord& r) {
  namespace fs = std::filesystem;
  std::string hash = r.get("canonical_hash");
  if (hash.empty()) hash = payload_hash(r);
  const std::size_t colon = hash.find(':');
  const std::string name = (colon == std::string::npos ? hash : hash.substr(colon + 1)) + ".ybx";
  fs::create_directories(dir);
  const fs::path target = dir / name;

  if (fs::exists(target)) {
    std::ifstream in(target, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    const CatalogRecord old = parse(ss.str());
    if (old.kind != r.kind || old.size != r.size || old.sections != r.sections)
      throw IntegrityError("store: " + target.string() + " holds a different payload under hash " + hash);
  }

  static std::atomic<unsigned> counter{0};
  const fs::path tmp = dir / (name + ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
                              "." + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("store: cannot write " + tmp.string());
    out << serialize(r);
    if (!out.flush()) throw Error("store: write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
  return target;
}

std::vector<CatalogRecord> store_query(const std::filesystem::path& dir,
                                       const std::map<std::string, std::string>& filter) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(dir))
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".ybx") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<CatalogRecord> out;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CatalogRecord r = parse(ss.str());
    bool match = true;
    for (const auto& [k, v] : filter) {
      if (k == "hash") {
        const std::string h = r.get("canonical_hash");
        match = h == v || (h.size() > v.size() && h.ends_with(":" + v));
      } else if (k == "kind") {
        match = kind_name(r.kind) == v;
      } else {
        match = r.get(k) == v;
      }
      if (!match) break;
    }
    if (match) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ybe
