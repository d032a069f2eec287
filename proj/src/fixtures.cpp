#include "ybe/fixtures.hpp"

#include <charconv>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

Solution from_cycle_list(int n, std::initializer_list<std::string_view> cycles) {
  std::vector<Permutation> sigma;
  for (auto c : cycles) sigma.push_back(Permutation::from_cycles(n, c));
  return Solution(sigma);
}

std::vector<int> int_list(std::string_view text, char sep, const std::string& context) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(sep, pos), text.size());
    int v = 0;
    auto [p, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
    if (ec != std::errc() || p != text.data() + end) throw FormatError("bad integer list in '" + context + "'");
    out.push_back(v);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

Brace factor_from_token(const std::string& tok, const std::string& spec) {
  if (tok.rfind("triv", 0) == 0) {
    const auto f = int_list(std::string_view(tok).substr(4), '.', spec);
    return trivial_brace(f);
  }
  if (tok.rfind("C", 0) == 0) {
    const auto v = int_list(std::string_view(tok).substr(1), '.', spec);
    if (v.size() != 3) throw FormatError("expected Cp.n.t in '" + spec + "'");
    return cyclic_brace(v[0], v[1], v[2]);
  }
  throw FormatError("unknown brace factor '" + tok + "' in '" + spec + "' (expected trivK or Cp.n.t)");
}

void expect(CatalogRecord& r, const std::string& key, const std::string& value) { r.set("expect." + key, value); }

}  // namespace

Solution size4_d8_example() { return from_cycle_list(4, {"(3 4)", "(1 3 2 4)", "(1 4 2 3)", "(1 2)"}); }

Solution size8_example() {
  const std::string_view a = "(1,2)(3,5)(4,7)(6,8)", b = "(1,6,4,3)(2,5,7,8)", c = "(1,3,4,6)(2,8,7,5)",
                         d = "(1,7)(2,4)(3,8)(5,6)";
  return from_cycle_list(8, {a, a, b, c, d, d, c, b});
}

Solution shift_example(int k) {
  if (k < 1) throw InvalidArgument("shift needs k >= 1");
  std::vector<Point> gamma(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) gamma[static_cast<std::size_t>(i)] = (i + 1) % k;
  return shift_solution(Permutation(std::move(gamma)));
}

Brace brace_from_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) throw FormatError("brace spec '" + spec + "' lacks a family prefix");
  const std::string family = spec.substr(0, colon), args = spec.substr(colon + 1);
  if (family == "trivial") return trivial_brace(int_list(args, ',', spec));
  if (family == "C") {
    const auto v = int_list(args, ',', spec);
    if (v.size() != 3) throw FormatError("expected C:p,n,t, got '" + spec + "'");
    return cyclic_brace(v[0], v[1], v[2]);
  }
  if (family == "sd") {
    const std::size_t c1 = args.find(','), c2 = c1 == std::string::npos ? c1 : args.find(',', c1 + 1);
    if (c2 == std::string::npos) throw FormatError("expected sd:<left>,<right>,<action>, got '" + spec + "'");
    const Brace left = factor_from_token(args.substr(0, c1), spec);
    const Brace right = factor_from_token(args.substr(c1 + 1, c2 - c1 - 1), spec);
    return semidirect_product(left, right, action_from_spec(left, right, args.substr(c2 + 1)));
  }
  throw FormatError("unknown brace family '" + family + "' (expected trivial, C or sd)");
}

Group group_from_name(const std::string& name) {
  const std::size_t x = name.find('x');
  if (x != std::string::npos)
    return direct_product(group_from_name(name.substr(0, x)), group_from_name(name.substr(x + 1)));
  if (name == "Q8") return quaternion_group();
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'D')) {
    const auto v = int_list(std::string_view(name).substr(1), ',', name);
    if (v.size() == 1 && v[0] >= 1) {
      if (name[0] == 'C') return cyclic_group(v[0]);
      if (v[0] % 2 == 0 && v[0] >= 4) return dihedral_group(v[0]);
    }
  }
  throw FormatError("unknown group name '" + name + "' (expected Q8, Ck, Dk with k even, or products AxB)");
}

std::vector<ExampleInfo> example_list() {
  return {
      {"size4-d8", "indecomposable 4-point solution with permutation group D8"},
      {"size8", "uniconnected 8-point solution whose retraction is not uniconnected"},
      {"shift:<k>", "sigma_x = (1 2 ... k) for all x"},
      {"brace:<spec>", "a brace from a family spec, e.g. brace:sd:triv3,triv2,inv"},
  };
}

CatalogRecord example_record(const std::string& name) {
  if (name == "size4-d8") {
    CatalogRecord r = solution_record(size4_d8_example());
    expect(r, "solution", "true");
    expect(r, "indecomposable", "true");
    expect(r, "uniconnected", "false");
    expect(r, "group_order", "8");
    expect(r, "group", "D8");
    expect(r, "class", "2");
    expect(r, "retraction_size", "4");
    return r;
  }
  if (name == "size8") {
    CatalogRecord r = solution_record(size8_example());
    expect(r, "solution", "true");
    expect(r, "indecomposable", "true");
    expect(r, "uniconnected", "true");
    expect(r, "group_order", "8");
    expect(r, "retraction_size", "4");
    expect(r, "retraction_uniconnected", "false");
    return r;
  }
  if (name.rfind("shift:", 0) == 0) {
    const auto k = int_list(std::string_view(name).substr(6), ',', name);
    if (k.size() != 1) throw FormatError("expected shift:<k>");
    CatalogRecord r = solution_record(shift_example(k[0]));
    expect(r, "solution", "true");
    expect(r, "group_order", std::to_string(k[0]));
    expect(r, "class", std::to_string(k[0]));
    expect(r, "mpl", k[0] == 1 ? "0" : "1");
    return r;
  }
  if (name.rfind("brace:", 0) == 0) return record_of_brace(brace_from_spec(name.substr(6)));
  throw FormatError("unknown example '" + name + "'");
}

}  // namespace ybe
