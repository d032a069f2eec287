#include "ybe/perm.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ybe/errors.hpp"

namespace ybe {

Permutation::Permutation(std::vector<Point> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (Point v : image_) {
    if (v < 0 || v >= degree()) throw FormatError("permutation image out of range: " + std::to_string(v));
    if (seen[static_cast<std::size_t>(v)]) throw FormatError("permutation repeats image " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<Point> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  Permutation p;
  p.image_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(int degree, std::string_view text) {
  std::vector<Point> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> touched(static_cast<std::size_t>(degree), 0);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw FormatError("cycle notation: expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_space();
      if (i >= text.size()) throw FormatError("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',' || text[i] == ';' || text[i] == '\\') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw FormatError("cycle notation: unexpected character at offset " + std::to_string(i));
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) throw FormatError("cycle notation: point " + std::to_string(v) + " out of range");
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const auto from = static_cast<std::size_t>(cycle[k]);
      if (touched[from]) throw FormatError("cycle notation: cycles are not disjoint");
      touched[from] = 1;
      im[from] = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<Point>(i);
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<Point>(i)) return false;
  return true;
}

int Permutation::order() const {
  long long l = 1;
  for (int c : cycle_type()) l = std::lcm(l, static_cast<long long>(c));
  return static_cast<int>(l);
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int Permutation::cycle_length(Point i) const {
  int len = 1;
  for (Point j = (*this)(i); j != i; j = (*this)(j)) ++len;
  return len;
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i] || image_[i] == static_cast<Point>(i)) continue;
    os << '(';
    bool first = true;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
      seen[j] = 1;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::string Permutation::to_images() const {
  std::string s;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(image_[i]);
  }
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InvalidArgument("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()));
  std::vector<Point> im(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) im[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation(std::move(im));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.image()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

struct PermGroup::TableCache {
  std::once_flag once;
  std::optional<Group> table;
};

PermGroup PermGroup::closure(std::span<const Permutation> generators) {
  if (generators.empty()) throw InvalidArgument("closure: empty generator list");
  const int n = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != n) throw InvalidArgument("closure: generators have different degrees");

  PermGroup G;
  G.degree_ = n;
  G.generators_.assign(generators.begin(), generators.end());
  G.elements_.push_back(Permutation::identity(n));
  G.words_.emplace_back();
  G.index_.emplace(G.elements_.front(), 0);
  for (std::size_t i = 0; i < G.elements_.size(); ++i) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Permutation h = G.elements_[i] * generators[k];
      if (G.index_.contains(h)) continue;
      std::vector<int> w = G.words_[i];
      w.push_back(static_cast<int>(k));
      G.index_.emplace(h, static_cast<int>(G.elements_.size()));
      G.elements_.push_back(std::move(h));
      G.words_.push_back(std::move(w));
    }
  }
  for (const auto& g : generators) G.generator_index_.push_back(G.index_.at(g));
  G.table_ = std::make_shared<TableCache>();
  return G;
}

std::optional<int> PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Group& PermGroup::table() const {
  std::call_once(table_->once, [this] {
    const int m = order();
    std::vector<int> t(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) t[static_cast<std::size_t>(a * m + b)] = index_.at(element(a) * element(b));
    table_->table.emplace(m, std::move(t));
  });
  return *table_->table;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<int> label(static_cast<std::size_t>(degree_), -1);
  std::vector<std::vector<Point>> out;
  for (Point start = 0; start < degree_; ++start) {
    if (label[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<Point> orbit{start};
    label[static_cast<std::size_t>(start)] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : generators_) {
        const Point y = g(orbit[i]);
        if (label[static_cast<std::size_t>(y)] < 0) {
          label[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

bool PermGroup::is_regular() const { return is_transitive() && order() == degree_; }

Subgroup PermGroup::stabilizer(Point point) const {
  Subgroup s;
  for (int i = 0; i < order(); ++i)
    if (element(i)(point) == point) s.push_back(i);
  return s;
}

CosetSpace left_cosets(const Group& group, const Subgroup& subgroup) {
  CosetSpace cs;
  cs.subgroup = subgroup;
  cs.coset_of.assign(static_cast<std::size_t>(group.order()), -1);
  for (int x = 0; x < group.order(); ++x) {
    if (cs.coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    const int id = static_cast<int>(cs.cosets.size());
    std::vector<int> coset;
    for (int h : subgroup) coset.push_back(group.mul(x, h));
    std::sort(coset.begin(), coset.end());
    for (int e : coset) {
      if (cs.coset_of[static_cast<std::size_t>(e)] >= 0)
        throw InvalidArgument("left_cosets: elements do not form a subgroup");
      cs.coset_of[static_cast<std::size_t>(e)] = id;
    }
    cs.representatives.push_back(coset.front());
    cs.cosets.push_back(std::move(coset));
  }
  return cs;
}

}  // namespace ybe
