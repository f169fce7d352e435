#include "bipgen/group.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <random>

namespace bipgen {

// ElementSet ---------------------------------------------------------------

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> elems)
    : ElementSet(universe) {
  for (Element x : elems) insert(x);
}

bool ElementSet::insert(Element x) {
  std::uint64_t& w = words_[x >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (w & bit) return false;
  w |= bit;
  ++count_;
  return true;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<Element>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = words_[i] & other.words_[i];
    out.count_ += std::popcount(out.words_[i]);
  }
  return out;
}

bool ElementSet::lex_less(const ElementSet& other) const {
  // The first differing element decides: whichever set owns it is smaller.
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff) {
      const std::uint64_t lowest = diff & (~diff + 1);
      return (words_[i] & lowest) != 0;
    }
  }
  return false;
}

std::size_t ElementSet::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

PropertyFlags PropertyFlags::make(bool cyclic, bool abelian, bool nilpotent, bool solvable) {
  if ((cyclic && !abelian) || (abelian && !nilpotent) || (nilpotent && !solvable))
    throw std::logic_error("property flags violate cyclic => abelian => nilpotent => solvable");
  return PropertyFlags{cyclic, abelian, nilpotent, solvable};
}

// GroupTable ---------------------------------------------------------------

GroupTable::GroupTable(std::string spec, std::size_t order, std::vector<Element> table,
                       std::vector<std::string> labels)
    : spec_(std::move(spec)),
      order_(order),
      mul_(std::move(table)),
      inv_(order, 0),
      labels_(std::move(labels)) {
  if (order_ == 0) throw std::invalid_argument("group order must be positive");
  if (mul_.size() != order_ * order_ || labels_.size() != order_)
    throw std::invalid_argument("table dimensions do not match order");
  for (Element e : mul_)
    if (e >= order_) throw std::invalid_argument("multiplication table not closed");
  for (Element x = 0; x < order_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x)
      throw std::invalid_argument("element 0 is not the identity");
    bool found = false;
    for (Element y = 0; y < order_ && !found; ++y) {
      if (mul(x, y) == 0) {
        inv_[x] = y;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("element without inverse: " + labels_[x]);
  }
}

bool GroupTable::check_associative(std::size_t samples) const {
  const auto assoc = [this](Element x, Element y, Element z) {
    return mul(mul(x, y), z) == mul(x, mul(y, z));
  };
  if (order_ <= 64) {
    for (Element x = 0; x < order_; ++x)
      for (Element y = 0; y < order_; ++y)
        for (Element z = 0; z < order_; ++z)
          if (!assoc(x, y, z)) return false;
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order_ - 1));
  for (std::size_t i = 0; i < samples; ++i)
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

ElementSet GroupTable::full_set() const {
  ElementSet s(order_);
  for (Element x = 0; x < order_; ++x) s.insert(x);
  return s;
}

// Spec parsing -------------------------------------------------------------

namespace {

struct SpecNode {
  char family = 0;
  std::size_t n = 0;
  std::vector<SpecNode> factors;
};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  SpecNode parse() {
    SpecNode node = parse_node();
    if (pos_ != text_.size()) fail("trailing characters");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("group spec '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t parse_number() {
    std::size_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  SpecNode parse_node() {
    if (pos_ >= text_.size()) fail("unexpected end");
    SpecNode node;
    node.family = text_[pos_++];
    if (node.family == 'X') {
      if (!eat('(')) fail("expected '('");
      do {
        node.factors.push_back(parse_node());
      } while (eat(','));
      if (!eat(')')) fail("expected ')'");
      return node;
    }
    if (node.family < 'A' || node.family > 'Z') fail("expected a family letter");
    if (!eat(':')) {
      throw UnsupportedFamilyError("unsupported group family in '" + std::string(text_) + "'");
    }
    node.n = parse_number();
    validate(node);
    return node;
  }

  void validate(const SpecNode& node) const {
    const std::size_t n = node.n;
    switch (node.family) {
      case 'Z':
        if (n < 1) fail("Z:<n> needs n >= 1");
        break;
      case 'D':
        if (n < 2 || n % 2 != 0) fail("D:<2n> needs an even order >= 2");
        break;
      case 'Q':
        if (n < 8 || n % 4 != 0) fail("Q:<4n> needs an order divisible by 4 and >= 8");
        break;
      case 'S':
      case 'A':
        if (n < 1 || n > 5) fail("S:<n> and A:<n> need 1 <= n <= 5");
        break;
      default:
        throw UnsupportedFamilyError(std::string("unsupported group family '") + node.family +
                                     "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Saturates at SIZE_MAX so oversized products still trip the cap check.
std::size_t node_order(const SpecNode& node) {
  switch (node.family) {
    case 'Z':
    case 'D':
    case 'Q':
      return node.n;
    case 'S':
      return factorial(node.n);
    case 'A':
      return node.n < 2 ? 1 : factorial(node.n) / 2;
    default: {
      std::size_t order = 1;
      for (const SpecNode& f : node.factors) {
        const std::size_t k = node_order(f);
        if (order > SIZE_MAX / k) return SIZE_MAX;
        order *= k;
      }
      return order;
    }
  }
}

std::string power_label(std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return "a";
  return "a^" + std::to_string(k);
}

std::string rotation_reflection_label(std::size_t k, bool reflection) {
  if (!reflection) return power_label(k);
  if (k == 0) return "b";
  return (k == 1 ? std::string("a") : "a^" + std::to_string(k)) + "b";
}

struct RawTable {
  std::size_t order = 0;
  std::vector<Element> mul;
  std::vector<std::string> labels;
};

RawTable cyclic_table(std::size_t n) {
  RawTable t{n, std::vector<Element>(n * n), {}};
  for (std::size_t i = 0; i < n; ++i) {
    t.labels.push_back(power_label(i));
    for (std::size_t j = 0; j < n; ++j) t.mul[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return t;
}

// a^i b^s with index i + s*k; rotations first so labels read 1,a,..,b,ab,..
// Dihedral: b a = a^-1 b, b^2 = 1. Dicyclic: b a = a^-1 b, b^2 = a^(k/2).
RawTable metacyclic_table(std::size_t k, bool dicyclic) {
  const std::size_t n = 2 * k;
  RawTable t{n, std::vector<Element>(n * n), {}};
  for (std::size_t x = 0; x < n; ++x)
    t.labels.push_back(rotation_reflection_label(x % k, x >= k));
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t i = x % k, s = x / k;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t j = y % k, u = y / k;
      std::size_t rot = s ? (i + k - j) % k : (i + j) % k;
      std::size_t refl = s + u;
      if (refl == 2) {
        refl = 0;
        if (dicyclic) rot = (rot + k / 2) % k;
      }
      t.mul[x * n + y] = static_cast<Element>(rot + refl * k);
    }
  }
  return t;
}

std::string cycle_label(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == static_cast<int>(start)) continue;
    out += '(';
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = true;
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "(1)" : out;
}

bool is_even(const std::vector<int>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0;
}

// Products apply the left factor first: (xy)(i) = y(x(i)).
RawTable permutation_table(std::size_t degree, bool alternating) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!alternating || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = perms.size();
  RawTable t{n, std::vector<Element>(n * n), {}};
  for (const auto& perm : perms) t.labels.push_back(cycle_label(perm));
  std::vector<int> prod(degree);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < degree; ++i)
        prod[i] = perms[y][static_cast<std::size_t>(perms[x][i])];
      // perms is in lexicographic order, identity first.
      const auto it = std::lower_bound(perms.begin(), perms.end(), prod);
      t.mul[x * n + y] = static_cast<Element>(it - perms.begin());
    }
  }
  return t;
}

// Mixed radix with the first factor most significant.
RawTable product_table(const std::vector<RawTable>& factors) {
  RawTable t{1, {0}, {""}};
  bool first = true;
  for (const RawTable& f : factors) {
    const std::size_t n = t.order * f.order;
    RawTable next{n, std::vector<Element>(n * n), {}};
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t x1 = x / f.order, x2 = x % f.order;
      next.labels.push_back(first ? f.labels[x2] : t.labels[x1] + "," + f.labels[x2]);
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t y1 = y / f.order, y2 = y % f.order;
        next.mul[x * n + y] = static_cast<Element>(t.mul[x1 * t.order + y1] * f.order +
                                                   f.mul[x2 * f.order + y2]);
      }
    }
    t = std::move(next);
    first = false;
  }
  for (auto& label : t.labels) label = "(" + label + ")";
  return t;
}

RawTable build(const SpecNode& node) {
  switch (node.family) {
    case 'Z':
      return cyclic_table(node.n);
    case 'D':
      return metacyclic_table(node.n / 2, false);
    case 'Q':
      return metacyclic_table(node.n / 2, true);
    case 'S':
      return permutation_table(node.n, false);
    case 'A':
      return permutation_table(node.n, true);
    default: {
      std::vector<RawTable> parts;
      for (const SpecNode& f : node.factors) parts.push_back(build(f));
      return product_table(parts);
    }
  }
}

}  // namespace

std::size_t spec_order(std::string_view spec) {
  return node_order(SpecParser(spec).parse());
}

GroupTable make_group(std::string_view spec, std::size_t cap) {
  const SpecNode root = SpecParser(spec).parse();
  const std::size_t order = node_order(root);
  if (order > cap) {
    throw CapExceededError("group '" + std::string(spec) + "' has order " +
                           (order == SIZE_MAX ? std::string("> 2^64") : std::to_string(order)) +
                           ", above the cap of " + std::to_string(cap));
  }
  RawTable raw = build(root);
  GroupTable g(std::string(spec), raw.order, std::move(raw.mul), std::move(raw.labels));
  if (!g.check_associative()) throw std::logic_error("constructed table is not associative");
  return g;
}

// Closure ------------------------------------------------------------------

ElementSet generate(const GroupTable& g, std::span<const Element> gens) {
  ElementSet set(g.order());
  set.insert(0);
  std::vector<Element> frontier{0};
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Element x = frontier[head];
    for (Element s : gens) {
      const Element y = g.mul(x, s);
      if (set.insert(y)) frontier.push_back(y);
    }
  }
  return set;
}

ElementSet generate(const GroupTable& g, const ElementSet& seeds) {
  std::vector<Element> gens = seeds.elements();
  std::erase(gens, Element{0});
  return generate(g, std::span<const Element>(gens));
}

ElementSet extend(const GroupTable& g, const ElementSet& base,
                  std::span<const Element> base_gens, Element extra) {
  if (base.contains(extra)) return base;
  ElementSet set = base;
  std::vector<Element> gens(base_gens.begin(), base_gens.end());
  gens.push_back(extra);
  std::vector<Element> frontier;
  // base is closed under base_gens, so its elements only need the new generator.
  for (Element x : base.elements()) {
    const Element y = g.mul(x, extra);
    if (set.insert(y)) frontier.push_back(y);
  }
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Element x = frontier[head];
    for (Element s : gens) {
      const Element y = g.mul(x, s);
      if (set.insert(y)) frontier.push_back(y);
    }
  }
  return set;
}

std::uint32_t element_order(const GroupTable& g, Element x) {
  std::uint32_t k = 1;
  for (Element y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

bool is_subgroup(const GroupTable& g, const ElementSet& carrier) {
  if (carrier.universe() != g.order() || !carrier.contains(0)) return false;
  const std::vector<Element> elems = carrier.elements();
  for (Element x : elems)
    for (Element y : elems)
      if (!carrier.contains(g.mul(x, y))) return false;
  return true;
}

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> primes;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_power_of(std::size_t value, std::size_t p) {
  while (value % p == 0) value /= p;
  return value == 1;
}

// A finite group is nilpotent iff each Sylow subgroup is unique, i.e. the
// p-elements number exactly the p-part of the order for every prime p.
bool all_sylows_unique(const std::vector<std::uint32_t>& orders, std::size_t group_order) {
  for (std::size_t p : prime_factors(group_order)) {
    std::size_t p_part = 1;
    for (std::size_t m = group_order; m % p == 0; m /= p) p_part *= p;
    std::size_t p_elements = 0;
    for (std::uint32_t o : orders)
      if (is_power_of(o, p)) ++p_elements;
    if (p_elements != p_part) return false;
  }
  return true;
}

bool derived_series_terminates(const GroupTable& g, const std::vector<Element>& carrier) {
  std::vector<Element> current = carrier;
  while (current.size() > 1) {
    ElementSet commutators(g.order());
    for (Element x : current)
      for (Element y : current)
        commutators.insert(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
    const ElementSet derived = generate(g, commutators);
    if (derived.count() == current.size()) return false;
    current = derived.elements();
  }
  return true;
}

}  // namespace

PropertyFlags classify(const GroupTable& g, const ElementSet& carrier) {
  if (!is_subgroup(g, carrier)) throw NotASubgroupError("carrier is not a subgroup of " + g.spec());
  const std::vector<Element> elems = carrier.elements();
  const std::size_t order = elems.size();

  std::vector<std::uint32_t> orders;
  orders.reserve(order);
  bool cyclic = false;
  for (Element x : elems) {
    orders.push_back(element_order(g, x));
    if (orders.back() == order) cyclic = true;
  }

  bool abelian = true;
  for (std::size_t i = 0; i < order && abelian; ++i)
    for (std::size_t j = i + 1; j < order && abelian; ++j)
      abelian = g.mul(elems[i], elems[j]) == g.mul(elems[j], elems[i]);

  const bool nilpotent = abelian || all_sylows_unique(orders, order);
  const bool solvable = nilpotent || derived_series_terminates(g, elems);
  return PropertyFlags::make(cyclic, abelian, nilpotent, solvable);
}

GroupTable induced_group(const GroupTable& g, const ElementSet& carrier) {
  if (!is_subgroup(g, carrier)) throw NotASubgroupError("carrier is not a subgroup of " + g.spec());
  const std::vector<Element> elems = carrier.elements();
  const std::size_t n = elems.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[elems[i]] = static_cast<Element>(i);
  std::vector<Element> mul(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(g.label(elems[i]));
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = local[g.mul(elems[i], elems[j])];
  }
  return GroupTable(g.spec() + "[sub" + std::to_string(n) + "]", n, std::move(mul),
                    std::move(labels));
}

}  // namespace bipgen
