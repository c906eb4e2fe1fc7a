#include "wordprop/group.hpp"

#include <boost/container_hash/hash.hpp>

#include <random>
#include <unordered_map>
#include <utility>

namespace wordprop {

const char* to_string(GroupError::Kind kind) {
  switch (kind) {
    case GroupError::Kind::kMalformedTable: return "MalformedTable";
    case GroupError::Kind::kNotLatinSquare: return "NotLatinSquare";
    case GroupError::Kind::kNoIdentity: return "NoIdentity";
    case GroupError::Kind::kNoInverse: return "NoInverse";
    case GroupError::Kind::kNotAssociative: return "NotAssociative";
    case GroupError::Kind::kNotAPermutation: return "NotAPermutation";
    case GroupError::Kind::kOrderCapExceeded: return "OrderCapExceeded";
    case GroupError::Kind::kUnsupportedParams: return "UnsupportedParams";
    case GroupError::Kind::kBadElement: return "BadElement";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void fail(GroupError::Kind kind, const std::string& detail) {
  throw GroupError(kind, std::string(to_string(kind)) + ": " + detail);
}

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap) {
    fail(GroupError::Kind::kOrderCapExceeded,
         "order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
  }
}

// Breadth-first closure of `generators` under right multiplication. Returns
// the flat Cayley table; element 0 is `identity`.
template <typename T, typename Mul, typename Hash>
std::pair<std::vector<Element>, std::size_t> closure_table(const T& identity,
                                                           const std::vector<T>& generators,
                                                           Mul mul, std::size_t order_cap) {
  std::vector<T> elements{identity};
  std::unordered_map<T, Element, Hash> index{{identity, 0}};
  std::vector<Element> parent{0};
  std::vector<std::uint32_t> via{0};
  const std::size_t gens = generators.size();
  // right[x * gens + g] = x * generators[g]
  std::vector<Element> right;

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t g = 0; g < gens; ++g) {
      T next = mul(elements[i], generators[g]);
      auto [it, inserted] = index.try_emplace(std::move(next), static_cast<Element>(elements.size()));
      if (inserted) {
        check_cap(elements.size() + 1, order_cap);
        elements.push_back(it->first);
        parent.push_back(static_cast<Element>(i));
        via.push_back(static_cast<std::uint32_t>(g));
      }
      right.push_back(it->second);
    }
  }

  // a * b = (a * parent(b)) * generator(via(b)); parents precede children.
  const std::size_t order = elements.size();
  std::vector<Element> flat(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    Element* row = flat.data() + a * order;
    row[0] = static_cast<Element>(a);
    for (std::size_t b = 1; b < order; ++b) {
      row[b] = right[static_cast<std::size_t>(row[parent[b]]) * gens + via[b]];
    }
  }
  return {std::move(flat), order};
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

}  // namespace

Group Group::from_cayley_table(const std::vector<std::vector<Element>>& table, std::string name) {
  const std::size_t order = table.size();
  if (order == 0) fail(GroupError::Kind::kMalformedTable, "table is empty");
  check_cap(order, kDefaultOrderCap);
  std::vector<Element> flat;
  flat.reserve(order * order);
  for (std::size_t r = 0; r < order; ++r) {
    if (table[r].size() != order) {
      fail(GroupError::Kind::kMalformedTable,
           "row " + std::to_string(r) + " has " + std::to_string(table[r].size()) +
               " entries, expected " + std::to_string(order));
    }
    flat.insert(flat.end(), table[r].begin(), table[r].end());
  }
  return from_flat_table(std::move(flat), order, std::move(name));
}

Group Group::from_flat_table(std::vector<Element> flat, std::size_t order, std::string name) {
  if (order == 0 || flat.size() != order * order) {
    fail(GroupError::Kind::kMalformedTable, "table is not square");
  }
  Group g;
  g.order_ = order;
  g.table_ = std::move(flat);
  g.name_ = std::move(name);
  g.validate();
  return g;
}

void Group::validate() {
  const std::size_t n = order_;
  const auto at = [&](std::size_t a, std::size_t b) { return table_[a * n + b]; };

  for (std::size_t i = 0; i < n * n; ++i) {
    if (table_[i] >= n) {
      fail(GroupError::Kind::kMalformedTable,
           "entry at row " + std::to_string(i / n) + ", column " + std::to_string(i % n) +
               " is " + std::to_string(table_[i]) + ", outside [0, " + std::to_string(n) + ")");
    }
  }

  std::vector<std::size_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t c = 0; c < n; ++c) {
      const Element v = at(r, c);
      if (seen[v] != n) {
        fail(GroupError::Kind::kNotLatinSquare,
             "row " + std::to_string(r) + " repeats " + std::to_string(v) + " (columns " +
                 std::to_string(seen[v]) + " and " + std::to_string(c) + ")");
      }
      seen[v] = c;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t r = 0; r < n; ++r) {
      const Element v = at(r, c);
      if (seen[v] != n) {
        fail(GroupError::Kind::kNotLatinSquare,
             "column " + std::to_string(c) + " repeats " + std::to_string(v) + " (rows " +
                 std::to_string(seen[v]) + " and " + std::to_string(r) + ")");
      }
      seen[v] = r;
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) {
      identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) fail(GroupError::Kind::kNoIdentity, "no element acts as a two-sided identity");

  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (at(a, b) != identity_) ++b;  // Latin rows contain the identity exactly once.
    if (at(b, a) != identity_) {
      fail(GroupError::Kind::kNoInverse,
           "element " + std::to_string(a) + " has right inverse " + std::to_string(b) +
               " but " + std::to_string(b) + "*" + std::to_string(a) + " = " +
               std::to_string(at(b, a)));
    }
    inverse_[a] = static_cast<Element>(b);
  }

  const auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c))) {
      fail(GroupError::Kind::kNotAssociative,
           "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c) +
               " != " + std::to_string(a) + "*(" + std::to_string(b) + "*" + std::to_string(c) +
               ")");
    }
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < kAssociativitySamples; ++i) {
      const std::size_t a = pick(rng);
      const std::size_t b = pick(rng);
      check_triple(a, b, pick(rng));
    }
  }
}

Group Group::from_permutation_generators(std::size_t points,
                                         const std::vector<std::vector<std::uint32_t>>& generators,
                                         std::string name, std::size_t order_cap) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& gen = generators[i];
    std::vector<bool> hit(points, false);
    bool ok = gen.size() == points;
    for (std::size_t p = 0; ok && p < points; ++p) {
      ok = gen[p] < points && !hit[gen[p]];
      if (ok) hit[gen[p]] = true;
    }
    if (!ok) {
      fail(GroupError::Kind::kNotAPermutation,
           "generator " + std::to_string(i) + " is not a permutation of " +
               std::to_string(points) + " points");
    }
  }
  std::vector<std::uint32_t> identity(points);
  for (std::size_t p = 0; p < points; ++p) identity[p] = static_cast<std::uint32_t>(p);

  // Apply the left factor first: (p * q)(i) = q(p(i)).
  const auto compose = [](const std::vector<std::uint32_t>& p, const std::vector<std::uint32_t>& q) {
    std::vector<std::uint32_t> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
    return out;
  };
  auto [flat, order] =
      closure_table<std::vector<std::uint32_t>, decltype(compose), VectorHash>(
          identity, generators, compose, order_cap);
  return from_flat_table(std::move(flat), order, std::move(name));
}

Group matrix_group_mod(std::size_t dim, std::uint32_t modulus,
                       const std::vector<std::vector<std::uint32_t>>& generators,
                       std::string name, std::size_t order_cap) {
  if (dim == 0 || modulus < 2) {
    fail(GroupError::Kind::kUnsupportedParams, "matrix dimension must be >= 1 and modulus >= 2");
  }
  for (const auto& m : generators) {
    if (m.size() != dim * dim) {
      fail(GroupError::Kind::kUnsupportedParams, "matrix generator has wrong number of entries");
    }
  }
  std::vector<std::uint32_t> identity(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) identity[i * dim + i] = 1 % modulus;

  std::vector<std::vector<std::uint32_t>> reduced = generators;
  for (auto& m : reduced)
    for (auto& v : m) v %= modulus;

  const auto mul = [dim, modulus](const std::vector<std::uint32_t>& a,
                                  const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        const std::uint64_t aik = a[i * dim + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < dim; ++j)
          out[i * dim + j] =
              static_cast<std::uint32_t>((out[i * dim + j] + aik * b[k * dim + j]) % modulus);
      }
    return out;
  };
  auto [flat, order] = closure_table<std::vector<std::uint32_t>, decltype(mul), VectorHash>(
      identity, reduced, mul, order_cap);
  return Group::from_flat_table(std::move(flat), order, std::move(name));
}

Group cyclic_group(std::size_t n, std::string name) {
  if (n == 0) fail(GroupError::Kind::kUnsupportedParams, "cyclic group order must be >= 1");
  check_cap(n, kDefaultOrderCap);
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Element>((a + b) % n);
  if (name.empty()) name = "Z" + std::to_string(n);
  return Group::from_flat_table(std::move(flat), n, std::move(name));
}

bool Group::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
  return true;
}

std::vector<Element> Group::center() const {
  std::vector<Element> out;
  for (std::size_t a = 0; a < order_; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < order_ && central; ++b)
      central = table_[a * order_ + b] == table_[b * order_ + a];
    if (central) out.push_back(static_cast<Element>(a));
  }
  return out;
}

std::vector<std::vector<Element>> Group::table() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    out[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * order_),
                  table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * order_));
  }
  return out;
}

Group Group::with_name(std::string name) const {
  Group g = *this;
  g.name_ = std::move(name);
  return g;
}

Group direct_product(const Group& g, const Group& h, std::size_t order_cap) {
  const std::size_t gn = g.order();
  const std::size_t hn = h.order();
  check_cap(gn * hn, order_cap);
  const std::size_t n = gn * hn;
  std::vector<Element> flat(n * n);
  for (std::size_t a1 = 0; a1 < gn; ++a1) {
    const auto grow = g.row(static_cast<Element>(a1));
    for (std::size_t b1 = 0; b1 < hn; ++b1) {
      const auto hrow = h.row(static_cast<Element>(b1));
      Element* out = flat.data() + (a1 * hn + b1) * n;
      for (std::size_t a2 = 0; a2 < gn; ++a2)
        for (std::size_t b2 = 0; b2 < hn; ++b2)
          out[a2 * hn + b2] = static_cast<Element>(grow[a2] * hn + hrow[b2]);
    }
  }
  return Group::from_flat_table(std::move(flat), n, g.name() + " x " + h.name());
}

}  // namespace wordprop
