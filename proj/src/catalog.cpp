#include "wordprop/catalog.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <system_error>

namespace wordprop {

namespace {

using json = nlohmann::json;

[[noreturn]] void unsupported(const std::string& what) {
  throw GroupError(GroupError::Kind::kUnsupportedParams, "UnsupportedParams: " + what);
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

void expect_params(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count) {
    unsupported(std::string(to_string(spec.family)) + " takes " + std::to_string(count) +
                " parameter(s), got " + std::to_string(spec.params.size()));
  }
}

std::vector<std::uint32_t> cycle_on(std::size_t points, const std::vector<std::uint32_t>& cycle) {
  std::vector<std::uint32_t> perm(points);
  for (std::size_t i = 0; i < points; ++i) perm[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < cycle.size(); ++i) perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return perm;
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::kCyclic: return "cyclic";
    case Family::kDihedral: return "dihedral";
    case Family::kSymmetric: return "symmetric";
    case Family::kAlternating: return "alternating";
    case Family::kQuaternion8: return "quaternion8";
    case Family::kHeisenberg: return "heisenberg";
    case Family::kElementaryAbelian: return "elementary-abelian";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kCyclic, Family::kDihedral, Family::kSymmetric, Family::kAlternating,
                   Family::kQuaternion8, Family::kHeisenberg, Family::kElementaryAbelian}) {
    if (name == to_string(f)) return f;
  }
  unsupported("unknown family '" + std::string(name) + "'");
}

std::size_t FamilySpec::order() const {
  switch (family) {
    case Family::kCyclic:
      expect_params(*this, 1);
      if (params[0] < 1 || params[0] > kDefaultOrderCap) unsupported("cyclic order out of range");
      return params[0];
    case Family::kDihedral:
      expect_params(*this, 1);
      if (params[0] < 3 || 2 * std::size_t{params[0]} > kDefaultOrderCap) {
        unsupported("dihedral needs 3 <= n and 2n within the order cap");
      }
      return 2 * std::size_t{params[0]};
    case Family::kSymmetric:
      expect_params(*this, 1);
      if (params[0] < 1 || params[0] > 7) unsupported("symmetric degree must be in [1, 7]");
      return factorial(params[0]);
    case Family::kAlternating:
      expect_params(*this, 1);
      if (params[0] < 1 || params[0] > 7) unsupported("alternating degree must be in [1, 7]");
      return params[0] <= 2 ? 1 : factorial(params[0]) / 2;
    case Family::kQuaternion8:
      expect_params(*this, 0);
      return 8;
    case Family::kHeisenberg: {
      expect_params(*this, 1);
      const std::size_t p = params[0];
      if (!is_prime(params[0]) || p == 2 || p * p * p > kDefaultOrderCap) {
        unsupported("heisenberg needs an odd prime p with p^3 within the order cap");
      }
      return p * p * p;
    }
    case Family::kElementaryAbelian: {
      expect_params(*this, 2);
      if (!is_prime(params[0]) || params[1] < 1) unsupported("elementary-abelian needs prime p, k >= 1");
      std::size_t order = 1;
      for (std::uint32_t i = 0; i < params[1]; ++i) {
        order *= params[0];
        if (order > kDefaultOrderCap) unsupported("elementary-abelian order exceeds the cap");
      }
      return order;
    }
  }
  unsupported("unknown family");
}

std::string FamilySpec::name() const {
  switch (family) {
    case Family::kCyclic: return "Z" + std::to_string(params.at(0));
    case Family::kDihedral: return "D" + std::to_string(params.at(0));
    case Family::kSymmetric: return "S" + std::to_string(params.at(0));
    case Family::kAlternating: return "A" + std::to_string(params.at(0));
    case Family::kQuaternion8: return "Q8";
    case Family::kHeisenberg: return "Heis" + std::to_string(params.at(0));
    case Family::kElementaryAbelian:
      return "E" + std::to_string(params.at(0)) + "^" + std::to_string(params.at(1));
  }
  return "?";
}

std::size_t CatalogEntry::order() const {
  std::size_t order = 1;
  for (const auto& f : factors) order *= f.order();
  return order;
}

Group builtin(const FamilySpec& spec) {
  spec.order();  // validates parameters
  const std::string name = spec.name();
  switch (spec.family) {
    case Family::kCyclic:
      return cyclic_group(spec.params[0], name);
    case Family::kDihedral: {
      const std::uint32_t n = spec.params[0];
      std::vector<std::uint32_t> rotation(n), reflection(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        rotation[i] = (i + 1) % n;
        reflection[i] = (n - i) % n;
      }
      return Group::from_permutation_generators(n, {rotation, reflection}, name);
    }
    case Family::kSymmetric: {
      const std::uint32_t k = spec.params[0];
      if (k == 1) return Group::from_permutation_generators(1, {}, name);
      std::vector<std::uint32_t> full(k);
      for (std::uint32_t i = 0; i < k; ++i) full[i] = i;
      return Group::from_permutation_generators(k, {cycle_on(k, {0, 1}), cycle_on(k, full)}, name);
    }
    case Family::kAlternating: {
      const std::uint32_t k = spec.params[0];
      std::vector<std::vector<std::uint32_t>> gens;
      for (std::uint32_t i = 2; i < k; ++i) gens.push_back(cycle_on(k, {0, 1, i}));
      return Group::from_permutation_generators(k, gens, name);
    }
    case Family::kQuaternion8:
      // i and j as 2x2 matrices over GF(3): i^2 = j^2 = -1, ji = -ij.
      return matrix_group_mod(2, 3, {{0, 1, 2, 0}, {1, 1, 1, 2}}, name);
    case Family::kHeisenberg: {
      const std::uint32_t p = spec.params[0];
      return matrix_group_mod(3, p, {{1, 1, 0, 0, 1, 0, 0, 0, 1}, {1, 0, 0, 0, 1, 1, 0, 0, 1}},
                              name);
    }
    case Family::kElementaryAbelian: {
      const std::uint32_t p = spec.params[0];
      Group g = cyclic_group(p);
      for (std::uint32_t i = 1; i < spec.params[1]; ++i) g = direct_product(g, cyclic_group(p));
      return g.with_name(name);
    }
  }
  unsupported("unknown family");
}

Group builtin(Family family, std::vector<std::uint32_t> params) {
  return builtin(FamilySpec{family, std::move(params)});
}

Group build(const CatalogEntry& entry) {
  if (entry.factors.empty()) unsupported("catalog entry has no factors");
  Group g = builtin(entry.factors.front());
  for (std::size_t i = 1; i < entry.factors.size(); ++i) g = direct_product(g, builtin(entry.factors[i]));
  return g.with_name(entry.name);
}

std::vector<CatalogEntry> default_catalog(std::size_t max_order) {
  std::vector<FamilySpec> base;
  const auto add = [&](Family f, std::vector<std::uint32_t> params) {
    FamilySpec spec{f, std::move(params)};
    if (spec.order() <= max_order) base.push_back(std::move(spec));
  };

  for (std::uint32_t n = 1; n <= max_order && n <= kDefaultOrderCap; ++n) add(Family::kCyclic, {n});
  for (std::uint32_t n = 3; 2 * std::size_t{n} <= max_order && 2 * std::size_t{n} <= kDefaultOrderCap; ++n) {
    add(Family::kDihedral, {n});
  }
  // S1, S2 and A3 are cyclic and A1, A2 trivial; they are left to the cyclic family.
  for (std::uint32_t k = 3; k <= 5; ++k) add(Family::kSymmetric, {k});
  for (std::uint32_t k = 4; k <= 5; ++k) add(Family::kAlternating, {k});
  add(Family::kQuaternion8, {});
  for (std::uint32_t p = 3; std::size_t{p} * p * p <= max_order; ++p) {
    if (is_prime(p)) add(Family::kHeisenberg, {p});
  }
  for (std::uint32_t p = 2; std::size_t{p} * p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    std::size_t order = std::size_t{p} * p;
    for (std::uint32_t k = 2; order <= max_order; ++k, order *= p) add(Family::kElementaryAbelian, {p, k});
  }

  std::vector<CatalogEntry> out;
  for (const auto& spec : base) out.push_back({spec.name(), {spec}});

  for (std::size_t j = 0; j < base.size(); ++j) {
    const std::size_t oj = base[j].order();
    if (oj < 2) continue;
    for (std::size_t i = 0; i <= j; ++i) {
      const std::size_t oi = base[i].order();
      if (oi < 2 || oi * oj > max_order) continue;
      out.push_back({base[j].name() + " x " + base[i].name(), {base[j], base[i]}});
    }
  }
  return out;
}

Group parse_group_file(std::string_view text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FileFormatError(origin + ": parse error at byte " + std::to_string(e.byte) + ": " +
                              e.what(),
                          e.byte);
  }
  const auto fail = [&](const std::string& what) -> Group {
    throw FileFormatError(origin + ": " + what);
  };
  if (!doc.is_object()) return fail("expected a JSON object");
  std::string name = origin;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) return fail("field \"name\" must be a string");
    name = doc["name"].get<std::string>();
  }

  try {
    if (doc.contains("table")) {
      const auto table = doc["table"].get<std::vector<std::vector<Element>>>();
      if (doc.contains("order") && doc["order"].get<std::size_t>() != table.size()) {
        return fail("field \"order\" is " + doc["order"].dump() + " but the table has " +
                    std::to_string(table.size()) + " rows");
      }
      return Group::from_cayley_table(table, name);
    }
    if (doc.contains("generators")) {
      if (!doc.contains("points")) return fail("permutation file needs field \"points\"");
      return Group::from_permutation_generators(
          doc["points"].get<std::size_t>(),
          doc["generators"].get<std::vector<std::vector<std::uint32_t>>>(), name);
    }
  } catch (const json::exception& e) {
    return fail(std::string("bad field type: ") + e.what());
  }
  return fail("expected field \"table\" or \"generators\"");
}

Group load_group(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str(), path.string());
}

std::string cayley_file_text(const Group& g) {
  json doc;
  doc["name"] = g.name();
  doc["order"] = g.order();
  doc["table"] = g.table();
  return doc.dump() + "\n";
}

void save_group(const Group& g, const std::filesystem::path& path) {
  write_file_atomic(path, cayley_file_text(g));
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " +
                             ec.message());
  }
}

}  // namespace wordprop
