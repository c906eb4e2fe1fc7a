#include "wordprop/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace wordprop {

namespace mp = boost::multiprecision;

GapConstant::GapConstant(Rational gamma, Source source) : gamma_(std::move(gamma)), source_(source) {
  if (gamma_ < 0 || gamma_ >= 1) {
    throw DomainError("gap constant must lie in [0, 1), got " + format_rational(gamma_));
  }
}

GapConstant GapConstant::gustafson() { return {Rational(5, 8), Source::kGustafson}; }

const char* to_string(GapConstant::Source source) {
  switch (source) {
    case GapConstant::Source::kGustafson: return "gustafson-5/8";
    case GapConstant::Source::kEmpiricalCatalogSupremum: return "empirical-catalog-supremum";
    case GapConstant::Source::kUserSupplied: return "user-supplied";
  }
  return "unknown";
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

Integer power(const Integer& base, std::uint64_t exp) {
  return mp::pow(base, static_cast<unsigned>(exp));
}

std::string tuple_context(const char* fn, std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::string out = fn;
  out += "(";
  bool first = true;
  for (const auto& [k, v] : fields) {
    if (!first) out += ", ";
    first = false;
    out += k;
    out += "=";
    out += v;
  }
  return out + ")";
}

}  // namespace

BoundReport kst_bound_holds(std::uint64_t t, std::uint64_t r, std::uint64_t s,
                            std::uint64_t edges) {
  require(t >= 1, "kst_bound_holds: t must be >= 1");
  require(r >= 1 && s >= 1, "kst_bound_holds: r and s must be >= 1");
  require(r <= 64, "kst_bound_holds: r must be <= 64");
  const Integer tt(t);
  require(Integer(edges) <= tt * tt, "kst_bound_holds: edges must be <= t^2");

  BoundReport report;
  report.context = tuple_context("kst", {{"t", std::to_string(t)},
                                         {"r", std::to_string(r)},
                                         {"s", std::to_string(s)},
                                         {"edges", std::to_string(edges)}});
  const Integer linear = Integer(r - 1) * tt;
  if (Integer(edges) <= linear) {
    report.lhs = Rational(Integer(edges));
    report.rhs = Rational(linear);
  } else {
    report.lhs = Rational(power(Integer(edges) - linear, r));
    report.rhs = Rational(Integer(s - 1) * power(tt, 2 * r - 1));
  }
  report.holds = report.lhs <= report.rhs;
  return report;
}

Rational main_bound(const GapConstant& gamma, std::uint64_t m, std::uint64_t n) {
  require(m >= 1, "main_bound: m must be >= 1");
  require(m <= n, "main_bound: m must be <= n");
  const Rational base = gamma.base();
  const Integer num = power(mp::numerator(base), m);
  const Integer den = power(mp::denominator(base), m);
  return Rational(num * Integer(n - 1), den);
}

BoundReport main_bound_holds(std::uint64_t order, const GapConstant& gamma, std::uint64_t m,
                             std::uint64_t n) {
  require(order >= 1, "main_bound_holds: order must be >= 1");
  require(m >= 1, "main_bound_holds: m must be >= 1");
  require(m <= n, "main_bound_holds: m must be <= n");
  const Integer p = mp::numerator(gamma.gamma());
  const Integer q = mp::denominator(gamma.gamma());

  BoundReport report;
  report.context = tuple_context("main", {{"order", std::to_string(order)},
                                          {"gamma", format_rational(gamma.gamma())},
                                          {"m", std::to_string(m)},
                                          {"n", std::to_string(n)}});
  report.lhs = Rational(Integer(order) * power(q - p, m));
  report.rhs = Rational(power(2 * q, m) * Integer(n - 1));
  report.holds = report.lhs <= report.rhs;
  return report;
}

BoundReport derivation_chain_holds(std::uint64_t t, std::uint64_t eta, const Rational& gamma,
                                   std::uint64_t m, std::uint64_t n) {
  require(t >= 1, "derivation_chain_holds: t must be >= 1");
  require(m >= 1 && m <= n, "derivation_chain_holds: need 1 <= m <= n");
  require(Integer(eta) <= Integer(t) * Integer(t), "derivation_chain_holds: eta must be <= t^2");
  const GapConstant g(gamma, GapConstant::Source::kUserSupplied);

  const Integer tt(t);
  const bool dense = Rational(Integer(eta)) >= (Rational(1) - gamma) * Rational(tt * tt);
  const bool kst = kst_bound_holds(t, m, n, eta).holds;
  const bool large = tt + 1 >= Integer(n);

  BoundReport conclusion = main_bound_holds(t, g, m, n);
  const bool hypotheses = dense && kst && large;
  BoundReport report;
  report.lhs = conclusion.lhs;
  report.rhs = conclusion.rhs;
  report.holds = !hypotheses || conclusion.holds;
  report.context = tuple_context(
      "chain", {{"t", std::to_string(t)},
                {"eta", std::to_string(eta)},
                {"gamma", format_rational(gamma)},
                {"m", std::to_string(m)},
                {"n", std::to_string(n)},
                {"hypotheses", hypotheses ? "hold" : "fail"}});
  return report;
}

}  // namespace wordprop
