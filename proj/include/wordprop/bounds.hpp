#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "wordprop/rational.hpp"

namespace wordprop {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact gap constant gamma in [0, 1) together with where it came from.
class GapConstant {
 public:
  enum class Source { kGustafson, kEmpiricalCatalogSupremum, kUserSupplied };

  GapConstant(Rational gamma, Source source);

  /// Gustafson's 5/8 commuting-probability gap.
  static GapConstant gustafson();

  const Rational& gamma() const noexcept { return gamma_; }
  Source source() const noexcept { return source_; }

  /// 2 / (1 - gamma), always >= 2.
  Rational base() const { return Rational(2) / (Rational(1) - gamma_); }

 private:
  Rational gamma_;
  Source source_;
};

const char* to_string(GapConstant::Source source);

/// Outcome of one exact inequality test: holds iff lhs <= rhs.
struct BoundReport {
  bool holds = false;
  Rational lhs;
  Rational rhs;
  std::string context;
};

/// Directed Kovari-Sos-Turan: edges <= (s-1)^(1/r) t^(2-1/r) + (r-1) t,
/// decided without roots as (edges - (r-1)t)^r <= (s-1) t^(2r-1).
BoundReport kst_bound_holds(std::uint64_t t, std::uint64_t r, std::uint64_t s,
                            std::uint64_t edges);

/// (2 / (1 - gamma))^m (n - 1).
Rational main_bound(const GapConstant& gamma, std::uint64_t m, std::uint64_t n);

/// order <= main_bound(gamma, m, n), tested with denominators cleared: for
/// gamma = p/q the report carries lhs = order (q-p)^m and rhs = (2q)^m (n-1).
BoundReport main_bound_holds(std::uint64_t order, const GapConstant& gamma, std::uint64_t m,
                             std::uint64_t n);

/// The implication behind the order bound: if eta >= (1-gamma) t^2, the KST
/// inequality holds for (t, m, n, eta) and t >= n-1, then
/// t <= (2/(1-gamma))^m (n-1). Vacuously true when a hypothesis fails; the
/// report's lhs/rhs are those of the conclusion.
BoundReport derivation_chain_holds(std::uint64_t t, std::uint64_t eta, const Rational& gamma,
                                   std::uint64_t m, std::uint64_t n);

}  // namespace wordprop
