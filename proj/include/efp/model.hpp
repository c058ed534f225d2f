#pragma once

#include <optional>
#include <vector>

#include "efp/rational.hpp"

namespace efp {

/// Discrete input/output price domains. Valuations and budgets live on the
/// input grid (spacing epsilon); mechanism prices live on the strictly finer
/// output grid (spacing delta = epsilon / 2).
struct PriceGrid {
  Rat input_spacing;   // epsilon
  Rat output_spacing;  // delta

  static PriceGrid with_epsilon(const Rat& epsilon);

  bool on_input_grid(const Rat& v) const { return on_grid(v, input_spacing); }
  bool on_output_grid(const Rat& v) const { return on_grid(v, output_spacing); }
};

/// epsilon = 1/100, delta = 1/200.
PriceGrid default_grid();

struct Buyer {
  Rat valuation;  // value per unit, > 0
  Rat budget;     // monetary cap, > 0
};

/// A linear multi-unit market: n buyers, m identical indivisible units.
/// Buyer identities are their 0-based indices.
struct AuctionInstance {
  std::vector<Buyer> buyers;
  long long units = 0;  // m
  PriceGrid grid = default_grid();

  int n() const { return static_cast<int>(buyers.size()); }
  Rat max_valuation() const;

  /// Throws std::invalid_argument if any invariant fails (n >= 1, m >= 1,
  /// positive valuations/budgets on the input grid).
  void validate() const;
};

struct Allocation {
  std::vector<long long> units;  // x_i, one per buyer

  long long total() const;
};

struct Outcome {
  Rat price;
  Allocation allocation;
};

/// Quasi-linear utility with a hard budget cap. Bundles that exceed the
/// budget rank below every finite value (a distinguished sentinel, not a
/// numeric approximation).
class Utility {
 public:
  static Utility neg_infinity() { return Utility(); }
  static Utility of(Rat v) {
    Utility u;
    u.value_ = std::move(v);
    return u;
  }

  bool feasible() const { return value_.has_value(); }
  const Rat& value() const { return *value_; }

  friend bool operator==(const Utility& a, const Utility& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Utility& a, const Utility& b) {
    if (!a.feasible()) return b.feasible();
    if (!b.feasible()) return false;
    return a.value() < b.value();
  }
  friend bool operator<=(const Utility& a, const Utility& b) {
    return a < b || a == b;
  }
  friend bool operator>(const Utility& a, const Utility& b) { return b < a; }

 private:
  std::optional<Rat> value_;
};

/// v_i * x_i - p * x_i when p * x_i <= B_i, negative infinity otherwise.
Utility utility(const Buyer& buyer, const Rat& price, long long units);

/// Sum of v_i * x_i (price-independent).
Rat social_welfare(const AuctionInstance& instance, const Outcome& outcome);

/// p * sum x_i.
Rat revenue(const Outcome& outcome);

enum class Objective { Welfare, Revenue };

}  // namespace efp
