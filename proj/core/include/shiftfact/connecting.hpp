#pragma once

#include <string_view>
#include <vector>

#include "shiftfact/rational.hpp"

namespace shiftfact {

enum class ConnectingKind {
  StirlingFirst,   // [z]_n = sum s(n,k) z^k (signed)
  StirlingSecond,  // z^n   = sum S(n,k) [z]_k
  Lah,             // (z)_n = sum L(n,k) [z]_k (signless)
};

std::string_view connecting_kind_name(ConnectingKind kind);

/// Immutable lower-triangular table of connecting coefficients c(n, k),
/// 0 <= k <= n <= n_max.
class ConnectingCoefficients {
 public:
  ConnectingCoefficients(ConnectingKind kind, std::vector<std::vector<BigInt>> rows)
      : kind_(kind), rows_(std::move(rows)) {}

  ConnectingKind kind() const { return kind_; }
  int n_max() const { return static_cast<int>(rows_.size()) - 1; }

  /// c(n, k); zero outside 0 <= k <= n.
  BigInt at(int n, int k) const;
  const std::vector<BigInt>& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

 private:
  ConnectingKind kind_;
  std::vector<std::vector<BigInt>> rows_;
};

ConnectingCoefficients connecting_table(ConnectingKind kind, int n_max);

}  // namespace shiftfact
