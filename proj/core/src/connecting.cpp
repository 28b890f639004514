#include "shiftfact/connecting.hpp"

#include "shiftfact/errors.hpp"

namespace shiftfact {

std::string_view connecting_kind_name(ConnectingKind kind) {
  switch (kind) {
    case ConnectingKind::StirlingFirst: return "StirlingFirst";
    case ConnectingKind::StirlingSecond: return "StirlingSecond";
    case ConnectingKind::Lah: return "Lah";
  }
  return "?";
}

BigInt ConnectingCoefficients::at(int n, int k) const {
  if (n < 0 || n > n_max() || k < 0 || k > n) return 0;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

ConnectingCoefficients connecting_table(ConnectingKind kind, int n_max) {
  if (n_max < 0) throw DomainError("connecting_table: n_max must be nonnegative");
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  rows.push_back({BigInt(1)});

  for (int n = 0; n < n_max; ++n) {
    const auto& prev = rows.back();
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 2, 0);
    for (int k = 0; k <= n + 1; ++k) {
      const BigInt same = k <= n ? prev[static_cast<std::size_t>(k)] : BigInt(0);
      const BigInt lower = k >= 1 ? prev[static_cast<std::size_t>(k - 1)] : BigInt(0);
      BigInt v;
      switch (kind) {
        case ConnectingKind::StirlingFirst:  // s(n+1,k) = s(n,k-1) - n s(n,k)
          v = lower - n * same;
          break;
        case ConnectingKind::StirlingSecond:  // S(n+1,k) = k S(n,k) + S(n,k-1)
          v = k * same + lower;
          break;
        case ConnectingKind::Lah:  // L(n+1,k) = (n+k) L(n,k) + L(n,k-1)
          v = (n + k) * same + lower;
          break;
      }
      next[static_cast<std::size_t>(k)] = v;
    }
    rows.push_back(std::move(next));
  }
  return ConnectingCoefficients(kind, std::move(rows));
}

}  // namespace shiftfact
