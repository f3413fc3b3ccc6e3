#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relpca/linalg.hpp"

namespace relpca {

// First failing instance of an identity: the equation label, the basis
// indices it was evaluated at, and the exact nonzero defect (tensor
// residuals are flattened row-major).
struct Witness {
  std::string identity;
  std::vector<int> indices;
  Vec residual;
};

struct CheckReport {
  bool passed{true};
  std::optional<Witness> witness;

  static CheckReport ok() { return {}; }
  static CheckReport fail(Witness w) { return {false, std::move(w)}; }
};

// Ordered list of labeled per-condition reports; what the CLI prints and
// what tests assert against.
struct Conditions {
  std::vector<std::pair<std::string, CheckReport>> items;

  void add(std::string label, CheckReport r) { items.emplace_back(std::move(label), std::move(r)); }
  void add_bool(std::string label, bool ok) {
    CheckReport r;
    r.passed = ok;
    if (!ok) r.witness = Witness{label, {}, {}};
    items.emplace_back(std::move(label), std::move(r));
  }
  void add_all(const Conditions& o, const std::string& prefix = "") {
    for (const auto& [l, r] : o.items) items.emplace_back(prefix + l, r);
  }
  bool all() const {
    for (const auto& [l, r] : items)
      if (!r.passed) return false;
    return true;
  }
  const CheckReport* find(const std::string& label) const {
    for (const auto& [l, r] : items)
      if (l == label) return &r;
    return nullptr;
  }
  // Collapses to a single report carrying the first failing witness.
  CheckReport overall() const {
    for (const auto& [l, r] : items)
      if (!r.passed) return r;
    return CheckReport::ok();
  }
};

// Constructors raise this when their stated preconditions fail; the full
// report rides along so callers can see which identity broke.
struct PreconditionError : std::runtime_error {
  Conditions details;
  PreconditionError(const std::string& msg, Conditions d)
      : std::runtime_error(msg), details(std::move(d)) {}
};

inline void require(const Conditions& c, const std::string& what) {
  if (!c.all()) throw PreconditionError(what, c);
}

// Scans a multi-index range in lexicographic order; the first nonzero
// residual becomes the witness.
inline CheckReport scan(const std::string& identity, const std::vector<int>& ranges,
                        const std::function<Vec(const std::vector<int>&)>& residual) {
  std::vector<int> idx(ranges.size(), 0);
  if (ranges.empty()) {
    Vec r = residual(idx);
    if (!is_zero(r)) return CheckReport::fail({identity, idx, std::move(r)});
    return CheckReport::ok();
  }
  while (true) {
    Vec r = residual(idx);
    if (!is_zero(r)) return CheckReport::fail({identity, idx, std::move(r)});
    int p = static_cast<int>(ranges.size()) - 1;
    while (p >= 0) {
      if (++idx[static_cast<size_t>(p)] < ranges[static_cast<size_t>(p)]) break;
      idx[static_cast<size_t>(p)] = 0;
      --p;
    }
    if (p < 0) return CheckReport::ok();
  }
}

inline CheckReport scan1(const std::string& id, int n, const std::function<Vec(int)>& f) {
  return scan(id, {n}, [&](const std::vector<int>& v) { return f(v[0]); });
}
inline CheckReport scan2(const std::string& id, int n, int m, const std::function<Vec(int, int)>& f) {
  return scan(id, {n, m}, [&](const std::vector<int>& v) { return f(v[0], v[1]); });
}
inline CheckReport scan3(const std::string& id, int n, int m, int p,
                         const std::function<Vec(int, int, int)>& f) {
  return scan(id, {n, m, p}, [&](const std::vector<int>& v) { return f(v[0], v[1], v[2]); });
}

}  // namespace relpca
