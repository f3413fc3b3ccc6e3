#include "relpca/laurent.hpp"

namespace relpca {
namespace laurent {

Elem monomial(long long n, const Rat& c) {
  Elem e;
  if (c != 0) e[n] = c;
  return e;
}

Elem add(const Elem& a, const Elem& b) {
  Elem r = a;
  for (const auto& [n, c] : b) {
    Rat s = r[n] + c;
    if (s == 0)
      r.erase(n);
    else
      r[n] = s;
  }
  return r;
}

Elem sub(const Elem& a, const Elem& b) {
  Elem nb;
  for (const auto& [n, c] : b) nb[n] = -c;
  return add(a, nb);
}

bool is_zero(const Elem& a) { return a.empty(); }

Elem mul(const Elem& a, const Elem& b) {
  Elem r;
  for (const auto& [m, cm] : a)
    for (const auto& [n, cn] : b) {
      Rat s = r[m + n] + cm * cn;
      if (s == 0)
        r.erase(m + n);
      else
        r[m + n] = s;
    }
  return r;
}

Elem deriv(const Elem& a) {
  Elem r;
  for (const auto& [n, c] : a) {
    Rat s = Rat(n) * c;
    if (s != 0) r[n - 1] = s;
  }
  return r;
}

Elem phat(long long a, const Elem& x) {
  Elem r;
  for (const auto& [n, c] : x) {
    Rat s = Rat(a + 1 - n) * c;
    if (s != 0) r[n - 1] = s;
  }
  return r;
}

Elem bracket(const Elem& x, const Elem& y) {
  return sub(mul(x, deriv(y)), mul(deriv(x), y));
}

Elem circ(long long a, const Elem& x, const Elem& y) {
  return sub(phat(a, mul(x, y)), mul(deriv(x), y));
}

Rat form(long long a, const Elem& x, const Elem& y) {
  Rat s = 0;
  for (const auto& [m, cm] : x) {
    auto it = y.find(a - m);
    if (it != y.end()) s += cm * it->second;
  }
  return s;
}

Elem eval_op(const std::string& kind, long long a, long long m, long long n) {
  if (kind == "dot") return mul(monomial(m), monomial(n));
  if (kind == "bracket") return bracket(monomial(m), monomial(n));
  if (kind == "circ") return circ(a, monomial(m), monomial(n));
  if (kind == "P") return deriv(monomial(m));
  if (kind == "phat") return phat(a, monomial(m));
  throw std::invalid_argument("laurent: unknown operation " + kind);
}

namespace {

// Sparse residual encoded as (exponent, coefficient) pairs so it fits the
// Vec-valued witness slot.
Vec encode(const Elem& e) {
  Vec v;
  for (const auto& [n, c] : e) {
    v.push_back(Rat(n));
    v.push_back(c);
  }
  return v;
}

}  // namespace

CheckReport sampled_check(const std::string& identity, long long a, const Window& w) {
  int sz = w.size();
  auto mono = [&](int i) { return monomial(w.lo + i); };
  auto expo = [&](int i) { return static_cast<int>(w.lo + i); };
  auto pair_scan = [&](auto f) {
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) {
        Vec r = f(mono(i), mono(j));
        if (!relpca::is_zero(r))
          return CheckReport::fail({identity, {expo(i), expo(j)}, std::move(r)});
      }
    return CheckReport::ok();
  };
  auto triple_scan = [&](auto f) {
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j)
        for (int k = 0; k < sz; ++k) {
          Vec r = f(mono(i), mono(j), mono(k));
          if (!relpca::is_zero(r))
            return CheckReport::fail({identity, {expo(i), expo(j), expo(k)}, std::move(r)});
        }
    return CheckReport::ok();
  };
  auto Q = [&](const Elem& x) { return phat(a, x); };
  auto circa = [&](const Elem& x, const Elem& y) { return circ(a, x, y); };

  if (identity == "comm")
    return pair_scan([&](const Elem& x, const Elem& y) { return encode(sub(mul(x, y), mul(y, x))); });
  if (identity == "assoc")
    return triple_scan([&](const Elem& x, const Elem& y, const Elem& z) {
      return encode(sub(mul(mul(x, y), z), mul(x, mul(y, z))));
    });
  if (identity == "deriv-P")
    return pair_scan([&](const Elem& x, const Elem& y) {
      Elem lhs = add(mul(deriv(x), y), mul(x, deriv(y)));
      return encode(sub(lhs, deriv(mul(x, y))));
    });
  if (identity == "antisym")
    return pair_scan([&](const Elem& x, const Elem& y) {
      return encode(add(bracket(x, y), bracket(y, x)));
    });
  if (identity == "jacobi")
    return triple_scan([&](const Elem& x, const Elem& y, const Elem& z) {
      Elem s = bracket(bracket(x, y), z);
      s = add(s, bracket(bracket(y, z), x));
      s = add(s, bracket(bracket(z, x), y));
      return encode(s);
    });
  if (identity == "GLR")
    return triple_scan([&](const Elem& z, const Elem& x, const Elem& y) {
      Elem s = bracket(z, mul(x, y));
      s = sub(s, mul(bracket(z, x), y));
      s = sub(s, mul(x, bracket(z, y)));
      s = sub(s, mul(mul(x, y), deriv(z)));
      return encode(s);
    });
  if (identity == "inv-dot")
    return triple_scan([&](const Elem& x, const Elem& y, const Elem& z) {
      return Vec{form(a, mul(x, y), z) - form(a, x, mul(y, z))};
    });
  if (identity == "2-coc")
    return triple_scan([&](const Elem& x, const Elem& y, const Elem& z) {
      Rat s = form(a, bracket(x, y), z);
      s += form(a, bracket(y, z), x);
      s += form(a, bracket(z, x), y);
      return Vec{s};
    });
  if (identity == "phat")
    return pair_scan([&](const Elem& x, const Elem& y) {
      return Vec{form(a, phat(a, x), y) - form(a, x, deriv(y))};
    });
  if (identity == "circ-formula")
    return pair_scan([&](const Elem& x, const Elem& y) {
      long long m = x.begin()->first, n = y.begin()->first;
      Elem closed = monomial(m + n - 1, Rat(a + 1 - 2 * m - n));
      return encode(sub(circa(x, y), closed));
    });
  if (identity == "apl1")
    return triple_scan([&](const Elem& x, const Elem& y, const Elem& z) {
      Elem s = circa(x, circa(y, z));
      s = sub(s, circa(y, circa(x, z)));
      Elem br_yx = sub(circa(y, x), circa(x, y));
      s = sub(s, circa(br_yx, z));
      return encode(s);
    });
  if (identity == "apl2")
    return triple_scan([&](const Elem& x, const Elem& y, const Elem& z) {
      Elem s = circa(sub(circa(x, y), circa(y, x)), z);
      s = add(s, circa(sub(circa(y, z), circa(z, y)), x));
      s = add(s, circa(sub(circa(z, x), circa(x, z)), y));
      return encode(s);
    });
  if (identity == "rps1")
    return pair_scan([&](const Elem& x, const Elem& y) {
      Elem s = mul(x, Q(y));
      s = sub(s, mul(deriv(x), y));
      s = sub(s, Q(mul(x, y)));
      return encode(s);
    });
  if (identity == "rps2")
    return pair_scan([&](const Elem& x, const Elem& y) {
      Elem s = circa(x, Q(y));
      s = sub(s, circa(deriv(x), y));
      s = sub(s, Q(circa(x, y)));
      return encode(s);
    });
  if (identity == "rps3")
    return triple_scan([&](const Elem& x, const Elem& y, const Elem& z) {
      Elem s = mul(x, circa(y, z));
      s = sub(s, circa(y, mul(x, z)));
      s = add(s, mul(bracket(x, y), z));
      s = sub(s, mul(mul(x, deriv(y)), z));
      return encode(s);
    });
  if (identity == "rps4")
    return triple_scan([&](const Elem& x, const Elem& y, const Elem& z) {
      Elem s = circa(mul(x, y), z);
      s = sub(s, circa(y, mul(x, z)));
      s = sub(s, circa(x, mul(y, z)));
      s = add(s, Q(mul(mul(x, y), z)));
      return encode(s);
    });
  if (identity == "unit") {
    Elem one = monomial(0);
    return pair_scan([&](const Elem& x, const Elem&) { return encode(sub(mul(one, x), x)); });
  }
  if (identity == "JA") {
    Elem one = monomial(0);
    return triple_scan([&](const Elem& z, const Elem& x, const Elem& y) {
      Elem s = bracket(z, mul(x, y));
      s = sub(s, mul(bracket(z, x), y));
      s = sub(s, mul(x, bracket(z, y)));
      s = sub(s, mul(mul(x, y), bracket(one, z)));
      return encode(s);
    });
  }
  throw std::invalid_argument("laurent: unknown identity " + identity);
}

Conditions sampled_suite(long long a, const Window& w) {
  static const char* names[] = {"comm",  "assoc", "deriv-P", "antisym", "jacobi", "GLR",
                                "inv-dot", "2-coc", "phat",   "circ-formula", "apl1", "apl2",
                                "rps1",  "rps2",  "rps3",    "rps4",    "unit",   "JA"};
  Conditions out;
  for (const char* name : names)
    out.add(std::string(name) + "[sampled]", sampled_check(name, a, w));
  return out;
}

}  // namespace laurent
}  // namespace relpca
