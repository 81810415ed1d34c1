#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dgop {

/* Arithmetic in the prime field F_p.  Scalars are stored as canonical
 * representatives in [0, p).  p = 2 is the default everywhere; odd p is
 * supported so that the sign conventions fixed in the operad layers can be
 * exercised. */
struct Field {
  int64_t p = 2;

  explicit Field(int64_t prime = 2) : p(prime) {
    if (p < 2) throw std::invalid_argument("field characteristic must be a prime >= 2");
    for (int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
  }

  int64_t norm(int64_t a) const {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
  }
  int64_t add(int64_t a, int64_t b) const { return norm(a + b); }
  int64_t sub(int64_t a, int64_t b) const { return norm(a - b); }
  int64_t neg(int64_t a) const { return norm(-a); }
  int64_t mul(int64_t a, int64_t b) const { return norm(norm(a) * norm(b)); }

  int64_t inv(int64_t a) const {
    a = norm(a);
    if (a == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid
    int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    return norm(t);
  }
  int64_t div(int64_t a, int64_t b) const { return mul(a, inv(b)); }

  /* (-1)^e */
  int64_t sign(int64_t e) const { return (e % 2 == 0) ? 1 : norm(-1); }

  bool operator==(const Field& o) const { return p == o.p; }
};

}  // namespace dgop
