#include "mindisc/weierstrass.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace mindisc {

namespace {

struct RawInvariants {
  Integer c4, c6, delta;
};

RawInvariants raw_invariants(const WeierstrassEquation& e) {
  Integer b2 = e.a1 * e.a1 + 4 * e.a2;
  Integer b4 = e.a1 * e.a3 + 2 * e.a4;
  Integer b6 = e.a3 * e.a3 + 4 * e.a6;
  Integer c4 = b2 * b2 - 24 * b4;
  Integer c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  Integer num = c4 * c4 * c4 - c6 * c6;
  // The difference is divisible by 1728 identically in the a_i.
  Integer delta = exact_div(num, 1728);
  return {std::move(c4), std::move(c6), std::move(delta)};
}

Integer checked_div(const Integer& num, const Integer& den, const char* name) {
  if (!divides(den, num))
    throw std::domain_error(std::string("transformation leaves integral models: ") +
                            name + " is not integral");
  return exact_div(num, den);
}

}  // namespace

Integer discriminant(const WeierstrassEquation& e) { return raw_invariants(e).delta; }

CInvariants c_invariants(const WeierstrassEquation& e) {
  RawInvariants raw = raw_invariants(e);
  if (raw.delta == 0)
    throw singular_curve_error("singular curve: the discriminant vanishes");
  return {std::move(raw.c4), std::move(raw.c6), std::move(raw.delta)};
}

WeierstrassEquation transform(const WeierstrassEquation& e, const Transformation& t) {
  if (t.u == 0) throw std::invalid_argument("transformation requires u != 0");
  const Integer &u = t.u, &r = t.r, &s = t.s, &tt = t.t;
  Integer u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  WeierstrassEquation out;
  out.a1 = checked_div(e.a1 + 2 * s, u, "a1'");
  out.a2 = checked_div(e.a2 - s * e.a1 + 3 * r - s * s, u2, "a2'");
  out.a3 = checked_div(e.a3 + r * e.a1 + 2 * tt, u3, "a3'");
  out.a4 = checked_div(
      e.a4 - s * e.a3 + 2 * r * e.a2 - (tt + r * s) * e.a1 + 3 * r * r - 2 * s * tt,
      u4, "a4'");
  out.a6 = checked_div(
      e.a6 + r * e.a4 + r * r * e.a2 + r * r * r - tt * e.a3 - r * tt * e.a1 - tt * tt,
      u6, "a6'");
  return out;
}

Transformation compose(const Transformation& first, const Transformation& then) {
  const Integer &u1 = first.u, &r1 = first.r, &s1 = first.s, &t1 = first.t;
  const Integer &u2 = then.u, &r2 = then.r, &s2 = then.s, &t2 = then.t;
  Transformation out;
  out.u = u1 * u2;
  out.r = r1 + u1 * u1 * r2;
  out.s = s1 + u1 * s2;
  out.t = t1 + u1 * u1 * s1 * r2 + u1 * u1 * u1 * t2;
  return out;
}

std::vector<Integer> step2_admissible_set(const CInvariants& c) {
  if (c.c4 == 0 && c.c6 == 0)
    throw singular_curve_error("singular curve: c4 = c6 = 0");

  // Any admissible prime divides this; per-prime caps come from valuations.
  Integer base;
  if (c.c4 != 0 && c.c6 != 0)
    base = gcd(c.c4, c.c6);
  else if (c.c4 == 0)
    base = gcd(c.c6, c.delta);
  else
    base = gcd(c.c4, c.delta);

  std::vector<Integer> out{Integer(1)};
  if (abs(base) > 1) {
    for (const auto& [p, unused] : factorize(base).factors) {
      unsigned long cap;
      if (c.c4 != 0 && c.c6 != 0)
        cap = std::min(valuation(c.c4, p) / 4, valuation(c.c6, p) / 6);
      else if (c.c4 == 0)
        cap = std::min(valuation(c.c6, p) / 6, valuation(c.delta, p) / 12);
      else
        cap = std::min(valuation(c.c4, p) / 4, valuation(c.delta, p) / 12);
      if (cap == 0) continue;
      const size_t n = out.size();
      Integer q = 1;
      for (unsigned long e = 1; e <= cap; ++e) {
        q *= p;
        for (size_t i = 0; i < n; ++i) out.push_back(out[i] * q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LaskaResult laska_minimize(const WeierstrassEquation& e) {
  const CInvariants c = c_invariants(e);
  std::vector<Integer> scales = step2_admissible_set(c);

  struct Candidate {
    long a1, a2, a3;
  };

  for (auto it = scales.rbegin(); it != scales.rend(); ++it) {
    const Integer& u = *it;
    Integer u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    Integer xu = c.c4 == 0 ? Integer(0) : exact_div(c.c4, u4);
    Integer yu = c.c6 == 0 ? Integer(0) : exact_div(c.c6, u6);

    // The congruences (a1')^4 = xu (mod 8) and (a2')^3 = -(a1')^6 - yu (mod 3)
    // order the scan; integrality of steps 5-6 decides acceptance.
    std::vector<Candidate> candidates;
    for (long a1 : {0L, 1L})
      for (long a3 : {0L, 1L})
        for (long a2 : {-1L, 0L, 1L}) candidates.push_back({a1, a2, a3});
    std::stable_partition(candidates.begin(), candidates.end(), [&](const Candidate& cd) {
      Integer lhs1 = Integer(cd.a1 * cd.a1 * cd.a1 * cd.a1) - xu;
      Integer lhs2 = Integer(cd.a2 * cd.a2 * cd.a2 + cd.a1 * cd.a1 * cd.a1 *
                             cd.a1 * cd.a1 * cd.a1) + yu;
      return divides(8, lhs1) && divides(3, lhs2);
    });

    for (const Candidate& cd : candidates) {
      Integer b2 = Integer(cd.a1 * cd.a1 + 4 * cd.a2);

      // Step 5: recover a4', a6' from the scaled invariants.
      Integer t1 = b2 * b2 - xu;
      if (!divides(24, t1)) continue;
      Integer b4 = exact_div(t1, 24);
      Integer t2 = b4 - Integer(cd.a1 * cd.a3);
      if (!divides(2, t2)) continue;
      Integer a4 = exact_div(t2, 2);
      Integer t3 = -b2 * b2 * b2 + 36 * b2 * b4 - yu;
      if (!divides(216, t3)) continue;
      Integer b6 = exact_div(t3, 216);
      Integer t4 = b6 - Integer(cd.a3 * cd.a3);
      if (!divides(4, t4)) continue;
      Integer a6 = exact_div(t4, 4);

      // Step 6: recover the coordinate change.
      Integer t5 = u * cd.a1 - e.a1;
      if (!divides(2, t5)) continue;
      Integer s = exact_div(t5, 2);
      Integer t6 = u2 * cd.a2 - e.a2 + s * e.a1 + s * s;
      if (!divides(3, t6)) continue;
      Integer r = exact_div(t6, 3);
      Integer t7 = u3 * cd.a3 - e.a3 - r * e.a1;
      if (!divides(2, t7)) continue;
      Integer t = exact_div(t7, 2);

      WeierstrassEquation model{Integer(cd.a1), Integer(cd.a2), Integer(cd.a3),
                                std::move(a4), std::move(a6)};
      Transformation map{u, std::move(r), std::move(s), std::move(t)};
      try {
        if (transform(e, map) == model) return {std::move(model), std::move(map)};
      } catch (const std::domain_error&) {
        // Candidate was inconsistent after all; keep scanning.
      }
    }
  }
  throw std::logic_error("laska_minimize: the u = 1 pass cannot fail");
}

}  // namespace mindisc
