#include "abelscope/selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace abelscope {

LiteralFiltrationCounterexample literal_filtration_counterexample(const GroupParams& params, long m) {
  if (m < 1) throw InputError("the literal filtration is only non-closed for m >= 1");
  LiteralFiltrationCounterexample c;
  c.m = m;
  c.a = elementary(2, 3, prime_power(params.p, -m));
  c.b = elementary(3, 4, prime_power(params.p, -m));
  c.product = mul(params, c.a, c.b);
  c.literal_a = is_in_upsilon_m_literal(params, c.a, m);
  c.literal_b = is_in_upsilon_m_literal(params, c.b, m);
  c.literal_product = is_in_upsilon_m_literal(params, c.product, m);
  c.corrected_a = is_in_upsilon_m(params, c.a, m);
  c.corrected_b = is_in_upsilon_m(params, c.b, m);
  c.corrected_product = is_in_upsilon_m(params, c.product, m);
  return c;
}

bool SelftestReport::pass() const { return total_violations() == 0 && literal.demonstrates(); }

std::size_t SelftestReport::total_violations() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.violations;
  return n;
}

namespace {

class Recorder {
 public:
  explicit Recorder(SelftestReport& r) : report_(r) {}

  void check(const std::string& name, std::size_t trial, bool ok,
             const std::function<Json()>& witness) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, report_.checks.size()).first;
      report_.checks.push_back({name, 0, 0});
    }
    auto& tally = report_.checks[it->second];
    ++tally.checked;
    if (ok) return;
    ++tally.violations;
    if (!report_.first_counterexample) {
      report_.first_counterexample = Json{{"check", name}, {"trial", trial}, {"elements", witness()}};
    }
  }

 private:
  SelftestReport& report_;
  std::map<std::string, std::size_t> index_;
};

Json elems(std::initializer_list<std::pair<const char*, const GammaElt*>> xs) {
  Json j = Json::object();
  for (const auto& [name, g] : xs) j[name] = gamma_to_json(*g);
  return j;
}

long max_entry_depth(const GroupParams& params, const GammaElt& g) {
  long depth = 0;
  for (const auto& x : g.u) {
    const Valuation v = vp(x, params.p);
    if (!v.is_infinite()) depth = std::max(depth, -v.value());
  }
  return depth;
}

bool in_set(const std::vector<CosetRep>& set, const CosetRep& c) {
  return std::find(set.begin(), set.end(), c) != set.end();
}

}  // namespace

SelftestReport group_selftest(const GroupParams& params, std::size_t trials, std::uint64_t seed) {
  SelftestReport report;
  report.p = params.p.value();
  report.trials = trials;
  report.seed = seed;
  report.literal = literal_filtration_counterexample(params, 1);

  Recorder rec(report);
  const RandomBounds bounds;
  const GammaElt one = identity();
  const auto xset = discriminating_set(params);
  const auto& P = params;

  for (std::size_t t = 0; t < trials; ++t) {
    std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
    Rng rng(sseq);
    const GammaElt a = random_element(P, bounds, rng);
    const GammaElt b = random_element(P, bounds, rng);
    const GammaElt c = random_element(P, bounds, rng);
    const GammaElt ab = mul(P, a, b);
    const GammaElt ia = inv(P, a);

    rec.check("closure", t, !check_invariants(P, ab) && !check_invariants(P, ia),
              [&] { return elems({{"a", &a}, {"b", &b}}); });
    rec.check("associativity", t, mul(P, ab, c) == mul(P, a, mul(P, b, c)),
              [&] { return elems({{"a", &a}, {"b", &b}, {"c", &c}}); });
    rec.check("identity", t, mul(P, a, one) == a && mul(P, one, a) == a, [&] { return elems({{"a", &a}}); });
    rec.check("inverse", t, mul(P, a, ia) == one && mul(P, ia, a) == one, [&] { return elems({{"a", &a}}); });
    rec.check("inverse_of_product", t, inv(P, ab) == mul(P, inv(P, b), ia),
              [&] { return elems({{"a", &a}, {"b", &b}}); });

    const GammaElt mM = random_M_element(P, bounds, rng);
    const GammaElt mZ = random_MZ_element(bounds, rng);
    const GammaElt up = random_upsilon_element(P, bounds, rng);
    const GammaElt la = random_lambda_element(P, bounds, rng);
    rec.check("normality_M", t, is_in_M(conjugate(P, mM, c)), [&] { return elems({{"g", &mM}, {"h", &c}}); });
    rec.check("normality_MZ", t, is_in_MZ(conjugate(P, mZ, c)), [&] { return elems({{"g", &mZ}, {"h", &c}}); });
    rec.check("normality_upsilon", t, is_in_upsilon(conjugate(P, up, c)),
              [&] { return elems({{"g", &up}, {"h", &c}}); });
    rec.check("normality_lambda", t, is_in_lambda(conjugate(P, la, c)),
              [&] { return elems({{"g", &la}, {"h", &c}}); });

    for (long m = 0; m <= 2; ++m) {
      const GammaElt x = random_upsilon_m_element(P, m, bounds, rng);
      const GammaElt y = random_upsilon_m_element(P, m, bounds, rng);
      const GammaElt xy = mul(P, x, y);
      const GammaElt ix = inv(P, x);
      const std::string suffix = "_m" + std::to_string(m);
      rec.check("upsilon_m_closure" + suffix, t,
                is_in_upsilon_m(P, x, m) && is_in_upsilon_m(P, xy, m) && is_in_upsilon_m(P, ix, m),
                [&] { return elems({{"x", &x}, {"y", &y}}); });
      rec.check("upsilon_m_increasing" + suffix, t, is_in_upsilon_m(P, x, m + 1),
                [&] { return elems({{"x", &x}}); });
    }
    rec.check("upsilon_union", t, is_in_upsilon_m(P, up, max_entry_depth(P, up)),
              [&] { return elems({{"g", &up}}); });

    {
      const auto [a2, a3] = proj_z2(a);
      const auto [b2, b3] = proj_z2(b);
      rec.check("proj_z2_homomorphism", t, proj_z2(ab) == std::make_pair(a2 + b2, a3 + b3),
                [&] { return elems({{"a", &a}, {"b", &b}}); });
      rec.check("proj_z2_kernel", t,
                (proj_z2(a) == std::make_pair(0L, 0L)) == is_in_upsilon(a) && proj_z2(up) == std::make_pair(0L, 0L),
                [&] { return elems({{"a", &a}, {"g", &up}}); });
    }

    {
      const CosetRep ca = canonical_mod_MZ(a);
      rec.check("coset_constancy", t, canonical_mod_MZ(mul(P, a, mZ)) == ca,
                [&] { return elems({{"g", &a}, {"m", &mZ}}); });
      rec.check("coset_idempotence", t, canonical_mod_MZ(ca.rep) == ca, [&] { return elems({{"g", &a}}); });
    }

    {
      const long m = static_cast<long>(t % 3);
      const GammaElt g = random_xi_m_element(P, m, bounds, rng);
      const GammaElt h = random_xi_m_element(P, m, bounds, rng);
      // Lower central series of the 5x5 unipotent part has length 3.
      GammaElt cur = commutator(P, g, h);
      for (int step = 1; step < 4; ++step) cur = commutator(P, cur, step % 2 ? g : h);
      rec.check("xi_m_nilpotency", t, is_in_xi_m(P, g, m) && is_in_xi_m(P, h, m) && cur.is_identity(),
                [&] { return elems({{"g", &g}, {"h", &h}}); });
    }

    {
      GammaElt g = random_M_element(P, bounds, rng);
      if (is_in_MZ(g)) g[U::u04] += prime_power(P.p, -1);
      const CosetRep w = order_p_witness(P, g);
      rec.check("witness_law", t, in_set(xset, w) && order_in_M_mod_MZ(P, w.rep) == P.p.value(),
                [&] { return elems({{"g", &g}}); });
    }
  }
  return report;
}

Json selftest_to_json(const SelftestReport& r) {
  Json j;
  j["p"] = r.p;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  Json checks = Json::object();
  for (const auto& c : r.checks) checks[c.name] = {{"checked", c.checked}, {"violations", c.violations}};
  j["checks"] = std::move(checks);
  j["violations"] = r.total_violations();

  const auto& lit = r.literal;
  Json l;
  l["m"] = lit.m;
  l["a"] = gamma_to_json(lit.a);
  l["b"] = gamma_to_json(lit.b);
  l["product"] = gamma_to_json(lit.product);
  l["literal_membership"] = {{"a", lit.literal_a}, {"b", lit.literal_b}, {"product", lit.literal_product}};
  l["corrected_membership"] = {{"a", lit.corrected_a}, {"b", lit.corrected_b}, {"product", lit.corrected_product}};
  l["literal_closure_fails"] = lit.demonstrates();
  j["literal_filtration_counterexample"] = std::move(l);

  j["first_counterexample"] = r.first_counterexample ? *r.first_counterexample : Json(nullptr);
  j["pass"] = r.pass();
  return j;
}

}  // namespace abelscope
