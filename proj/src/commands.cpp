#include "abelscope/commands.hpp"

#include <sstream>

#include "abelscope/homology.hpp"
#include "abelscope/marked.hpp"
#include "abelscope/selftest.hpp"

namespace abelscope {

namespace {

CommandResult bad_input(const std::string& message, Json extra = Json::object()) {
  Json j;
  j["error"] = message;
  for (auto& [k, v] : extra.items()) j[k] = v;
  return {ExitStatus::bad_input, std::move(j)};
}

Json triple_json(const std::array<std::size_t, 3>& t) { return Json::array({t[0], t[1], t[2]}); }

struct PreimageIdentity {
  std::vector<std::vector<std::string>> target;  // signed sum of degree-2 monomials
  std::vector<int> signs;
  std::vector<std::string> preimage;             // one degree-3 monomial
};

// The weight-zero kernel vectors e_i2^e24 - e_i3^e34 (i = 0, 1) and
// e04^e14, each with an explicit degree-3 preimage.
std::vector<PreimageIdentity> stated_identities() {
  std::vector<PreimageIdentity> out;
  for (const std::string i : {"0", "1"}) {
    out.push_back({{{"e" + i + "2", "e24"}, {"e" + i + "3", "e34"}}, {1, -1}, {"e" + i + "2", "e23", "e34"}});
  }
  out.push_back({{{"e04", "e14"}}, {1}, {"e12", "e24", "e04"}});
  return out;
}

Vec combine(const LieAlgebra& L, const PreimageIdentity& id) {
  Vec v(binomial(L.dim(), 2));
  for (std::size_t t = 0; t < id.target.size(); ++t) {
    const Vec m = wedge_monomial(L, id.target[t]);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += Rat(id.signs[t]) * m[k];
  }
  return v;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

}  // namespace

CommandResult cmd_verify(long p_raw, std::size_t trials, std::uint64_t seed) {
  std::optional<GroupParams> params;
  try {
    params = GroupParams{Prime(p_raw)};
  } catch (const InputError& e) {
    return bad_input(e.what());
  }

  const LieAlgebra L = build_u9_algebra();
  const Weight zero = Weight::zero(L.rank());
  const WedgeBasis w2(L.dim(), 2);
  bool ok = true;

  Json j;
  j["p"] = p_raw;
  j["trials"] = trials;
  j["seed"] = seed;

  const auto jacobi = check_jacobi(L);
  const auto chain = check_complex(L);
  const auto additivity = check_weight_additivity(L);
  j["jacobi"] = jacobi ? Json{{"pass", false}, {"failing_triple", triple_json(*jacobi)}} : Json{{"pass", true}};
  j["chain_complex"] = chain ? Json{{"pass", false}, {"failing_triple", triple_json(*chain)}} : Json{{"pass", true}};
  j["weight_additivity"] = !additivity;
  ok = ok && !jacobi && !chain && !additivity;

  Json weights = Json::array();
  for (std::size_t i = 0; i < L.dim(); ++i) {
    weights.push_back({{"basis", L.labels()[i]}, {"weight", weight_to_json(L.weight(i))}});
  }
  j["algebra_weights"] = std::move(weights);
  Json ab = Json::array();
  for (const auto& w : abelianization_weights(L)) ab.push_back(weight_to_json(w));
  j["abelianization_weights"] = std::move(ab);

  const AbelsVerdict verdict = abels_check(L);
  const Json vj = verdict_to_json(verdict);
  j["condition1"] = vj["condition1"];

  Json basis0 = Json::array();
  for (auto pos : weight_positions(L, 2, zero)) basis0.push_back(w2.label(L, pos));
  j["weight0_wedge_basis"] = std::move(basis0);

  const Subspace kernel0 = kernel_weight_basis(L, zero);
  Json kj = Json::array();
  for (const auto& v : kernel0.basis()) kj.push_back(wedge_vector_to_json(L, 2, v));
  j["kernel0_basis"] = std::move(kj);

  const QMat d3 = d3_matrix(L);
  const Subspace image0 = image_weight_basis(L, zero);
  std::vector<Vec> stated;
  Json identities = Json::array();
  for (const auto& id : stated_identities()) {
    const Vec target = combine(L, id);
    stated.push_back(target);
    const Vec claimed = wedge_monomial(L, id.preimage);
    const bool claimed_holds = d3 * claimed == target;
    const auto solution = express_in_image(L, target);
    const bool solved = solution && d3 * *solution == target;
    const bool in_image = in_span(target, image0).has_value();
    ok = ok && claimed_holds && solved && in_image;

    Json e;
    e["target"] = wedge_vector_to_json(L, 2, target);
    e["claimed_preimage"] = join(id.preimage, "^");
    e["claimed_holds"] = claimed_holds;
    e["solution"] = solution ? wedge_vector_to_json(L, 3, *solution) : Json(nullptr);
    e["solution_verified"] = solved;
    e["in_weight0_image"] = in_image;
    identities.push_back(std::move(e));
  }
  const bool kernel_matches = Subspace::span(w2.size(), stated) == kernel0;
  ok = ok && kernel_matches;
  j["kernel0_matches_stated_basis"] = kernel_matches;
  j["preimage_identities"] = std::move(identities);

  j["condition2"] = vj["condition2"];
  j["finitely_presented"] = verdict.finitely_presented;
  ok = ok && verdict.finitely_presented;

  const SelftestReport st = group_selftest(*params, trials, seed);
  j["group_selftest_summary"] = selftest_to_json(st);
  ok = ok && st.pass();

  j["pass"] = ok;
  return {ok ? ExitStatus::ok : ExitStatus::verification_failed, std::move(j)};
}

CommandResult cmd_algebra_check(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    return bad_input(std::string("malformed JSON: ") + e.what());
  }
  std::optional<LieAlgebra> L;
  try {
    L = algebra_from_json(doc);
  } catch (const InputError& e) {
    return bad_input(e.what());
  }
  if (auto t = check_jacobi(*L)) {
    return bad_input("Jacobi identity fails", Json{{"failing_triple", triple_json(*t)}});
  }
  if (auto t = check_weight_additivity(*L)) {
    return bad_input("brackets are not weight-homogeneous", Json{{"failing_triple", triple_json(*t)}});
  }
  const AbelsVerdict v = abels_check(*L);
  return {v.finitely_presented ? ExitStatus::ok : ExitStatus::verification_failed, verdict_to_json(v)};
}

CommandResult cmd_group_selftest(long p_raw, std::size_t trials, std::uint64_t seed) {
  std::optional<GroupParams> params;
  try {
    params = GroupParams{Prime(p_raw)};
  } catch (const InputError& e) {
    return bad_input(e.what());
  }
  const SelftestReport r = group_selftest(*params, trials, seed);
  return {r.pass() ? ExitStatus::ok : ExitStatus::verification_failed, selftest_to_json(r)};
}

std::string Preset::str() const {
  switch (kind) {
    case Kind::z: return "z";
    case Kind::z_mod: return "z-mod " + std::to_string(modulus);
    case Kind::gamma: return "gamma";
    case Kind::gamma_mod_mz: return "gamma-mod-mz";
  }
  return "";
}

Preset parse_preset(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw InputError("empty preset");
  const std::string& name = tokens[0];
  const std::size_t want = name == "z-mod" ? 2 : 1;
  if (tokens.size() != want) throw InputError("wrong number of arguments for preset '" + name + "'");
  if (name == "z") return {Preset::Kind::z, 0};
  if (name == "gamma") return {Preset::Kind::gamma, 0};
  if (name == "gamma-mod-mz") return {Preset::Kind::gamma_mod_mz, 0};
  if (name == "z-mod") {
    long n = 0;
    try {
      std::size_t used = 0;
      n = std::stol(tokens[1], &used);
      if (used != tokens[1].size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("z-mod needs an integer modulus");
    }
    if (n < 1) throw InputError("z-mod needs a positive modulus");
    return {Preset::Kind::z_mod, n};
  }
  throw InputError("unknown preset '" + name + "'");
}

namespace {

Json element_json(const Int& x) { return x.get_str(); }
Json element_json(long x) { return x; }
Json element_json(const GammaElt& g) { return gamma_to_json(g); }
Json element_json(const CosetRep& c) { return gamma_to_json(c.rep); }

template <class F>
auto with_marking(const Preset& preset, long p, F&& f) {
  switch (preset.kind) {
    case Preset::Kind::z:
      return f(Marking<IntegerOracle>(IntegerOracle{}, {Int(1)}, {"a"}));
    case Preset::Kind::z_mod:
      return f(Marking<CyclicOracle>(CyclicOracle(preset.modulus), {1 % preset.modulus}, {"a"}));
    case Preset::Kind::gamma:
    case Preset::Kind::gamma_mod_mz:
      break;
  }
  const GroupParams params{Prime(p)};
  std::vector<GammaElt> gens;
  std::vector<std::string> names;
  for (auto& [name, g] : default_generators()) {
    names.push_back(name);
    gens.push_back(g);
  }
  if (preset.kind == Preset::Kind::gamma) return f(Marking<GammaOracle>(GammaOracle{params}, gens, names));
  std::vector<CosetRep> cosets;
  for (const auto& g : gens) cosets.push_back(canonical_mod_MZ(g));
  return f(Marking<GammaModMZOracle>(GammaModMZOracle{params}, cosets, names));
}

template <class O1, class O2>
CommandResult compare_markings(const Marking<O1>& m1, const Marking<O2>& m2, const BallOptions& opts) {
  if (m1.generators.size() != m2.generators.size()) {
    return bad_input("presets have different generator counts");
  }
  Json j;
  j["preset"] = opts.preset.str();
  const BallGraph b1 = ball(m1, opts.radius);
  j["ball"] = ball_to_json(b1);

  Json c;
  c["preset"] = opts.compare->str();
  const BallGraph b2 = ball(m2, opts.radius);
  c["ball"] = ball_to_json(b2);
  c["equal"] = balls_equal(b1, b2);
  std::size_t agree = opts.radius;
  for (std::size_t r = 1; r <= opts.radius; ++r) {
    if (!balls_equal(truncate(b1, r), truncate(b2, r))) {
      agree = r - 1;
      break;
    }
  }
  c["agreement_radius"] = agree;

  bool ok = true;
  const auto witness = divergence_witness(m1, m2, opts.radius);
  if (witness) {
    Json w;
    w["word"] = word_str(witness->word, m1.names);
    w["length"] = witness->word.size();
    const auto x1 = evaluate(m1, witness->word);
    const auto x2 = evaluate(m2, witness->word);
    const bool trivial1 = m1.oracle.eq(x1, m1.oracle.identity());
    const bool trivial2 = m2.oracle.eq(x2, m2.oracle.identity());
    ok = witness->trivial_in == 1 ? (trivial1 && !trivial2) : (trivial2 && !trivial1);
    w["trivial_in"] = witness->trivial_in == 1 ? opts.preset.str() : opts.compare->str();
    w["value_in_other"] = witness->trivial_in == 1 ? element_json(x2) : element_json(x1);
    if constexpr (std::is_same_v<O1, GammaOracle>) w["value_in_MZ"] = is_in_MZ(x1) && !x1.is_identity();
    if constexpr (std::is_same_v<O2, GammaOracle>) w["value_in_MZ"] = is_in_MZ(x2) && !x2.is_identity();
    w["verified"] = ok;
    c["divergence_witness"] = std::move(w);
  } else {
    c["divergence_witness"] = nullptr;
  }
  j["compare"] = std::move(c);
  return {ok ? ExitStatus::ok : ExitStatus::verification_failed, std::move(j)};
}

}  // namespace

CommandResult cmd_ball(const BallOptions& opts) {
  if (opts.radius > opts.max_radius) {
    return bad_input("radius " + std::to_string(opts.radius) + " exceeds the cap of " +
                     std::to_string(opts.max_radius) + "; pass --max-radius-override to raise it");
  }
  try {
    if (opts.preset.kind == Preset::Kind::gamma || opts.preset.kind == Preset::Kind::gamma_mod_mz ||
        (opts.compare && (opts.compare->kind == Preset::Kind::gamma ||
                          opts.compare->kind == Preset::Kind::gamma_mod_mz))) {
      Prime{opts.p};
    }
    return with_marking(opts.preset, opts.p, [&](const auto& m1) {
      if (!opts.compare) {
        Json j;
        j["preset"] = opts.preset.str();
        j["ball"] = ball_to_json(ball(m1, opts.radius));
        return CommandResult{ExitStatus::ok, std::move(j)};
      }
      return with_marking(*opts.compare, opts.p,
                          [&](const auto& m2) { return compare_markings(m1, m2, opts); });
    });
  } catch (const InputError& e) {
    return bad_input(e.what());
  }
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat(const Json& j) {
  if (is_scalar(j)) return true;
  for (const auto& x : j) {
    if (!is_scalar(x) && !(x.is_array() && std::all_of(x.begin(), x.end(), is_scalar))) return false;
  }
  return j.is_array();
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string inline_text(const Json& j) {
  if (is_scalar(j)) return scalar_text(j);
  std::string s = "[";
  bool first = true;
  for (const auto& x : j) {
    s += (first ? "" : ", ") + inline_text(x);
    first = false;
  }
  return s + "]";
}

void render(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_flat(v) || (v.is_object() && v.empty())) {
        os << pad << k << ": " << (v.is_object() ? "{}" : inline_text(v)) << '\n';
      } else {
        os << pad << k << ":\n";
        render(v, indent + 2, os);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_flat(v)) {
        os << pad << "- " << inline_text(v) << '\n';
      } else {
        std::ostringstream item;
        render(v, indent + 2, item);
        std::string text = item.str();
        text.replace(0, pad.size() + 2, pad + "- ");
        os << text;
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace abelscope
