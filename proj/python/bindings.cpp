#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelscope/commands.hpp"
#include "abelscope/homology.hpp"
#include "abelscope/serialize.hpp"

namespace py = pybind11;
using namespace abelscope;

namespace {

std::pair<int, std::string> wrap(const CommandResult& r) { return {static_cast<int>(r.status), r.output.dump()}; }

LieAlgebra parse_algebra(const std::string& text) {
  try {
    return algebra_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

GammaElt parse_gamma(const GroupParams& params, const std::string& text) {
  try {
    return gamma_from_json(params, Json::parse(text));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of abelscope. Values cross the boundary as JSON text.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("verify", [](long p, std::size_t trials, std::uint64_t seed) { return wrap(cmd_verify(p, trials, seed)); },
        py::arg("p") = 2, py::arg("trials") = kDefaultTrials, py::arg("seed") = kDefaultSeed);

  m.def("algebra_check", [](const std::string& text) { return wrap(cmd_algebra_check(text)); }, py::arg("text"));

  m.def("group_selftest",
        [](long p, std::size_t trials, std::uint64_t seed) { return wrap(cmd_group_selftest(p, trials, seed)); },
        py::arg("p"), py::arg("trials"), py::arg("seed"));

  m.def(
      "ball",
      [](const std::vector<std::string>& preset, std::size_t radius,
         const std::optional<std::vector<std::string>>& compare, long p, std::size_t max_radius) {
        try {
          BallOptions opts;
          opts.preset = parse_preset(preset);
          if (compare) opts.compare = parse_preset(*compare);
          opts.radius = radius;
          opts.p = p;
          opts.max_radius = max_radius;
          return wrap(cmd_ball(opts));
        } catch (const InputError& e) {
          return std::make_pair(static_cast<int>(ExitStatus::bad_input), Json{{"error", e.what()}}.dump());
        }
      },
      py::arg("preset"), py::arg("radius"), py::arg("compare") = std::nullopt, py::arg("p") = 2,
      py::arg("max_radius") = kDefaultMaxRadius);

  m.def("abelianization_weights", [](const std::string& text) {
    std::vector<std::vector<long>> out;
    for (const auto& w : abelianization_weights(parse_algebra(text))) out.push_back(w.components());
    return out;
  });

  m.def("h2_weight_dim", [](const std::string& text, const std::vector<long>& weight) {
    return h2_weight_dim(parse_algebra(text), Weight(weight));
  });

  m.def("u9_algebra", [] { return algebra_to_json(build_u9_algebra()).dump(); });
  m.def("abels4_algebra", [] { return algebra_to_json(build_abels4_algebra()).dump(); });

  m.def("gamma_mul", [](long p, const std::string& a, const std::string& b) {
    const GroupParams params{Prime(p)};
    return gamma_to_json(mul(params, parse_gamma(params, a), parse_gamma(params, b))).dump();
  });
  m.def("gamma_inv", [](long p, const std::string& a) {
    const GroupParams params{Prime(p)};
    return gamma_to_json(inv(params, parse_gamma(params, a))).dump();
  });
  m.def("canonical_mod_mz", [](long p, const std::string& a) {
    const GroupParams params{Prime(p)};
    return gamma_to_json(canonical_mod_MZ(parse_gamma(params, a)).rep).dump();
  });
  m.def("order_in_m_mod_mz", [](long p, const std::string& a) {
    const GroupParams params{Prime(p)};
    return order_in_M_mod_MZ(params, parse_gamma(params, a)).get_str();
  });
  m.def("discriminating_set", [](long p) {
    Json out = Json::array();
    for (const auto& c : discriminating_set(GroupParams{Prime(p)})) out.push_back(gamma_to_json(c.rep));
    return out.dump();
  });

  m.def("vp", [](const std::string& x, long p) -> std::optional<long> {
    const Valuation v = abelscope::vp(Rat::parse(x), Prime(p));
    if (v.is_infinite()) return std::nullopt;
    return v.value();
  });
}
