// Thin pybind11 layer. Structured values cross the boundary as JSON text and
// are decoded by the pure-Python wrapper in lilrs/__init__.py.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lilrs/sim/experiment.hpp"
#include "lilrs/sim/stats.hpp"

namespace py = pybind11;
using namespace lilrs;
using namespace lilrs::sim;

namespace {

Json optional_json(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json row_json(const SweepRow& r) {
  Json j{{"gamma", r.gamma},       {"delta", r.delta},   {"trials", r.trials},
         {"failures", r.failures}, {"rate", r.rate},     {"strict_bound", optional_json(r.strict_bound)},
         {"heuristic_bound", optional_json(r.heuristic_bound)}, {"ci_low", r.ci_low}, {"ci_high", r.ci_high}};
  if (r.error) j["error"] = *r.error;
  return j;
}

SubspaceTuple tuple_from_json(const CodeSpec& spec, const Json& shots) {
  SubspaceTuple t;
  for (const auto& v : shots) t.shots.push_back(subspace_from_json(spec.field().q(), v));
  return t;
}

Json tuple_json(const SubspaceTuple& t) {
  Json out = Json::array();
  for (const auto& v : t.shots) out.push_back(to_json(v));
  return out;
}

class Session {
 public:
  explicit Session(const std::string& yaml) : cfg_(parse_config(yaml)), spec_(build_code(cfg_)) {}

  std::string config() const { return dump_config(cfg_); }
  std::string summary() const {
    Json j = spec_summary(spec_);
    const CodeMetrics cm = code_metrics(spec_);
    j["min_distance"] = cm.min_distance;
    j["rate"] = cm.rate;
    j["dual_rate"] = cm.dual_rate;
    return j.dump();
  }

  std::string random_message(std::uint64_t seed) const {
    Rng rng(seed);
    return to_json(lilrs::random_message(spec_, rng)).dump();
  }
  std::string message_from_index(std::uint64_t index) const {
    return to_json(lilrs::message_from_index(spec_, index)).dump();
  }

  std::string encode(const std::string& message) const {
    const MessageVector f = message_from_json(spec_, Json::parse(message));
    return Json{{"lifted", to_json(spec_, encode_lifted(spec_, f))}, {"subspaces", tuple_json(lilrs::encode(spec_, f))}}
        .dump();
  }

  // Sends encode(f), or its complement when `dual` is set, through the channel.
  std::string transmit(const std::string& message, std::size_t gamma, std::size_t delta, std::uint64_t seed,
                       bool dual) const {
    const MessageVector f = message_from_json(spec_, Json::parse(message));
    SubspaceTuple sent = lilrs::encode(spec_, f);
    if (dual) sent = complement(sent);
    Rng rng(seed);
    const ChannelOutput out = lilrs::transmit(sent, {gamma, delta}, rng);
    Json j{{"subspaces", tuple_json(out.received)}, {"realization", to_json(out.realization)}};
    if (!dual) j["lifted"] = to_json(spec_, to_lifted(spec_, out.received));
    return j.dump();
  }

  // `received` is a list of subspaces.
  std::string decode(const std::string& received, const std::string& decoder) const {
    const SubspaceTuple rx = tuple_from_json(spec_, Json::parse(received));
    const DecoderKind kind = parse_decoder(decoder);
    py::gil_scoped_release nogil;
    if (kind == DecoderKind::Complementary) {
      const ComplementaryResult res = complementary_decode(spec_, rx);
      Json j = to_json(res.outcome);
      if (res.dual_codeword) j["dual_codeword"] = tuple_json(*res.dual_codeword);
      return j.dump();
    }
    const LiftedWord rw = to_lifted(spec_, rx);
    switch (kind) {
      case DecoderKind::Lo: return to_json(lo_decode(spec_, rw)).dump();
      case DecoderKind::List: return to_json(list_decode(spec_, rw, RootFindingOptions{cfg_.max_list})).dump();
      default: return to_json(unique_decode(spec_, rw)).dump();
    }
  }

  std::pair<std::optional<double>, std::optional<double>> bounds(std::size_t gamma, std::size_t delta,
                                                                 const std::string& decoder) const {
    const DecoderKind kind = parse_decoder(decoder);
    return {strict_bound_for(spec_, kind, gamma, delta), heuristic_bound_for(spec_, kind, gamma, delta)};
  }

  std::string simulate() const {
    std::vector<SweepRow> rows;
    {
      py::gil_scoped_release nogil;
      rows = sim::simulate(cfg_, spec_);
    }
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(row_json(r));
    return out.dump();
  }

  std::string roundtrip() const {
    py::gil_scoped_release nogil;
    return to_json(sim::roundtrip(cfg_, spec_)).dump();
  }
  std::string exhaustive() const {
    py::gil_scoped_release nogil;
    return to_json(sim::exhaustive(cfg_, spec_)).dump();
  }

 private:
  ExperimentConfig cfg_;
  CodeSpec spec_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "lifted interleaved linearized Reed-Solomon codes";
  py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);

  py::class_<Session>(m, "Session")
      .def(py::init<const std::string&>(), py::arg("config_yaml"))
      .def("config", &Session::config)
      .def("summary", &Session::summary)
      .def("random_message", &Session::random_message, py::arg("seed"))
      .def("message_from_index", &Session::message_from_index, py::arg("index"))
      .def("encode", &Session::encode, py::arg("message"))
      .def("transmit", &Session::transmit, py::arg("message"), py::arg("gamma"), py::arg("delta"), py::arg("seed"),
           py::arg("dual") = false)
      .def("decode", &Session::decode, py::arg("received"), py::arg("decoder"))
      .def("bounds", &Session::bounds, py::arg("gamma"), py::arg("delta"), py::arg("decoder") = "unique")
      .def("simulate", &Session::simulate)
      .def("roundtrip", &Session::roundtrip)
      .def("exhaustive", &Session::exhaustive);

  m.def("gaussian_binomial",
        [](unsigned N, unsigned l, unsigned q) {
          std::ostringstream os;
          os << gaussian_binomial(N, l, q);
          return py::int_(py::str(os.str()));
        },
        py::arg("N"), py::arg("l"), py::arg("q"));
  m.def("kappa", [](unsigned q) { return kappa(q); }, py::arg("q"));
  m.def("clopper_pearson",
        [](std::uint64_t failures, std::uint64_t trials, double conf) {
          const Interval iv = clopper_pearson(failures, trials, conf);
          return std::make_pair(iv.low, iv.high);
        },
        py::arg("failures"), py::arg("trials"), py::arg("confidence") = 0.95);
}
