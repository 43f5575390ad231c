#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "selfshuffle/checkers.hpp"
#include "selfshuffle/cli.hpp"
#include "selfshuffle/constructive.hpp"
#include "selfshuffle/io.hpp"

namespace py = pybind11;
using namespace selfshuffle;

namespace {

std::string steering_of(const ShuffleWitness& w, std::size_t n) { return steering_string(w.steering.letters(n)); }

ShuffleWitness named_witness(const std::string& kind) {
  if (kind == "tm") return tm_shuffle();
  if (kind == "fibonacci") return fibonacci_shuffle();
  if (kind == "period-doubling") return period_doubling_shuffle();
  if (kind == "full-complexity") return full_complexity_shuffle();
  if (kind == "three") return three_shuffle_example();
  throw ParseError("unknown witness kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_selfshuffle, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("word", [](const std::string& spec, std::size_t n) { return parse_word_spec(spec).to_string(n); },
        py::arg("spec"), py::arg("length"));

  m.def("search", [](const std::string& spec, std::size_t k, std::size_t depth) {
    auto out = search_self_shuffle(parse_word_spec(spec), k, depth);
    py::dict d;
    d["outcome"] = out.kind_name();
    d["level"] = out.level;
    d["bound"] = out.bound;
    if (out.kind == SearchOutcome::Kind::dead) d["death"] = out.death_name();
    if (out.kind == SearchOutcome::Kind::witness) d["steering"] = steering_string(out.steering);
    return d;
  }, py::arg("spec"), py::arg("k") = 2, py::arg("depth") = 10000);

  m.def("verify", [](const std::string& spec, const std::string& steering, std::size_t k) {
    auto x = parse_word_spec(spec);
    auto rep = verify_shuffle(x, std::vector<InfiniteWord>(k, x), parse_steering(steering, k), steering.size());
    return rep.ok;
  }, py::arg("spec"), py::arg("steering"), py::arg("k") = 2);

  m.def("witness_steering", [](const std::string& kind, std::size_t n) { return steering_of(named_witness(kind), n); },
        py::arg("kind"), py::arg("length"));

  m.def("sturmian_steering", [](const std::string& alpha, const std::string& rho, std::size_t n) {
    QuadExt r = QuadExt::parse(rho);
    return steering_of(sturmian_shuffle(QuadExt::parse(alpha), r, r, r), n);
  }, py::arg("alpha"), py::arg("rho"), py::arg("length"));

  m.def("abelian_borders", [](const std::string& u) { return abelian_borders(FiniteWord::parse(u)).borders; });

  m.def("shuffling_delay", [](const std::string& alpha, const std::string& rho, std::size_t horizon) {
    return shuffling_delay_sturmian(QuadExt::parse(alpha), QuadExt::parse(rho), horizon).delay;
  }, py::arg("alpha"), py::arg("rho"), py::arg("horizon") = 4000);

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
