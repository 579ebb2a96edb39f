#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "efdkit/canonical.hpp"
#include "efdkit/cli.hpp"
#include "efdkit/errors.hpp"
#include "efdkit/json.hpp"
#include "efdkit/lattice.hpp"
#include "efdkit/models.hpp"
#include "efdkit/selftest.hpp"
#include "efdkit/syntax.hpp"
#include "efdkit/translate.hpp"

namespace py = pybind11;
using namespace efdkit;

namespace {

// Structured results cross the boundary as JSON text; the Python package decodes them.
std::string dump(const Json& j) { return j.dump(); }

Signature sig_of(const std::string& s) { return signature_from_string(s); }

}  // namespace

PYBIND11_MODULE(_efdkit, m) {
  m.doc() = "Exact canonicalization and classification of EFD-sentences";

  auto base = py::register_exception<Error>(m, "EfdkitError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<SignatureError>(m, "SignatureError", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  auto fragment = py::register_exception<FragmentError>(m, "FragmentError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", fragment.ptr());
  py::register_exception<UniverseError>(m, "UniverseError", base.ptr());
  py::register_exception<FamilyMismatch>(m, "FamilyMismatch", base.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", base.ptr());

  m.attr("DEFAULT_SEED") = kDefaultSeed;
  m.attr("DEFAULT_CAP") = kDefaultPermutationCap;

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"efdkit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command line in-process; returns (exit_code, stdout, stderr).");

  m.def("parse_term", [](const std::string& text, const std::string& sig) {
    return dump(to_json(parse_term(text, sig_of(sig))));
  }, py::arg("text"), py::arg("sig") = "group");

  m.def("print_term", [](const std::string& text, const std::string& sig) {
    return print_term(parse_term(text, sig_of(sig)));
  }, py::arg("text"), py::arg("sig") = "group");

  m.def("parse_sentence", [](const std::string& text, const std::string& sig) {
    return dump(to_json(parse_sentence(text, sig_of(sig))));
  }, py::arg("text"), py::arg("sig") = "group");

  m.def("canon", [](const std::string& term, std::size_t cap, std::size_t n) {
    return dump(to_json(piecewise_canonical(distribute_to_lattice_normal(parse_term(term, Signature::Group), n), cap)));
  }, py::arg("term"), py::arg("cap") = kDefaultPermutationCap, py::arg("n") = 0);

  m.def("reduce", [](std::int64_t k, const std::string& term, std::size_t cap) {
    DeltaKT d{k, parse_term(term, Signature::Group)};
    d.validate();
    return reduce_delta_kt(d, cap);
  }, py::arg("k"), py::arg("term"), py::arg("cap") = kDefaultPermutationCap);

  m.def("classify", [](const std::vector<std::string>& sentences, const std::string& sig, std::size_t cap) {
    const Signature s = sig_of(sig);
    std::vector<EFDSentence> ss;
    for (const auto& t : sentences) ss.push_back(parse_sentence(t, s));
    if (s == Signature::Group) return dump(to_json(classify_group_sentences_detailed(ss, cap).cls));
    if (s == Signature::MV) return dump(to_json(classify_mv_sentences_detailed(ss, cap)));
    throw FragmentError("classification is available for group and mv sentences");
  }, py::arg("sentences"), py::arg("sig") = "group", py::arg("cap") = kDefaultPermutationCap);

  m.def("delta", [](std::int64_t k, const std::string& sig) { return print_sentence(build_delta_k(k, sig_of(sig))); },
        py::arg("k"), py::arg("sig") = "group");
  m.def("epsilon", [](std::int64_t k) { return print_sentence(build_epsilon_k(k)); }, py::arg("k"));

  m.def("star_term", [](const std::string& term) { return print_term(star_term(parse_term(term, Signature::Hoop))); },
        py::arg("term"));

  m.def("check_in_two", [](const std::string& sentence) {
    return dump(to_json(check_in_two(parse_sentence(sentence, Signature::MV))));
  }, py::arg("sentence"));

  m.def("fulldim", [](const std::vector<std::vector<std::int64_t>>& rows, std::size_t n) {
    IneqSystem s;
    s.n = n;
    for (const auto& r : rows) s.rows.emplace_back(r);
    s.validate();
    return dump(to_json(is_full_dimensional(s)));
  }, py::arg("rows"), py::arg("n"));

  m.def("eval", [](const std::string& model, const std::string& term, const std::map<std::string, std::string>& env,
                   const std::string& sig) {
    const Algebra a = Algebra::parse(model);
    const Signature s = sig.empty() ? a.species() : sig_of(sig);
    Assignment assign;
    for (const auto& [name, value] : env) {
      const Term v = parse_term(name, s);
      if (v.op() != Op::Var) throw InvalidArgument("not a variable: " + name);
      assign[v.variable()] = parse_element(value);
    }
    return to_string(eval(a, parse_term(term, s), assign));
  }, py::arg("model"), py::arg("term"), py::arg("env") = std::map<std::string, std::string>{}, py::arg("sig") = "");

  m.def("check", [](const std::string& model, const std::string& sentence, std::size_t budget, std::uint64_t seed,
                    const std::string& sig) {
    const Algebra a = Algebra::parse(model);
    const Signature s = sig.empty() ? a.species() : sig_of(sig);
    return dump(to_json(check_sentence_sampled(a, parse_sentence(sentence, s), budget, seed)));
  }, py::arg("model"), py::arg("sentence"), py::arg("budget") = 500, py::arg("seed") = kDefaultSeed,
        py::arg("sig") = "");

  m.def("selftest", [](const std::string& suite, std::uint64_t seed, std::size_t budget) {
    return dump(to_json(run_suite(suite, seed, budget)));
  }, py::arg("suite"), py::arg("seed") = kDefaultSeed, py::arg("budget") = 0);

  m.def("suite_names", &suite_names);
}
