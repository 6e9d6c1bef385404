#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pnrd/cli.hpp"
#include "pnrd/errors.hpp"
#include "pnrd/oracle.hpp"
#include "pnrd/regularity.hpp"

namespace py = pybind11;
using namespace pnrd;

namespace {

std::vector<std::string> to_strings(const RationalPolynomial& p) {
  std::vector<std::string> out;
  for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).str());
  return out;
}

RationalPolynomial from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) c.push_back(Rational::parse(s));
  return RationalPolynomial(std::move(c));
}

oracle::SymMatrix sym_from(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> v;
    for (const auto& s : row) v.push_back(Rational::parse(s));
    r.push_back(std::move(v));
  }
  return oracle::SymMatrix::from_rows(r);
}

py::dict profile_dict(const RootProfile& p) {
  py::dict d;
  d["positive"] = p.positive;
  d["zero"] = p.zero;
  d["negative"] = p.negative;
  return d;
}

/// A parsed input document; classes are addressed by name.
class Session {
 public:
  explicit Session(const std::string& text) : doc_(cli::load_document(cli::Json::parse(text))) {}

  int dimension() const { return doc_.ctx.dimension(); }
  std::vector<std::string> class_names() const {
    std::vector<std::string> out;
    for (const auto& c : doc_.classes) out.push_back(c.name);
    return out;
  }

  std::string euler_char(const std::string& name) const { return pnrd::euler_char(doc_.ctx, get(name)).str(); }

  py::dict hilbert(const std::string& name) const {
    const HilbertData h = pnrd_pencil(doc_.ctx, get(name));
    py::dict d;
    d["q"] = to_strings(h.q);
    d["hilbert"] = to_strings(h.scaled);
    d["profile"] = profile_dict(h.profile);
    return d;
  }

  py::dict classify(const std::string& name) const {
    const Classification c = pnrd::classify(doc_.ctx, get(name));
    py::dict d;
    d["label"] = c.label;
    d["chi"] = c.chi.str();
    d["i"] = c.index_i;
    d["dimK"] = c.dim_k;
    d["j"] = c.weak_index_j;
    return d;
  }

  long reg_cont(const std::string& name, int rank) const {
    if (rank > 0) return reg_cont_bundle(doc_.ctx, BundleClass::make(get(name), rank)).m;
    return pnrd::reg_cont(doc_.ctx, get(name)).m;
  }

 private:
  const SymmetricClass& get(const std::string& name) const {
    const auto* c = doc_.find(name);
    if (!c) throw py::key_error(name);
    return c->cls;
  }

  cli::Document doc_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact reduced-norm polynomials, indices and continuous regularity";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("root_profile", [](const std::vector<std::string>& coeffs) { return profile_dict(sturm_root_profile(from_strings(coeffs))); },
        py::arg("coefficients"), "Positive / zero / negative root counts of an ascending coefficient list.");
  m.def(
      "poly_sqrt",
      [](const std::vector<std::string>& coeffs) -> std::optional<std::vector<std::string>> {
        const auto r = exact_sqrt(from_strings(coeffs));
        if (!r) return std::nullopt;
        return to_strings(*r);
      },
      py::arg("coefficients"));

  m.def("oracle_chi", [](const std::vector<std::vector<std::string>>& rows) { return oracle::oracle_chi(sym_from(rows)).str(); });
  m.def("oracle_inertia", [](const std::vector<std::vector<std::string>>& rows) {
    const auto in = oracle::oracle_inertia(sym_from(rows));
    return py::make_tuple(in.plus, in.zero, in.minus);
  });
  m.def("oracle_regcont", [](const std::vector<std::vector<std::string>>& rows, long lo, long hi) {
    return oracle::oracle_regcont(sym_from(rows), lo, hi);
  });

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = cli::run(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Runs a command line; returns (status, stdout, stderr).");

  py::class_<Session>(m, "Document")
      .def(py::init<const std::string&>(), py::arg("json_text"))
      .def_property_readonly("g", &Session::dimension)
      .def_property_readonly("classes", &Session::class_names)
      .def("euler_char", &Session::euler_char)
      .def("hilbert", &Session::hilbert)
      .def("classify", &Session::classify)
      .def("reg_cont", &Session::reg_cont, py::arg("name"), py::arg("rank") = 0);
}
