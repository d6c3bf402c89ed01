#include "bracelab/brace_io.hpp"
#include "bracelab/cli.hpp"
#include "bracelab/parametric.hpp"
#include "bracelab/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace bracelab;

namespace {

std::vector<std::vector<Element>> members(SeriesReport const& s)
{
	std::vector<std::vector<Element>> out;
	for (auto const& t : s.terms)
		out.push_back(t.members());
	return out;
}

SubsetMask mask(BraceTable const& b, std::vector<Element> const& xs)
{
	for (Element x : xs)
		if (!b.valid(x))
			throw UsageError("element " + std::to_string(x) + " out of range");
	return SubsetMask::of(b.order(), xs);
}

py::dict witness_dict(HomWitness const& w)
{
	py::dict d;
	d["source"] = w.source;
	d["is_additive"] = w.is_additive;
	d["is_multiplicative"] = w.is_multiplicative;
	d["is_surjective"] = w.is_surjective;
	d["is_epimorphism"] = w.is_epimorphism();
	d["kernel_size"] = w.kernel_size;
	d["image_size"] = w.image_size;
	d["failed_law"] = w.failed_law;
	d["counterexample"] = w.counterexample;
	d["mapping"] = w.mapping;
	return d;
}

py::dict epi_dict(EpiReport const& r)
{
	py::dict d;
	d["family"] = r.family;
	d["gate_passed"] = r.gate_passed;
	d["gate"] = r.gate_note;
	d["note"] = r.note;
	d["passed"] = r.passed();
	py::list attempts;
	for (auto const& a : r.attempts)
	{
		auto w = witness_dict(a.witness);
		w["generator"] = a.generator;
		attempts.append(w);
	}
	d["attempts"] = attempts;
	return d;
}

template <class Fn>
std::string capture(Fn&& fn)
{
	std::ostringstream out;
	fn(out);
	return out.str();
}

} // namespace

PYBIND11_MODULE(_bracelab, m)
{
	m.doc() = "Finite left braces: constructions, star series, identities, structure theorems, YBE.";

	py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
	py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
	py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
	py::register_exception<AxiomError>(m, "AxiomError", PyExc_ValueError);

	py::class_<BraceTable>(m, "Brace")
	    .def_static("from_tables",
	                [](std::size_t order, std::vector<Element> add, std::vector<Element> mul) {
		                return BraceTable::from_tables(order, std::move(add), std::move(mul));
	                },
	                py::arg("order"), py::arg("add"), py::arg("mul"),
	                "Row-major order x order tables; shape and range are checked, axioms are not.")
	    .def_property_readonly("order", &BraceTable::order)
	    .def_property_readonly("family", &BraceTable::family)
	    .def_property_readonly("description", &BraceTable::description)
	    .def_property_readonly("labels", &BraceTable::labels)
	    .def("label", &BraceTable::label)
	    .def("add", &BraceTable::add)
	    .def("mul", &BraceTable::mul)
	    .def("neg", &BraceTable::neg)
	    .def("inv", &BraceTable::inv)
	    .def("star", [](BraceTable const& b, Element x, Element y) { return star(b, x, y); })
	    .def("lam", [](BraceTable const& b, Element x, Element y) { return lambda_map(b, x, y); },
	         "lambda_x(y) = xy - x")
	    .def("add_table", [](BraceTable const& b) { return std::vector<Element>(b.add_table().begin(), b.add_table().end()); })
	    .def("mul_table", [](BraceTable const& b) { return std::vector<Element>(b.mul_table().begin(), b.mul_table().end()); })
	    .def("__len__", &BraceTable::order)
	    .def("__eq__", [](BraceTable const& l, BraceTable const& r) { return l == r; })
	    .def("__repr__", [](BraceTable const& b) {
		    return "<Brace order=" + std::to_string(b.order()) + " " + b.description() + ">";
	    });

	m.def("d12_quotient", [](std::uint32_t m, std::size_t max_order) { return d12_quotient(m, {max_order}); },
	      py::arg("modulus"), py::arg("max_order") = BuildLimits{}.max_order);
	m.def("d13_brace",
	      [](std::uint32_t n, bool literal, std::size_t max_order) {
		      return d13_brace(n, literal ? D13Variant::literal : D13Variant::reduced, {max_order});
	      },
	      py::arg("n"), py::arg("literal") = false, py::arg("max_order") = BuildLimits{}.max_order);
	m.def("trivial_brace", [](std::uint32_t n, std::size_t max_order) { return trivial_brace(n, {max_order}); },
	      py::arg("order"), py::arg("max_order") = BuildLimits{}.max_order);

	m.def("load_brace",
	      [](std::string const& path, bool unchecked) {
		      LoadOptions opt;
		      opt.unchecked = unchecked;
		      return load_brace(path, opt);
	      },
	      py::arg("path"), py::arg("unchecked") = false);
	m.def("save_brace", &save_brace, py::arg("path"), py::arg("brace"));
	m.def("dumps", [](BraceTable const& b) { return capture([&](std::ostream& o) { write_brace(o, b); }); });

	m.def("verify",
	      [](BraceTable const& b, std::uint64_t samples, std::uint64_t seed) {
		      VerifyOptions opt;
		      opt.samples = samples;
		      opt.seed = seed;
		      auto const r = verify_axioms(b, opt);
		      py::dict d;
		      d["passed"] = r.passed();
		      d["exhaustive"] = r.exhaustive;
		      py::list rows;
		      for (auto const& a : r.results)
			      rows.append(py::make_tuple(std::string(axiom_group(a.axiom)), std::string(axiom_name(a.axiom)),
			                                 a.passed, a.witness));
		      d["axioms"] = rows;
		      return d;
	      },
	      py::arg("brace"), py::arg("samples") = VerifyOptions{}.samples, py::arg("seed") = 0);

	m.def("left_series", [](BraceTable const& b) { return members(left_series(b)); });
	m.def("right_series", [](BraceTable const& b) { return members(right_series(b)); });
	m.def("upper_central_series", [](BraceTable const& b) { return members(upper_central_series(b)); });
	m.def("star_center", [](BraceTable const& b) { return star_center(b).members(); });
	m.def("zl", [](BraceTable const& b) { return zl(b); });
	m.def("smok_class", [](BraceTable const& b) { return smok_class(b).pair(); },
	      "(n, k) with A^(n) = 0 = A^k, or None");

	m.def("generated_subbrace", [](BraceTable const& b, std::vector<Element> const& xs) {
		return generated_subbrace(b, mask(b, xs).members()).members();
	});
	m.def("find_generators", &find_generators);
	m.def("is_ideal", [](BraceTable const& b, std::vector<Element> const& xs) { return is_ideal(b, mask(b, xs)).holds; });
	m.def("is_left_ideal",
	      [](BraceTable const& b, std::vector<Element> const& xs) { return is_left_ideal(b, mask(b, xs)).holds; });
	m.def("enumerate_ideals", [](BraceTable const& b) {
		std::vector<std::vector<Element>> out;
		for (auto const& i : enumerate_ideals(b))
			out.push_back(i.members());
		return out;
	});
	m.def("quotient", [](BraceTable const& b, std::vector<Element> const& ideal) {
		auto q = quotient(b, mask(b, ideal));
		return py::make_tuple(std::move(q.brace), std::move(q.projection));
	});

	m.def("canonical_data", [](BraceTable const& b, Element a) {
		auto const d = build_canonical(b, a);
		py::dict r;
		r["a"] = d.a;
		r["b"] = d.b;
		r["c1"] = d.c1;
		r["c2"] = d.c2;
		r["z"] = d.z;
		r["bb"] = d.bb;
		r["n"] = d.n;
		return r;
	});

	m.def("identities",
	      [](BraceTable const& b, std::string const& suite, std::uint64_t samples, std::uint64_t seed,
	         unsigned max_exponent) {
		      IdentityOptions opt;
		      opt.samples = samples;
		      opt.seed = seed;
		      opt.max_exponent = max_exponent;
		      auto const s = suite == "universal" ? IdentitySuite::universal
		                     : suite == "section4" ? IdentitySuite::section4
		                     : suite == "all"      ? IdentitySuite::all
		                                           : throw UsageError("unknown suite " + suite);
		      auto const r = run_identities(b, s, opt);
		      py::dict d;
		      d["passed"] = r.passed();
		      d["gate"] = r.gate;
		      py::list rows;
		      for (auto const& x : r.results)
		      {
			      py::dict row;
			      row["id"] = x.id;
			      row["passed"] = x.passed();
			      row["skipped"] = x.skipped;
			      row["exhaustive"] = x.exhaustive;
			      row["evaluated"] = x.evaluated;
			      row["failed"] = x.failed;
			      row["first_failure"] = x.first_failure;
			      rows.append(row);
		      }
		      d["results"] = rows;
		      return d;
	      },
	      py::arg("brace"), py::arg("suite") = "all", py::arg("samples") = IdentityOptions{}.samples,
	      py::arg("seed") = 0, py::arg("max_exponent") = IdentityOptions{}.max_exponent);

	m.def("epi",
	      [](BraceTable const& b, std::string const& family) {
		      auto const f = family == "d12"    ? EpiFamily::d12
		                     : family == "d13"  ? EpiFamily::d13
		                     : family == "auto" ? EpiFamily::automatic
		                                        : throw UsageError("unknown family " + family);
		      return epi_dict(epi_report(b, f));
	      },
	      py::arg("brace"), py::arg("family") = "auto");

	m.def("a2_check", [](BraceTable const& b) {
		auto const r = a2_abelian_check(b);
		py::dict d;
		d["gate_passed"] = r.gate_passed;
		d["gate"] = r.gate_note;
		d["abelian"] = r.abelian;
		d["equals_right"] = r.equals_right;
		d["passed"] = r.passed();
		d["left2"] = r.left2;
		d["right2"] = r.right2;
		return d;
	});

	m.def("classify", [](BraceTable const& b) {
		return capture([&](std::ostream& o) { print_classification_csv(o, classify_quotients(b)); });
	}, "Comma-separated classification records, one quotient per line.");

	m.def("r_map", [](BraceTable const& b, Element x, Element y) { return r_map(b, x, y); });
	m.def("ybe",
	      [](BraceTable const& b, std::optional<std::uint64_t> samples, std::uint64_t seed) {
		      YbeOptions opt;
		      opt.samples = samples;
		      opt.seed = seed;
		      auto const inv = check_involutive(b);
		      auto const braid = check_braid(b, opt);
		      py::dict d;
		      d["involutive"] = inv.passed;
		      d["braid"] = braid.passed;
		      d["braid_exhaustive"] = braid.exhaustive;
		      d["witness"] = inv.passed ? braid.witness : inv.witness;
		      return d;
	      },
	      py::arg("brace"), py::arg("samples") = std::nullopt, py::arg("seed") = 0);

	m.def("run_cli",
	      [](std::vector<std::string> const& args) {
		      std::ostringstream out, err;
		      int const code = run_cli(args, out, err);
		      return py::make_tuple(code, out.str(), err.str());
	      },
	      py::arg("args"), "Run the command line in-process; returns (exit code, stdout, stderr).");
}
