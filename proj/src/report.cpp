#include "bracelab/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace bracelab {

namespace {

bool labelled(BraceTable const& b)
{
	return !b.labels().empty();
}

std::string opt_string(std::optional<std::size_t> v)
{
	return v ? std::to_string(*v) : "none";
}

std::string pair_string(std::optional<std::pair<std::size_t, std::size_t>> p)
{
	return p ? "(" + std::to_string(p->first) + "," + std::to_string(p->second) + ")" : "none";
}

char const* verdict(bool ok)
{
	return ok ? "pass" : "FAIL";
}

} // namespace

void print_header(std::ostream& out, BraceTable const& b)
{
	out << "brace: " << b.description() << "\n";
	if (!b.family().empty())
		out << "family: " << b.family() << "\n";
	out << "order: " << b.order() << "\n";
}

std::string format_element(BraceTable const& b, Element x)
{
	std::string s = std::to_string(x);
	if (labelled(b))
		s += " " + b.label(x);
	return s;
}

std::string format_tuple(BraceTable const& b, std::vector<Element> const& xs)
{
	std::string s = "(";
	for (std::size_t i = 0; i < xs.size(); ++i)
		s += (i ? ", " : "") + std::to_string(xs[i]);
	s += ")";
	if (labelled(b))
	{
		s += " = (";
		for (std::size_t i = 0; i < xs.size(); ++i)
			s += (i ? ", " : "") + b.label(xs[i]);
		s += ")";
	}
	return s;
}

void print_subset(std::ostream& out, BraceTable const& b, SubsetMask const& s, std::string_view indent)
{
	if (b.order() > membership_print_limit)
		return;
	out << indent << "indices {";
	bool first = true;
	for (Element x : s.members())
	{
		out << (first ? "" : ", ") << x;
		first = false;
	}
	out << "}\n";
	if (labelled(b))
		out << indent << "elements " << format_subset(b, s) << "\n";
}

void print_axioms(std::ostream& out, BraceTable const& b, AxiomReport const& r)
{
	print_header(out, b);
	if (r.exhaustive)
		out << "mode: exhaustive\n";
	else
		out << "seed: " << r.seed << "\nmode: sampled (" << r.samples << " tuples per cubic axiom)\n";
	for (auto const& a : r.results)
	{
		out << axiom_group(a.axiom) << " " << std::left << std::setw(39) << axiom_name(a.axiom) << " ";
		if (!a.evaluated)
			out << "not checked (prerequisite failed)\n";
		else if (a.passed)
			out << "pass\n";
		else
			out << "FAIL witness " << format_tuple(b, a.witness) << "\n";
	}
	out << "result: " << verdict(r.passed()) << "\n";
}

void print_series(std::ostream& out, BraceTable const& b, SeriesReport const& s)
{
	auto const name = [&](std::size_t i) {
		switch (s.kind)
		{
		case SeriesKind::left: return "A^" + std::to_string(i);
		case SeriesKind::right: return "A^(" + std::to_string(i) + ")";
		case SeriesKind::upper_central: return "zeta_" + std::to_string(i);
		}
		return std::string();
	};
	out << "series: " << series_name(s.kind) << "\n";
	for (std::size_t i = 0; i < s.terms.size(); ++i)
	{
		out << name(s.first_index() + i) << " size " << s.terms[i].size() << "\n";
		print_subset(out, b, s.terms[i], "    ");
	}
	out << "stabilized at: " << s.stabilized_at << "\n";
	out << "reaches: " << (s.reached_zero ? "zero" : s.reached_whole ? "whole brace" : "proper nonzero subset")
	    << "\n";
}

void print_center(std::ostream& out, BraceTable const& b, SubsetMask const& c)
{
	print_header(out, b);
	out << "star-center size " << c.size() << "\n";
	print_subset(out, b, c);
}

void print_nilpotency(std::ostream& out, BraceTable const& b)
{
	print_header(out, b);
	auto const left = left_series(b), right = right_series(b), upper = upper_central_series(b);
	for (auto const* s : {&left, &right, &upper})
		print_series(out, b, *s);
	auto const smok = smok_class(left, right);
	out << "left nilpotent: " << (smok.left ? "yes, A^" + std::to_string(*smok.left) + " = 0" : "no") << "\n";
	out << "right nilpotent: " << (smok.right ? "yes, A^(" + std::to_string(*smok.right) + ") = 0" : "no")
	    << "\n";
	out << "smok class N_S(n,k): " << pair_string(smok.pair()) << "\n";
	out << "zl: " << opt_string(zl(upper)) << "\n";
}

void print_identities(std::ostream& out, BraceTable const& b, IdentityReport const& r)
{
	print_header(out, b);
	bool sampled = false;
	for (auto const& x : r.results)
		sampled |= !x.skipped && !x.exhaustive;
	if (sampled)
		out << "seed: " << r.seed << "\n";
	out << "gate: " << r.gate << "\n";
	for (auto const& x : r.results)
	{
		out << std::left << std::setw(10) << x.id << " ";
		if (x.skipped)
		{
			out << "skipped (" << x.note << ")\n";
			continue;
		}
		out << verdict(x.passed()) << "  " << x.evaluated << (x.exhaustive ? " exhaustive" : " sampled");
		if (!x.passed())
		{
			out << "  failures " << x.failed << "  first " << format_tuple(b, x.first_failure);
			if (!x.first_failure_params.empty())
			{
				out << " params";
				for (auto p : x.first_failure_params)
					out << " " << p;
			}
		}
		out << "\n";
	}
	out << "result: " << verdict(r.passed()) << "\n";
}

void print_epi(std::ostream& out, BraceTable const& b, EpiReport const& r)
{
	print_header(out, b);
	out << "source family: " << r.family << "\n";
	out << "gate: " << r.gate_note << "\n";
	if (!r.gate_passed)
		return;
	if (!r.note.empty())
		out << "note: " << r.note << "\n";
	for (auto const& a : r.attempts)
	{
		auto const& w = a.witness;
		out << "generator " << format_element(b, a.generator) << "\n";
		out << "  source: " << w.source << "\n";
		out << "  additive " << verdict(w.is_additive) << ", multiplicative " << verdict(w.is_multiplicative)
		    << ", surjective " << verdict(w.is_surjective) << "\n";
		out << "  image size " << w.image_size << ", kernel size " << w.kernel_size << "\n";
		if (!w.failed_law.empty())
		{
			out << "  failed law: " << w.failed_law;
			if (!w.counterexample.empty())
			{
				out << " at (";
				for (std::size_t i = 0; i < w.counterexample.size(); ++i)
					out << (i ? ", " : "") << w.counterexample[i];
				out << ")";
			}
			out << "\n";
		}
	}
	out << "result: " << (r.passed() ? "epimorphism" : "FAIL") << "\n";
}

void print_a2(std::ostream& out, BraceTable const& b, A2Report const& r)
{
	print_header(out, b);
	out << "gate: " << r.gate_note << "\n";
	out << "A^2 size " << r.left2.size() << ", A^(2) size " << r.right2.size() << "\n";
	out << "A^2 = A^(2): " << (r.equals_right ? "yes" : "no") << "\n";
	out << "A^2 abelian: " << (r.abelian ? "yes" : "no");
	if (!r.abelian)
		out << "  witness " << format_tuple(b, r.witness);
	out << "\n";
	if (r.gate_passed)
		out << "result: " << verdict(r.passed()) << "\n";
}

void print_classification(std::ostream& out, BraceTable const& b, Classification const& c)
{
	print_header(out, b);
	out << "ideals: " << c.rows.size() << "\n";
	out << std::right;
	out << std::setw(6) << "ideal" << std::setw(9) << "quotient" << std::setw(6) << "1gen" << std::setw(9)
	    << "abelian" << std::setw(5) << "zl" << std::setw(9) << "smok" << std::setw(8) << "epi12"
	    << std::setw(8) << "epi13" << std::setw(6) << "a2" << "\n";
	for (auto const& r : c.rows)
		out << std::setw(6) << r.ideal_size << std::setw(9) << r.quotient_order << std::setw(6)
		    << (r.one_generator ? "yes" : "no") << std::setw(9) << (r.abelian ? "yes" : "no") << std::setw(5)
		    << opt_string(r.zl) << std::setw(9) << pair_string(r.smok) << std::setw(8)
		    << outcome_name(r.epi_d12) << std::setw(8) << outcome_name(r.epi_d13) << std::setw(6)
		    << outcome_name(r.a2) << "\n";
	out << std::left << "result: " << verdict(c.passed()) << "\n";
}

void print_classification_csv(std::ostream& out, Classification const& c)
{
	out << "ideal_size,quotient_order,one_generator,abelian,zl,smok_n,smok_k,epi_d12,epi_d13,a2\n";
	for (auto const& r : c.rows)
	{
		out << r.ideal_size << "," << r.quotient_order << "," << r.one_generator << "," << r.abelian << ","
		    << (r.zl ? std::to_string(*r.zl) : "") << ",";
		if (r.smok)
			out << r.smok->first << "," << r.smok->second;
		else
			out << ",";
		out << "," << outcome_name(r.epi_d12) << "," << outcome_name(r.epi_d13) << "," << outcome_name(r.a2)
		    << "\n";
	}
}

void print_ybe(std::ostream& out, BraceTable const& b, YbeCheck const& inv, YbeCheck const& braid,
               YbeOptions const& opt)
{
	print_header(out, b);
	if (!braid.exhaustive)
		out << "seed: " << opt.seed << "\n";
	out << "r(x,y) = (lambda_x(y), lambda_x(y)^-1 x y)\n";
	out << "involutive: " << verdict(inv.passed) << "  " << inv.evaluated << " pairs";
	if (!inv.passed)
		out << "  witness " << format_tuple(b, inv.witness);
	out << "\n";
	out << "braid: " << verdict(braid.passed) << "  " << braid.evaluated
	    << (braid.exhaustive ? " triples exhaustive" : " triples sampled");
	if (!braid.passed)
		out << "  witness " << format_tuple(b, braid.witness);
	out << "\n";
	out << "result: " << verdict(inv.passed && braid.passed) << "\n";
}

} // namespace bracelab
