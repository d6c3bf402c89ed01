#include "bracelab/theorems.hpp"
#include "bracelab/parallel.hpp"
#include "bracelab/parametric.hpp"

#include <algorithm>

namespace bracelab {

std::vector<Element> find_generators(BraceTable const& b)
{
	auto const flags = map_chunks<std::vector<Element>>(b.order(), 8, [&](std::uint64_t lo, std::uint64_t hi) {
		std::vector<Element> found;
		for (auto x = static_cast<Element>(lo); x < hi; ++x)
			if (is_generator(b, x))
				found.push_back(x);
		return found;
	});
	std::vector<Element> out;
	for (auto const& f : flags)
		out.insert(out.end(), f.begin(), f.end());
	return out;
}

std::optional<Element> first_generator(BraceTable const& b)
{
	auto const g = find_first(b.order(), [&](std::uint64_t x) { return is_generator(b, static_cast<Element>(x)); }, 8);
	if (!g)
		return std::nullopt;
	return static_cast<Element>(*g);
}

CanonicalData build_canonical(BraceTable const& b, Element a)
{
	if (!b.valid(a))
		throw UsageError("element " + std::to_string(a) + " out of range");
	if (!is_generator(b, a))
		throw UsageError("element " + b.label(a) + " does not generate the brace");
	CanonicalData d;
	d.a = a;
	d.b = star(b, a, a);
	d.c1 = star(b, a, d.b);
	d.c2 = star(b, d.b, a);
	d.z = sub(b, d.c2, d.c1);
	d.bb = star(b, d.b, d.b);
	d.n = additive_order(b, a);
	return d;
}

std::optional<std::string> canonical_violation(BraceTable const& b, CanonicalData const& d,
                                               SeriesReport const& upper)
{
	if (upper.kind != SeriesKind::upper_central)
		throw UsageError("canonical_violation needs the upper central series");
	if (upper.term(3).is_whole())
	{
		if (!upper.term(2).contains(d.b))
			return "b not in zeta_2";
		auto const& z1 = upper.term(1);
		if (!z1.contains(d.c1))
			return "c1 not in zeta_1";
		if (!z1.contains(d.c2))
			return "c2 not in zeta_1";
		if (!z1.contains(d.z))
			return "z not in zeta_1";
	}
	std::pair<char const*, Element> const killed[] = {{"b", d.b}, {"c1", d.c1}, {"c2", d.c2}, {"b*b", d.bb}};
	for (auto [name, e] : killed)
		if (times(b, Integer(d.n), e) != b.zero())
			return std::string("n ") + name + " != 0";
	return std::nullopt;
}

HomWitness check_homomorphism(BraceTable const& src, BraceTable const& dst, std::vector<Element> mapping)
{
	if (mapping.size() != src.order())
		throw UsageError("mapping size differs from source order");
	for (Element v : mapping)
		if (!dst.valid(v))
			throw UsageError("mapping value out of range");

	HomWitness w;
	w.source = src.description();
	w.target = dst.description();
	w.mapping = std::move(mapping);
	auto const& f = w.mapping;
	std::uint64_t const n = src.order();

	auto first_break = [&](auto law) {
		return find_first(n * n, [&](std::uint64_t p) {
			auto const x = static_cast<Element>(p / n), y = static_cast<Element>(p % n);
			return !law(x, y);
		}, 4096);
	};
	auto const add_bad = first_break([&](Element x, Element y) { return f[src.add(x, y)] == dst.add(f[x], f[y]); });
	auto const mul_bad = first_break([&](Element x, Element y) { return f[src.mul(x, y)] == dst.mul(f[x], f[y]); });
	w.is_additive = !add_bad;
	w.is_multiplicative = !mul_bad;

	std::vector<bool> hit(dst.order());
	for (Element x = 0; x < n; ++x)
	{
		hit[f[x]] = true;
		w.kernel_size += f[x] == dst.zero();
	}
	w.image_size = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
	w.is_surjective = w.image_size == dst.order();

	auto pair = [n](std::uint64_t p) { return std::vector<Element>{static_cast<Element>(p / n), static_cast<Element>(p % n)}; };
	if (add_bad)
	{
		w.failed_law = "f(x + y) = f(x) + f(y)";
		w.counterexample = pair(*add_bad);
	}
	else if (mul_bad)
	{
		w.failed_law = "f(xy) = f(x) f(y)";
		w.counterexample = pair(*mul_bad);
	}
	else if (!w.is_surjective)
		w.failed_law = "surjectivity";
	return w;
}

bool EpiReport::passed() const
{
	return witness() != nullptr;
}

HomWitness const* EpiReport::witness() const
{
	if (!gate_passed)
		return nullptr;
	for (auto const& a : attempts)
		if (a.witness.is_epimorphism())
			return &a.witness;
	return nullptr;
}

namespace {

// 0, e, 2e, ..., (count - 1)e.
std::vector<Element> multiples(BraceTable const& b, Element e, std::size_t count)
{
	std::vector<Element> out(count);
	for (std::size_t k = 1; k < count; ++k)
		out[k] = b.add(out[k - 1], e);
	return out;
}

// Non-abelian and one-generator; empty on success.
std::string base_gate(BraceTable const& b, std::optional<Element>& gen)
{
	if (is_trivial_brace(b))
		return "brace is abelian";
	gen = first_generator(b);
	if (!gen)
		return "not one-generator";
	return {};
}

// Tries each generator from the first one on until an attempt passes.
template <class Attempt>
void attempt_generators(BraceTable const& b, Element first, EpiReport& rep, Attempt&& attempt)
{
	for (Element a = first; a < b.order(); ++a)
	{
		if (a != first && !is_generator(b, a))
			continue;
		rep.attempts.push_back({a, attempt(a)});
		if (rep.attempts.back().witness.is_epimorphism())
			return;
	}
}

} // namespace

EpiReport epi_from_d12(BraceTable const& b)
{
	EpiReport rep;
	rep.family = "d12";
	std::optional<Element> gen;
	rep.gate_note = base_gate(b, gen);
	if (rep.gate_note.empty())
	{
		auto const length = zl(b);
		if (length != 2u)
			rep.gate_note = length ? "zl = " + std::to_string(*length) : "not star-hypercentral";
	}
	if (!rep.gate_note.empty())
	{
		rep.gate_note = "hypotheses unmet: " + rep.gate_note;
		return rep;
	}
	rep.gate_passed = true;
	rep.gate_note = "non-abelian, one-generator, zl = 2";

	auto const m = additive_exponent(b);
	if (m > std::numeric_limits<std::uint32_t>::max())
		throw ResourceError("additive exponent too large");
	D12Quotient const family(static_cast<std::uint32_t>(m));
	auto const source = family.materialize({std::max<std::size_t>(family.order(), BuildLimits{}.max_order)});
	rep.note = "D(1,2) is infinite; f is checked on D(1,2) mod " + std::to_string(m) +
	           " (m = additive exponent of the target), through which it factors since m a = m c = 0";

	attempt_generators(b, *gen, rep, [&](Element a) {
		Element const c = star(b, a, a);
		auto const A = multiples(b, a, m), C = multiples(b, c, m);
		std::vector<Element> f(source.order());
		for (Element i = 0; i < f.size(); ++i)
		{
			auto const x = family.decode(i);
			f[i] = b.add(A[x.m1], C[x.m2]);
		}
		return check_homomorphism(source, b, std::move(f));
	});
	return rep;
}

EpiReport epi_from_d13(BraceTable const& b)
{
	EpiReport rep;
	rep.family = "d13";
	std::optional<Element> gen;
	rep.gate_note = base_gate(b, gen);
	if (rep.gate_note.empty() && !upper_central_series(b).term(3).is_whole())
		rep.gate_note = "zeta_3 != B";
	if (!rep.gate_note.empty())
	{
		rep.gate_note = "hypotheses unmet: " + rep.gate_note;
		return rep;
	}
	rep.gate_passed = true;
	rep.gate_note = "non-abelian, one-generator, zeta_3 = B";
	rep.note = "source d13_brace(n), n = additive order of the generator";

	attempt_generators(b, *gen, rep, [&](Element a) {
		auto const d = build_canonical(b, a);
		if (d.n > std::numeric_limits<std::uint32_t>::max())
			throw ResourceError("generator order too large");
		D13Family const family(static_cast<std::uint32_t>(d.n));
		auto const source = family.materialize();
		auto const A = multiples(b, d.a, d.n), Bm = multiples(b, d.b, d.n),
		           C1 = multiples(b, d.c1, d.n), Z = multiples(b, d.z, family.fourth_modulus());
		std::vector<Element> f(source.order());
		for (Element i = 0; i < f.size(); ++i)
		{
			auto const x = family.decode(i);
			f[i] = b.add(b.add(A[x.m[0]], Bm[x.m[1]]), b.add(C1[x.m[2]], Z[x.m[3]]));
		}
		return check_homomorphism(source, b, std::move(f));
	});
	return rep;
}

EpiReport epi_report(BraceTable const& b, EpiFamily family)
{
	switch (family)
	{
	case EpiFamily::d12: return epi_from_d12(b);
	case EpiFamily::d13: return epi_from_d13(b);
	case EpiFamily::automatic: break;
	}
	return zl(b) == 2u ? epi_from_d12(b) : epi_from_d13(b);
}

A2Report a2_abelian_check(BraceTable const& b)
{
	A2Report r;
	auto const left = left_series(b), right = right_series(b);
	auto const& l2 = left.term(2);
	auto const& r2 = right.term(2);
	r.left2 = l2.members();
	r.right2 = r2.members();
	r.equals_right = l2 == r2;

	if (is_trivial_brace(b))
	{
		r.gate_passed = true;
		r.gate_note = "abelian brace: A^2 = 0";
	}
	else if (!first_generator(b))
		r.gate_note = "hypotheses unmet: not one-generator";
	else if (!upper_central_series(b).term(3).is_whole())
		r.gate_note = "hypotheses unmet: zeta_3 != B";
	else
	{
		r.gate_passed = true;
		r.gate_note = "non-abelian, one-generator, zeta_3 = B";
	}

	r.abelian = true;
	for (Element x : r.left2)
	{
		for (Element y : r.left2)
			if (star(b, x, y) != b.zero())
			{
				r.abelian = false;
				r.witness = {x, y};
				break;
			}
		if (!r.abelian)
			break;
	}
	return r;
}

std::string_view outcome_name(Outcome v)
{
	switch (v)
	{
	case Outcome::not_applicable: return "n/a";
	case Outcome::pass: return "pass";
	case Outcome::fail: return "FAIL";
	}
	return "?";
}

bool Classification::passed() const
{
	for (auto const& r : rows)
		if (r.epi_d12 == Outcome::fail || r.epi_d13 == Outcome::fail || r.a2 == Outcome::fail)
			return false;
	return true;
}

Classification classify_quotients(BraceTable const& b, EnumerateOptions const& options)
{
	auto const ideals = enumerate_ideals(b, options);
	auto outcome = [](bool gated, bool ok) {
		return !gated ? Outcome::not_applicable : ok ? Outcome::pass : Outcome::fail;
	};
	Classification c;
	c.rows = map_chunks<QuotientRow>(ideals.size(), 1, [&](std::uint64_t i, std::uint64_t) {
		auto const q = quotient(b, ideals[i]).brace;
		QuotientRow row;
		row.ideal = ideals[i].members();
		row.ideal_size = ideals[i].size();
		row.quotient_order = q.order();
		row.one_generator = first_generator(q).has_value();
		row.abelian = is_trivial_brace(q);
		row.zl = zl(q);
		row.smok = smok_class(q).pair();
		auto const d12 = epi_from_d12(q), d13 = epi_from_d13(q);
		row.epi_d12 = outcome(d12.gate_passed, d12.passed());
		row.epi_d13 = outcome(d13.gate_passed, d13.passed());
		if (!row.abelian)
		{
			auto const a2 = a2_abelian_check(q);
			row.a2 = outcome(a2.gate_passed, a2.passed());
		}
		return row;
	});
	return c;
}

} // namespace bracelab
