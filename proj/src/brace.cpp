#include "bracelab/brace.hpp"
#include "bracelab/parallel.hpp"

#include <numeric>

namespace bracelab {

Integer binomial(Integer const& n, unsigned k)
{
	if (n >= 0 && n < k)
		return 0;
	Integer r = 1;
	for (unsigned i = 0; i < k; ++i)
	{
		r *= n - i;
		r /= i + 1;
	}
	return r;
}

BraceTable BraceTable::from_tables(std::size_t order, std::vector<Element> add,
                                   std::vector<Element> mul)
{
	if (order == 0)
		throw StructuralError("order must be positive");
	if (add.size() != order * order || mul.size() != order * order)
		throw StructuralError("table size does not match order " + std::to_string(order));
	for (auto const* table : {&add, &mul})
		for (Element e : *table)
			if (e >= order)
				throw StructuralError("table entry " + std::to_string(e) + " out of range");

	BraceTable b;
	b.n_ = order;
	b.add_ = std::move(add);
	b.mul_ = std::move(mul);
	b.neg_.assign(order, npos);
	b.inv_.assign(order, npos);
	for (Element x = 0; x < order; ++x)
		for (Element y = 0; y < order; ++y)
		{
			if (b.neg_[x] == npos && b.add_[x * order + y] == 0)
				b.neg_[x] = y;
			if (b.inv_[x] == npos && b.mul_[x * order + y] == 0)
				b.inv_[x] = y;
		}
	return b;
}

void BraceTable::set_labels(std::vector<std::string> labels)
{
	if (!labels.empty() && labels.size() != n_)
		throw UsageError("label count does not match order");
	labels_ = std::move(labels);
}

std::string BraceTable::label(Element x) const
{
	if (x < labels_.size())
		return labels_[x];
	return std::to_string(x);
}

std::string_view axiom_name(Axiom a)
{
	switch (a)
	{
	case Axiom::add_identity: return "additive identity";
	case Axiom::add_commutative: return "additive commutativity";
	case Axiom::add_inverses: return "additive inverses";
	case Axiom::add_associative: return "additive associativity";
	case Axiom::mul_identity: return "multiplicative identity";
	case Axiom::mul_latin: return "multiplicative inverses (latin square)";
	case Axiom::mul_associative: return "multiplicative associativity";
	case Axiom::left_distributive: return "a(b+c) = ab + ac - a";
	}
	return "?";
}

std::string_view axiom_group(Axiom a)
{
	switch (a)
	{
	case Axiom::add_identity:
	case Axiom::add_commutative:
	case Axiom::add_inverses:
	case Axiom::add_associative: return "LB1";
	case Axiom::mul_identity:
	case Axiom::mul_latin:
	case Axiom::mul_associative: return "LB2";
	case Axiom::left_distributive: return "LB3";
	}
	return "?";
}

bool AxiomReport::passed() const
{
	return first_failure() == nullptr;
}

AxiomResult const* AxiomReport::first_failure() const
{
	for (auto const& r : results)
		if (!r.passed)
			return &r;
	return nullptr;
}

namespace {

using Triple = std::array<Element, 3>;

// Scans all (x, y) pairs in lexicographic order; returns the first failure.
template <class Bad>
std::optional<std::vector<Element>> first_bad_pair(std::size_t n, Bad&& bad)
{
	auto hit = find_first(static_cast<std::uint64_t>(n) * n, [&](std::uint64_t i) {
		return bad(static_cast<Element>(i / n), static_cast<Element>(i % n));
	});
	if (!hit)
		return std::nullopt;
	return std::vector<Element>{static_cast<Element>(*hit / n), static_cast<Element>(*hit % n)};
}

// Cubic checks: exhaustive over (x, y) rows with an inner z loop, or sampled.
template <class Bad>
std::optional<std::vector<Element>> first_bad_triple(std::size_t n, bool exhaustive,
                                                     VerifyOptions const& opt, Bad&& bad)
{
	if (exhaustive)
	{
		auto hit = find_first(static_cast<std::uint64_t>(n) * n, [&](std::uint64_t i) {
			Element const x = static_cast<Element>(i / n), y = static_cast<Element>(i % n);
			for (Element z = 0; z < n; ++z)
				if (bad(x, y, z))
					return true;
			return false;
		}, 16);
		if (!hit)
			return std::nullopt;
		Element const x = static_cast<Element>(*hit / n), y = static_cast<Element>(*hit % n);
		for (Element z = 0; z < n; ++z)
			if (bad(x, y, z))
				return std::vector<Element>{x, y, z};
		return std::nullopt;
	}
	SeededStream rng(opt.seed);
	auto draw = [&](std::uint64_t i) {
		return Triple{static_cast<Element>(rng.draw(i, 0, n)),
		              static_cast<Element>(rng.draw(i, 1, n)),
		              static_cast<Element>(rng.draw(i, 2, n))};
	};
	auto hit = find_first(opt.samples, [&](std::uint64_t i) {
		auto t = draw(i);
		return bad(t[0], t[1], t[2]);
	});
	if (!hit)
		return std::nullopt;
	auto t = draw(*hit);
	return std::vector<Element>{t[0], t[1], t[2]};
}

} // namespace

AxiomReport verify_axioms(BraceTable const& b, VerifyOptions const& opt)
{
	std::size_t const n = b.order();
	AxiomReport report;
	report.exhaustive = n <= opt.exhaustive_max_order;
	report.samples = report.exhaustive ? 0 : opt.samples;
	report.seed = opt.seed;

	auto record = [&](Axiom a, std::optional<std::vector<Element>> w) {
		AxiomResult r{a, !w.has_value(), {}, true};
		if (w)
			r.witness = std::move(*w);
		report.results.push_back(std::move(r));
	};
	auto is_perm = [n](std::span<Element const> row, std::vector<char>& seen) {
		std::fill(seen.begin(), seen.end(), 0);
		for (Element e : row)
		{
			if (seen[e])
				return false;
			seen[e] = 1;
		}
		return true;
	};

	record(Axiom::add_identity, first_bad_pair(n, [&](Element x, Element y) {
		       return y == 0 && (b.add(0, x) != x || b.add(x, 0) != x);
	       }));
	record(Axiom::add_commutative, first_bad_pair(n, [&](Element x, Element y) {
		       return b.add(x, y) != b.add(y, x);
	       }));
	{
		std::vector<char> seen(n);
		std::optional<std::vector<Element>> w;
		for (Element x = 0; x < n && !w; ++x)
			if (!is_perm(b.add_row(x), seen))
				w = std::vector<Element>{x};
		record(Axiom::add_inverses, w);
	}
	record(Axiom::add_associative,
	       first_bad_triple(n, report.exhaustive, opt, [&](Element x, Element y, Element z) {
		       return b.add(b.add(x, y), z) != b.add(x, b.add(y, z));
	       }));

	record(Axiom::mul_identity, first_bad_pair(n, [&](Element x, Element y) {
		       return y == 0 && (b.mul(0, x) != x || b.mul(x, 0) != x);
	       }));
	{
		std::vector<char> seen(n);
		std::vector<Element> col(n);
		std::optional<std::vector<Element>> w;
		for (Element x = 0; x < n && !w; ++x)
		{
			if (!is_perm(b.mul_row(x), seen))
			{
				w = std::vector<Element>{x};
				break;
			}
			for (Element y = 0; y < n; ++y)
				col[y] = b.mul(y, x);
			if (!is_perm(col, seen))
				w = std::vector<Element>{x};
		}
		record(Axiom::mul_latin, w);
	}
	record(Axiom::mul_associative,
	       first_bad_triple(n, report.exhaustive, opt, [&](Element x, Element y, Element z) {
		       return b.mul(b.mul(x, y), z) != b.mul(x, b.mul(y, z));
	       }));

	// LB3 needs additive inverses to state; skip it when LB1 already failed.
	bool const lb1_ok = report.results[2].passed;
	if (lb1_ok)
		record(Axiom::left_distributive,
		       first_bad_triple(n, report.exhaustive, opt, [&](Element a, Element x, Element y) {
			       Element const lhs = b.mul(a, b.add(x, y));
			       Element const rhs = b.add(b.add(b.mul(a, x), b.mul(a, y)), b.neg(a));
			       return lhs != rhs;
		       }));
	else
		report.results.push_back({Axiom::left_distributive, false, {}, false});
	return report;
}

std::uint64_t additive_order(BraceTable const& b, Element x)
{
	std::uint64_t k = 1;
	for (Element y = x; y != 0; y = b.add(y, x))
	{
		++k;
		if (k > b.order())
			throw UsageError("element has no finite additive order (not a group)");
	}
	return k;
}

std::uint64_t additive_exponent(BraceTable const& b)
{
	std::uint64_t e = 1;
	for (Element x = 0; x < b.order(); ++x)
		e = std::lcm(e, additive_order(b, x));
	return e;
}

bool is_trivial_brace(BraceTable const& b)
{
	return b.add_table() == b.mul_table();
}

} // namespace bracelab
