#include "bracelab/subsets.hpp"
#include "bracelab/parallel.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace bracelab {

std::string_view kind_name(SubsetKind k)
{
	switch (k)
	{
	case SubsetKind::unknown: return "subset";
	case SubsetKind::additive_subgroup: return "additive subgroup";
	case SubsetKind::subbrace: return "subbrace";
	case SubsetKind::left_ideal: return "left ideal";
	case SubsetKind::ideal: return "ideal";
	}
	return "?";
}

SubsetMask::SubsetMask(std::size_t order) : bits_(order, false)
{
	if (order == 0)
		throw UsageError("subset of an empty brace");
	bits_[0] = true;
	count_ = 1;
}

SubsetMask SubsetMask::whole(std::size_t order)
{
	SubsetMask s(order);
	s.bits_.assign(order, true);
	s.count_ = order;
	return s;
}

SubsetMask SubsetMask::of(std::size_t order, std::span<Element const> elements)
{
	SubsetMask s(order);
	for (Element x : elements)
	{
		if (x >= order)
			throw UsageError("element " + std::to_string(x) + " out of range");
		s.insert(x);
	}
	return s;
}

bool SubsetMask::insert(Element x)
{
	if (bits_[x])
		return false;
	bits_[x] = true;
	++count_;
	return true;
}

std::vector<Element> SubsetMask::members() const
{
	std::vector<Element> out;
	out.reserve(count_);
	for (Element i = 0; i < bits_.size(); ++i)
		if (bits_[i])
			out.push_back(i);
	return out;
}

bool SubsetMask::is_subset_of(SubsetMask const& other) const
{
	if (order() != other.order())
		return false;
	for (Element i = 0; i < bits_.size(); ++i)
		if (bits_[i] && !other.bits_[i])
			return false;
	return true;
}

bool canonical_less(SubsetMask const& l, SubsetMask const& r)
{
	if (l.size() != r.size())
		return l.size() < r.size();
	return l.members() < r.members();
}

namespace {

// Grows the subgroup (set, members) to <set, g> by adjoining cosets set + kg.
void adjoin(BraceTable const& b, SubsetMask& set, std::vector<Element>& members, Element g)
{
	if (set.contains(g))
		return;
	std::vector<Element> const base = members;
	for (Element h = g; !set.contains(h); h = b.add(h, g))
		for (Element s : base)
		{
			Element const x = b.add(s, h);
			if (set.insert(x))
				members.push_back(x);
		}
}

} // namespace

SubsetMask additive_closure(BraceTable const& b, std::span<Element const> elements)
{
	SubsetMask set(b.order());
	std::vector<Element> members{0};
	for (Element g : elements)
	{
		if (!b.valid(g))
			throw UsageError("element " + std::to_string(g) + " out of range");
		adjoin(b, set, members, g);
	}
	set.set_kind(SubsetKind::additive_subgroup);
	return set;
}

SubsetMask additive_closure(BraceTable const& b, SubsetMask const& s)
{
	auto m = s.members();
	return additive_closure(b, m);
}

SubsetMask star_subgroup(BraceTable const& b, SubsetMask const& K, SubsetMask const& L)
{
	SubsetMask gens(b.order());
	auto const ks = K.members(), ls = L.members();
	for (Element x : ks)
		for (Element y : ls)
			gens.insert(star(b, x, y));
	return additive_closure(b, gens);
}

SubsetMask generated_subbrace(BraceTable const& b, std::span<Element const> elements)
{
	SubsetMask set(b.order());
	std::vector<Element> members{0};
	auto push = [&](Element x) {
		if (set.insert(x))
			members.push_back(x);
	};
	for (Element x : elements)
	{
		if (!b.valid(x))
			throw UsageError("element " + std::to_string(x) + " out of range");
		push(x);
	}
	for (std::size_t i = 0; i < members.size(); ++i)
	{
		Element const x = members[i];
		push(b.neg(x));
		push(b.inv(x));
		for (std::size_t j = 0; j <= i; ++j)
		{
			Element const y = members[j];
			push(b.add(x, y));
			push(b.mul(x, y));
			push(b.mul(y, x));
		}
		if (set.is_whole())
			break;
	}
	set.set_kind(SubsetKind::subbrace);
	return set;
}

bool is_generator(BraceTable const& b, Element x)
{
	Element const g[] = {x};
	return generated_subbrace(b, g).is_whole();
}

Verdict is_additive_subgroup(BraceTable const& b, SubsetMask const& s)
{
	if (s.order() != b.order())
		throw UsageError("subset belongs to a brace of different order");
	auto const m = s.members();
	for (Element x : m)
		if (!s.contains(b.neg(x)))
			return Verdict::fail("not closed under additive inverse", {x});
	for (Element x : m)
		for (Element y : m)
			if (!s.contains(b.add(x, y)))
				return Verdict::fail("not closed under addition", {x, y});
	return {};
}

Verdict is_subbrace(BraceTable const& b, SubsetMask const& s)
{
	if (auto v = is_additive_subgroup(b, s); !v)
		return v;
	auto const m = s.members();
	for (Element x : m)
		if (!s.contains(b.inv(x)))
			return Verdict::fail("not closed under multiplicative inverse", {x});
	for (Element x : m)
		for (Element y : m)
			if (!s.contains(b.mul(x, y)))
				return Verdict::fail("not closed under multiplication", {x, y});
	return {};
}

namespace {

Verdict absorbs(BraceTable const& b, SubsetMask const& s, bool two_sided)
{
	if (auto v = is_subbrace(b, s); !v)
		return v;
	auto const m = s.members();
	for (Element a = 0; a < b.order(); ++a)
		for (Element z : m)
		{
			if (!s.contains(star(b, a, z)))
				return Verdict::fail("a * z leaves the set", {a, z});
			if (two_sided && !s.contains(star(b, z, a)))
				return Verdict::fail("z * a leaves the set", {z, a});
		}
	return {};
}

} // namespace

Verdict is_left_ideal(BraceTable const& b, SubsetMask const& s)
{
	return absorbs(b, s, false);
}

Verdict is_ideal(BraceTable const& b, SubsetMask const& s)
{
	return absorbs(b, s, true);
}

Quotient quotient(BraceTable const& b, SubsetMask const& ideal)
{
	if (auto v = is_ideal(b, ideal); !v)
		throw UsageError("quotient: subset is not an ideal (" + v.reason + ")");
	std::size_t const n = b.order();
	auto const members = ideal.members();
	Quotient q;
	q.projection.assign(n, BraceTable::npos);
	for (Element x = 0; x < n; ++x)
	{
		if (q.projection[x] != BraceTable::npos)
			continue;
		auto const id = static_cast<Element>(q.representatives.size());
		q.representatives.push_back(x);
		for (Element z : members)
			q.projection[b.add(x, z)] = id;
	}
	std::size_t const k = q.representatives.size();
	std::vector<Element> add(k * k), mul(k * k);
	for (Element i = 0; i < k; ++i)
		for (Element j = 0; j < k; ++j)
		{
			Element const x = q.representatives[i], y = q.representatives[j];
			add[i * k + j] = q.projection[b.add(x, y)];
			mul[i * k + j] = q.projection[b.mul(x, y)];
		}
	q.brace = BraceTable::from_tables(k, std::move(add), std::move(mul));
	if (!b.labels().empty())
	{
		std::vector<Element> reps = q.representatives;
		std::vector<std::string> labels;
		labels.reserve(k);
		for (Element r : reps)
			labels.push_back("[" + b.label(r) + "]");
		q.brace.set_labels(std::move(labels));
	}
	q.brace.set_description("quotient of " +
	                        (b.description().empty() ? std::string("brace") : b.description()) +
	                        " by an ideal of order " + std::to_string(members.size()));
	return q;
}

std::vector<SubsetMask> additive_subgroups(BraceTable const& b, EnumerateOptions const& opt)
{
	std::size_t const n = b.order();
	if (n > opt.max_order)
		throw ResourceError("subgroup enumeration: order " + std::to_string(n) + " exceeds cap " +
		                    std::to_string(opt.max_order));
	std::vector<SubsetMask> found{additive_closure(b, std::span<Element const>{})};
	std::unordered_set<std::vector<bool>> seen;
	auto key = [n](SubsetMask const& s) {
		std::vector<bool> k(n);
		for (Element x : s.members())
			k[x] = true;
		return k;
	};
	seen.insert(key(found[0]));
	for (std::size_t i = 0; i < found.size(); ++i)
	{
		SubsetMask const base = found[i];
		auto const base_members = base.members();
		// Only one g per coset g + base: they all give the same extension.
		std::vector<bool> covered(n, false);
		for (Element x : base_members)
			covered[x] = true;
		for (Element g = 0; g < n; ++g)
		{
			if (covered[g])
				continue;
			for (Element s : base_members)
				covered[b.add(g, s)] = true;
			SubsetMask ext = base;
			auto members = base_members;
			adjoin(b, ext, members, g);
			if (seen.insert(key(ext)).second)
			{
				ext.set_kind(SubsetKind::additive_subgroup);
				found.push_back(std::move(ext));
			}
		}
	}
	std::sort(found.begin(), found.end(), canonical_less);
	return found;
}

std::vector<SubsetMask> enumerate_ideals(BraceTable const& b, EnumerateOptions const& opt)
{
	auto const subgroups = additive_subgroups(b, opt);
	auto const flags = map_chunks<std::vector<char>>(
	    subgroups.size(), 4, [&](std::uint64_t lo, std::uint64_t hi) {
		    std::vector<char> f;
		    for (auto i = lo; i < hi; ++i)
			    f.push_back(is_ideal(b, subgroups[i]).holds);
		    return f;
	    });
	std::vector<SubsetMask> ideals;
	std::size_t i = 0;
	for (auto const& chunk : flags)
		for (char f : chunk)
		{
			if (f)
			{
				ideals.push_back(subgroups[i]);
				ideals.back().set_kind(SubsetKind::ideal);
			}
			++i;
		}
	return ideals;
}

std::string format_subset(BraceTable const& b, SubsetMask const& s)
{
	std::string out = "{";
	bool first = true;
	for (Element x : s.members())
	{
		if (!first)
			out += ", ";
		first = false;
		out += b.label(x);
	}
	return out + "}";
}

} // namespace bracelab
