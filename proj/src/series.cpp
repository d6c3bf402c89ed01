#include "bracelab/series.hpp"
#include "bracelab/parallel.hpp"

namespace bracelab {

std::string_view series_name(SeriesKind k)
{
	switch (k)
	{
	case SeriesKind::left: return "left";
	case SeriesKind::right: return "right";
	case SeriesKind::upper_central: return "upper";
	}
	return "?";
}

SubsetMask const& SeriesReport::term(std::size_t index) const
{
	if (index < first_index())
		throw UsageError("series index below first term");
	std::size_t const i = index - first_index();
	return terms[std::min(i, terms.size() - 1)];
}

namespace {

template <class Step>
SeriesReport iterate(SeriesKind kind, SubsetMask first, Step&& step)
{
	SeriesReport r{kind, {std::move(first)}, 0, false, false};
	for (;;)
	{
		SubsetMask next = step(r.terms.back());
		if (next == r.terms.back())
			break;
		r.terms.push_back(std::move(next));
	}
	r.stabilized_at = r.first_index() + r.terms.size() - 1;
	r.reached_zero = r.terms.back().is_zero();
	r.reached_whole = r.terms.back().is_whole();
	return r;
}

} // namespace

SeriesReport left_series(BraceTable const& b)
{
	auto const A = SubsetMask::whole(b.order());
	return iterate(SeriesKind::left, A, [&](SubsetMask const& prev) {
		auto t = star_subgroup(b, A, prev);
		t.set_kind(SubsetKind::left_ideal);
		return t;
	});
}

SeriesReport right_series(BraceTable const& b)
{
	auto const A = SubsetMask::whole(b.order());
	return iterate(SeriesKind::right, A, [&](SubsetMask const& prev) {
		auto t = star_subgroup(b, prev, A);
		t.set_kind(SubsetKind::ideal);
		return t;
	});
}

SubsetMask lifted_center(BraceTable const& b, SubsetMask const& lower)
{
	std::size_t const n = b.order();
	auto const flags = map_chunks<std::vector<char>>(n, 64, [&](std::uint64_t lo, std::uint64_t hi) {
		std::vector<char> f;
		for (auto a = static_cast<Element>(lo); a < hi; ++a)
		{
			bool in = true;
			for (Element x = 0; x < n && in; ++x)
				in = lower.contains(star(b, a, x)) && lower.contains(star(b, x, a));
			f.push_back(in);
		}
		return f;
	});
	SubsetMask out(n);
	Element a = 0;
	for (auto const& chunk : flags)
		for (char f : chunk)
		{
			if (f)
				out.insert(a);
			++a;
		}
	out.set_kind(SubsetKind::ideal);
	return out;
}

SubsetMask star_center(BraceTable const& b)
{
	return lifted_center(b, SubsetMask::zero(b.order()));
}

SeriesReport upper_central_series(BraceTable const& b)
{
	auto zero = SubsetMask::zero(b.order());
	zero.set_kind(SubsetKind::ideal);
	return iterate(SeriesKind::upper_central, zero,
	               [&](SubsetMask const& prev) { return lifted_center(b, prev); });
}

std::optional<std::size_t> zl(SeriesReport const& upper)
{
	if (upper.kind != SeriesKind::upper_central)
		throw UsageError("zl needs the upper central series");
	if (!upper.reached_whole)
		return std::nullopt;
	return upper.stabilized_at;
}

std::optional<std::size_t> zl(BraceTable const& b)
{
	return zl(upper_central_series(b));
}

std::optional<std::pair<std::size_t, std::size_t>> SmokClass::pair() const
{
	if (left && right)
		return std::pair{*right, *left};
	return std::nullopt;
}

SmokClass smok_class(SeriesReport const& left, SeriesReport const& right)
{
	SmokClass c;
	if (left.reached_zero)
		c.left = left.stabilized_at;
	if (right.reached_zero)
		c.right = right.stabilized_at;
	return c;
}

SmokClass smok_class(BraceTable const& b)
{
	return smok_class(left_series(b), right_series(b));
}

bool is_star_central_factor(BraceTable const& b, SubsetMask const& C, SubsetMask const& D)
{
	if (!D.is_subset_of(C))
		throw UsageError("star-central factor: lower ideal is not contained in the upper one");
	auto const cs = C.members();
	for (Element a = 0; a < b.order(); ++a)
		for (Element c : cs)
			if (!D.contains(star(b, a, c)) || !D.contains(star(b, c, a)))
				return false;
	return true;
}

} // namespace bracelab
