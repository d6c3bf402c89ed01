#include "bracelab/ybe.hpp"
#include "bracelab/parallel.hpp"

#include <array>
#include <ostream>
#include <tuple>

namespace bracelab {

namespace {

struct Solution
{
	std::vector<Element> u, v;
	std::size_t n;

	explicit Solution(BraceTable const& b) : u(b.order() * b.order()), v(u.size()), n(b.order())
	{
		for (Element x = 0; x < n; ++x)
			for (Element y = 0; y < n; ++y)
				std::tie(u[x * n + y], v[x * n + y]) = r_map(b, x, y);
	}

	std::pair<Element, Element> operator()(Element x, Element y) const
	{
		return {u[x * n + y], v[x * n + y]};
	}
};

YbeCheck scan_pairs(BraceTable const& b, auto&& ok)
{
	std::uint64_t const n = b.order();
	YbeCheck r;
	r.evaluated = n * n;
	if (auto const bad = find_first(n * n, [&](std::uint64_t p) { return !ok(static_cast<Element>(p / n), static_cast<Element>(p % n)); }, 4096))
	{
		r.passed = false;
		r.witness = {static_cast<Element>(*bad / n), static_cast<Element>(*bad % n)};
	}
	return r;
}

} // namespace

YbeCheck check_involutive(BraceTable const& b)
{
	Solution const r(b);
	return scan_pairs(b, [&](Element x, Element y) {
		auto const [u, v] = r(x, y);
		return r(u, v) == std::pair{x, y};
	});
}

YbeCheck check_product_conservation(BraceTable const& b)
{
	Solution const r(b);
	return scan_pairs(b, [&](Element x, Element y) {
		auto const [u, v] = r(x, y);
		return b.mul(u, v) == b.mul(x, y);
	});
}

YbeCheck check_braid(BraceTable const& b, YbeOptions const& opt)
{
	std::uint64_t const n = b.order();
	std::uint64_t const total = n * n * n;
	YbeCheck res;
	res.exhaustive = total <= opt.triple_cap;
	if (!res.exhaustive && !opt.samples)
		throw ResourceError(std::to_string(total) + " triples exceed the braid cap of " +
		                    std::to_string(opt.triple_cap) + "; pass a sample size");
	std::uint64_t const count = res.exhaustive ? total : *opt.samples;
	res.evaluated = count;

	Solution const r(b);
	SeededStream const rng(opt.seed);
	auto triple = [&](std::uint64_t t) -> std::array<Element, 3> {
		if (res.exhaustive)
			return {static_cast<Element>(t / (n * n)), static_cast<Element>(t / n % n), static_cast<Element>(t % n)};
		return {static_cast<Element>(rng.draw(t, 0, n)), static_cast<Element>(rng.draw(t, 1, n)),
		        static_cast<Element>(rng.draw(t, 2, n))};
	};
	auto r12 = [&](std::array<Element, 3> t) {
		std::tie(t[0], t[1]) = r(t[0], t[1]);
		return t;
	};
	auto r23 = [&](std::array<Element, 3> t) {
		std::tie(t[1], t[2]) = r(t[1], t[2]);
		return t;
	};
	auto const bad = find_first(count, [&](std::uint64_t i) {
		auto const t = triple(i);
		return r12(r23(r12(t))) != r23(r12(r23(t)));
	}, 4096);
	if (bad)
	{
		res.passed = false;
		auto const t = triple(*bad);
		res.witness.assign(t.begin(), t.end());
	}
	return res;
}

void dump_solution(BraceTable const& b, std::ostream& out)
{
	Solution const r(b);
	for (Element x = 0; x < b.order(); ++x)
		for (Element y = 0; y < b.order(); ++y)
		{
			auto const [u, v] = r(x, y);
			out << x << ' ' << y << ' ' << u << ' ' << v << '\n';
		}
}

} // namespace bracelab
