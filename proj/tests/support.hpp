#pragma once

// Test-side oracles and fixture generators. The oracles recompute results
// from definitions by brute force and never call the library routine they
// are used to check.

#include "bracelab/brace_io.hpp"
#include "bracelab/parametric.hpp"
#include "bracelab/series.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using bracelab::BraceTable;
using bracelab::Element;

inline long long mod(long long v, long long m)
{
	return ((v % m) + m) % m;
}

inline long long choose2(long long m)
{
	return m * (m - 1) / 2;
}

/// (m1,m2)(n1,n2) = (m1+n1, m2+n2+m1n1) mod m, on plain integers.
inline std::array<long long, 2> d12(long long m, std::array<long long, 2> x, std::array<long long, 2> y)
{
	return {mod(x[0] + y[0], m), mod(x[1] + y[1] + x[0] * y[0], m)};
}

/// D(1,3) product with fourth coordinate reduced mod q.
inline std::array<long long, 4> d13(long long n, long long q, std::array<long long, 4> x,
                                    std::array<long long, 4> y)
{
	return {mod(x[0] + y[0], n), mod(x[1] + y[1] + x[0] * y[0], n),
	        mod(x[2] + y[2] + x[0] * y[1] + x[1] * y[0], n),
	        mod(x[3] + y[3] + x[1] * y[0] - choose2(x[0]) * y[0], q)};
}

/// x * y = (0, x1y1, x1y2 + x2y1, x2y1 - C(x1,2) y1).
inline std::array<long long, 4> d13_star(long long n, long long q, std::array<long long, 4> x,
                                         std::array<long long, 4> y)
{
	return {0, mod(x[0] * y[0], n), mod(x[0] * y[1] + x[1] * y[0], n), mod(x[1] * y[0] - choose2(x[0]) * y[0], q)};
}

inline Element inverse(BraceTable const& b, Element x)
{
	for (Element y = 0; y < b.order(); ++y)
		if (b.mul(x, y) == 0)
			return y;
	return static_cast<Element>(b.order());
}

inline Element negative(BraceTable const& b, Element x)
{
	for (Element y = 0; y < b.order(); ++y)
		if (b.add(x, y) == 0)
			return y;
	return static_cast<Element>(b.order());
}

inline Element star(BraceTable const& b, Element x, Element y)
{
	return b.add(b.add(b.mul(x, y), negative(b, x)), negative(b, y));
}

using Set = std::set<Element>;

inline Set whole(BraceTable const& b)
{
	Set s;
	for (Element x = 0; x < b.order(); ++x)
		s.insert(x);
	return s;
}

/// Fixed point of "add all pairwise sums" starting from {0} and gens.
inline Set additive_span(BraceTable const& b, Set gens)
{
	gens.insert(0);
	for (bool grew = true; grew;)
	{
		grew = false;
		std::vector<Element> const cur(gens.begin(), gens.end());
		for (Element x : cur)
			for (Element y : cur)
				grew |= gens.insert(b.add(x, y)).second;
	}
	return gens;
}

inline Set star_span(BraceTable const& b, Set const& K, Set const& L)
{
	Set g;
	for (Element x : K)
		for (Element y : L)
			g.insert(star(b, x, y));
	return additive_span(b, g);
}

/// Closure under +, -, *, inverse by repeated passes.
inline Set subbrace(BraceTable const& b, Set s)
{
	s.insert(0);
	for (bool grew = true; grew;)
	{
		grew = false;
		std::vector<Element> const cur(s.begin(), s.end());
		for (Element x : cur)
		{
			grew |= s.insert(negative(b, x)).second;
			grew |= s.insert(inverse(b, x)).second;
			for (Element y : cur)
			{
				grew |= s.insert(b.add(x, y)).second;
				grew |= s.insert(b.mul(x, y)).second;
			}
		}
	}
	return s;
}

inline bool is_subbrace(BraceTable const& b, Set const& s)
{
	return subbrace(b, s) == s;
}

inline bool is_left_ideal(BraceTable const& b, Set const& s)
{
	if (!is_subbrace(b, s))
		return false;
	for (Element a = 0; a < b.order(); ++a)
		for (Element z : s)
			if (!s.count(star(b, a, z)))
				return false;
	return true;
}

inline bool is_ideal(BraceTable const& b, Set const& s)
{
	if (!is_left_ideal(b, s))
		return false;
	for (Element a = 0; a < b.order(); ++a)
		for (Element z : s)
			if (!s.count(star(b, z, a)))
				return false;
	return true;
}

inline Set members(bracelab::SubsetMask const& m)
{
	auto const v = m.members();
	return Set(v.begin(), v.end());
}

/// Upper central series from the coset description: a + zeta_i is star-central
/// in B / zeta_i when a * x and x * a fall in the zero coset for every x.
inline std::vector<Set> upper_series_by_cosets(BraceTable const& b)
{
	std::vector<Set> terms{{0}};
	for (;;)
	{
		Set const& cur = terms.back();
		auto coset_rep = [&](Element x) {
			Element r = x;
			for (Element z : cur)
				r = std::min(r, b.add(x, z));
			return r;
		};
		Set next;
		for (Element a = 0; a < b.order(); ++a)
		{
			bool central = true;
			for (Element x = 0; x < b.order() && central; ++x)
				central = coset_rep(star(b, a, x)) == 0 && coset_rep(star(b, x, a)) == 0;
			if (central)
				next.insert(a);
		}
		if (next == cur)
			return terms;
		terms.push_back(next);
	}
}

/// Direct product B1 x B2, index i * |B2| + j.
inline BraceTable product(BraceTable const& l, BraceTable const& r)
{
	std::size_t const n1 = l.order(), n2 = r.order(), n = n1 * n2;
	std::vector<Element> add(n * n), mul(n * n);
	for (Element x = 0; x < n; ++x)
		for (Element y = 0; y < n; ++y)
		{
			Element const x1 = x / n2, x2 = x % n2, y1 = y / n2, y2 = y % n2;
			add[x * n + y] = l.add(x1, y1) * n2 + r.add(x2, y2);
			mul[x * n + y] = l.mul(x1, y1) * n2 + r.mul(x2, y2);
		}
	auto t = BraceTable::from_tables(n, std::move(add), std::move(mul));
	t.set_description(l.description() + " x " + r.description());
	return t;
}

/// Z_6 with multiplication conjugated by the involution swapping 4 and 5: a
/// group with identity 0 for which LB3 and the braid relation fail.
inline BraceTable broken_z6()
{
	constexpr Element sigma[6] = {0, 1, 2, 3, 5, 4};
	std::vector<Element> add(36), mul(36);
	for (Element x = 0; x < 6; ++x)
		for (Element y = 0; y < 6; ++y)
		{
			add[x * 6 + y] = (x + y) % 6;
			mul[x * 6 + y] = sigma[(sigma[x] + sigma[y]) % 6];
		}
	auto t = BraceTable::from_tables(6, std::move(add), std::move(mul));
	t.set_description("broken Z6");
	return t;
}

/// Additive Z_3 x Z_2 with (a,b)(c,d) = (a + (-1)^b c, b + d); index 2a + b.
/// Neither left nor right nilpotent, with trivial star-center.
inline BraceTable dihedral6()
{
	std::vector<Element> add(36), mul(36);
	for (Element x = 0; x < 6; ++x)
		for (Element y = 0; y < 6; ++y)
		{
			Element const a = x / 2, b = x % 2, c = y / 2, d = y % 2;
			add[x * 6 + y] = (a + c) % 3 * 2 + (b + d) % 2;
			mul[x * 6 + y] = (a + (b ? 2 * c : c)) % 3 * 2 + (b + d) % 2;
		}
	auto t = BraceTable::from_tables(6, std::move(add), std::move(mul));
	t.set_description("Z3 x Z2 with multiplicative group S3");
	return t;
}

/// Small braces for property tests: parametric families, products and
/// quotients by a random ideal, drawn from a seeded engine.
class FixtureGen
{
  public:
	explicit FixtureGen(std::uint64_t seed) : rng_(seed) {}

	BraceTable base()
	{
		switch (pick(5))
		{
		case 4: return dihedral6();
		case 0: return bracelab::d12_quotient(2 + pick(5));
		case 1: return bracelab::d13_brace(2 + pick(2));
		case 2: return bracelab::trivial_brace(1 + pick(8));
		default: return product(bracelab::d12_quotient(2 + pick(2)), bracelab::trivial_brace(1 + pick(3)));
		}
	}

	BraceTable next()
	{
		auto b = base();
		if (pick(2) == 0)
		{
			auto const ideals = bracelab::enumerate_ideals(b);
			b = bracelab::quotient(b, ideals[pick(ideals.size())]).brace;
		}
		return b;
	}

	std::size_t pick(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_); }

	std::mt19937_64& engine() { return rng_; }

  private:
	std::mt19937_64 rng_;
};

} // namespace oracle
