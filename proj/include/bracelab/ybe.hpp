#pragma once

// The involutive set-theoretic solution of the Yang-Baxter equation carried
// by a left brace: r(x, y) = (lambda_x(y), lambda_x(y)^-1 x y).

#include "bracelab/brace.hpp"

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace bracelab {

template <LeftBrace B, class E = element_of<B>>
std::pair<E, E> r_map(B const& br, E const& x, E const& y)
{
	E u = lambda_map(br, x, y);
	E v = br.mul(br.mul(br.inv(u), x), y);
	return {std::move(u), std::move(v)};
}

struct YbeCheck
{
	bool passed = true;
	bool exhaustive = true;
	std::uint64_t evaluated = 0;
	/// First failing pair or triple.
	std::vector<Element> witness;
};

/// r(r(x, y)) = (x, y) on all pairs.
YbeCheck check_involutive(BraceTable const& brace);

/// u v = x y on all pairs.
YbeCheck check_product_conservation(BraceTable const& brace);

struct YbeOptions
{
	/// Exhaustive braid check up to this many triples.
	std::uint64_t triple_cap = 1'000'000;
	/// Sample size above the cap; without it, exceeding the cap throws.
	std::optional<std::uint64_t> samples;
	std::uint64_t seed = 0;
};

/// (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) on triples.
/// Throws ResourceError when order^3 exceeds the cap and no sample size is set.
YbeCheck check_braid(BraceTable const& brace, YbeOptions const& options = {});

/// One "x y u v" line per pair, in lexicographic order.
void dump_solution(BraceTable const& brace, std::ostream& out);

} // namespace bracelab
