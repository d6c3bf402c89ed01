#pragma once

// Left series A^k, right series A^(k), the star-center, the upper
// star-central series and the invariants derived from them.

#include "bracelab/subsets.hpp"

#include <optional>
#include <utility>

namespace bracelab {

enum class SeriesKind
{
	left,
	right,
	upper_central,
};

std::string_view series_name(SeriesKind k);

/// A chain of subsets computed up to its first repeated term.
///
/// Left and right series are indexed from 1 (terms[0] is A^1 = A); the upper
/// central series from 0 (terms[0] is zeta_0 = {0}). Consecutive terms are
/// strictly different; the series is constant from `stabilized_at` on.
struct SeriesReport
{
	SeriesKind kind;
	std::vector<SubsetMask> terms;
	std::size_t stabilized_at = 0;
	bool reached_zero = false;
	bool reached_whole = false;

	std::size_t first_index() const { return kind == SeriesKind::upper_central ? 0 : 1; }
	/// Term by its series index (clamped to the stable tail).
	SubsetMask const& term(std::size_t index) const;
};

SeriesReport left_series(BraceTable const& brace);
SeriesReport right_series(BraceTable const& brace);
SeriesReport upper_central_series(BraceTable const& brace);

/// {a : a * x = x * a = 0 for all x}, tagged as an ideal.
SubsetMask star_center(BraceTable const& brace);

/// {a : a * x and x * a lie in `lower` for all x}; the next upper central term
/// when `lower` is an ideal.
SubsetMask lifted_center(BraceTable const& brace, SubsetMask const& lower);

/// Length of the upper star-central series, or nullopt when the brace is not
/// star-hypercentral.
std::optional<std::size_t> zl(BraceTable const& brace);
std::optional<std::size_t> zl(SeriesReport const& upper);

struct SmokClass
{
	/// Least k with A^k = 0.
	std::optional<std::size_t> left;
	/// Least n with A^(n) = 0.
	std::optional<std::size_t> right;

	/// (n, k) for the class N_S(n, k), when both exist.
	std::optional<std::pair<std::size_t, std::size_t>> pair() const;
};

SmokClass smok_class(BraceTable const& brace);
SmokClass smok_class(SeriesReport const& left, SeriesReport const& right);

/// True when A * C and C * A lie in D. Throws UsageError unless D <= C.
bool is_star_central_factor(BraceTable const& brace, SubsetMask const& C, SubsetMask const& D);

} // namespace bracelab
