#pragma once

// Both sides of the brace identities evaluated on concrete elements.
//
// The per-tuple checks are templates over LeftBrace so they run on tables,
// on the closed-form D(1,3) backend and on exact D(1,2) alike. The suites at
// the bottom scan a BraceTable exhaustively or with a seeded sample.
//
// Identity ids:
//   L2.i    a*(b+c) = a*b + a*c
//   L2.ii   (ab)*c = a*(b*c) + b*c + a*c
//   L2.iii  (a+b)*c = a*(b'*c) + b'*c + a*c,  b' = lambda_{a^-1}(b)
//   L2.iv   lambda_y(b*a) = (y b y^-1) * lambda_y(a)
//   L2.v    y b y^-1 = lambda_y(lambda_b(y^-1) - y^-1 + b)
//   L2.v'   y b y^-1 = lambda_y(b*y^-1 + b)
//   L2.2    a(b1+..+bn-c1-..-ck) = ab1+..+abn-ac1-..-ack + (k-n+1)a
//   P2.3    a^n = sum_i C(n,i) a_i,         a_1 = a, a_{i+1} = a*a_i
//   P2.4    a^n * a = sum_i C(n,i) a_{i+1}
// Generator-dependent identities (one-generator braces with zl = 3 or 2)
// are listed with run_section4.

#include "bracelab/brace.hpp"

#include <span>
#include <string>
#include <vector>

namespace bracelab {

template <class E>
struct IdentityCheck
{
	std::string id;
	std::vector<E> inputs;
	std::vector<long long> params;
	E lhs, rhs;

	bool pass() const { return lhs == rhs; }
};

template <LeftBrace B>
using CheckOf = IdentityCheck<element_of<B>>;

namespace identity {

template <LeftBrace B, class E = element_of<B>>
std::pair<E, E> l2_i(B const& br, E const& a, E const& b, E const& c)
{
	return {star(br, a, br.add(b, c)), br.add(star(br, a, b), star(br, a, c))};
}

template <LeftBrace B, class E = element_of<B>>
std::pair<E, E> l2_ii(B const& br, E const& a, E const& b, E const& c)
{
	E const bc = star(br, b, c);
	return {star(br, br.mul(a, b), c), br.add(br.add(star(br, a, bc), bc), star(br, a, c))};
}

template <LeftBrace B, class E = element_of<B>>
std::pair<E, E> l2_iii(B const& br, E const& a, E const& b, E const& c)
{
	E const bp = lambda_map(br, br.inv(a), b);
	E const bpc = star(br, bp, c);
	return {star(br, br.add(a, b), c), br.add(br.add(star(br, a, bpc), bpc), star(br, a, c))};
}

template <LeftBrace B, class E = element_of<B>>
std::pair<E, E> l2_iv(B const& br, E const& y, E const& b, E const& a)
{
	E const conj = br.mul(br.mul(y, b), br.inv(y));
	return {lambda_map(br, y, star(br, b, a)), star(br, conj, lambda_map(br, y, a))};
}

template <LeftBrace B, class E = element_of<B>>
std::pair<E, E> l2_v(B const& br, E const& y, E const& b)
{
	E const yi = br.inv(y);
	E const conj = br.mul(br.mul(y, b), yi);
	return {conj, lambda_map(br, y, br.add(sub(br, lambda_map(br, b, yi), yi), b))};
}

template <LeftBrace B, class E = element_of<B>>
std::pair<E, E> l2_v_alt(B const& br, E const& y, E const& b)
{
	E const yi = br.inv(y);
	E const conj = br.mul(br.mul(y, b), yi);
	return {conj, lambda_map(br, y, br.add(star(br, b, yi), b))};
}

template <LeftBrace B, class E = element_of<B>>
std::pair<E, E> signed_sum(B const& br, E const& a, std::span<E const> bs, std::span<E const> cs)
{
	E arg = br.zero(), rhs = br.zero();
	for (auto const& x : bs)
	{
		arg = br.add(arg, x);
		rhs = br.add(rhs, br.mul(a, x));
	}
	for (auto const& x : cs)
	{
		arg = sub(br, arg, x);
		rhs = sub(br, rhs, br.mul(a, x));
	}
	auto coeff = static_cast<long long>(cs.size()) - static_cast<long long>(bs.size()) + 1;
	E const step = coeff < 0 ? br.neg(a) : a;
	for (coeff = coeff < 0 ? -coeff : coeff; coeff > 0; --coeff)
		rhs = br.add(rhs, step);
	return {br.mul(a, arg), rhs};
}

/// a_1 .. a_{count}: a_1 = a, a_{i+1} = a * a_i.
template <LeftBrace B, class E = element_of<B>>
std::vector<E> star_sequence(B const& br, E const& a, std::size_t count)
{
	std::vector<E> seq;
	seq.reserve(count);
	if (count == 0)
		return seq;
	seq.push_back(a);
	while (seq.size() < count)
		seq.push_back(star(br, a, seq.back()));
	return seq;
}

/// P2.3 and P2.4 for exponent n >= 1.
template <LeftBrace B, class E = element_of<B>>
std::array<std::pair<E, E>, 2> power_expansion(B const& br, E const& a, unsigned n)
{
	if (n == 0)
		throw UsageError("power expansion needs n >= 1");
	auto const seq = star_sequence(br, a, n + 1); // seq[i] = a_{i+1}
	E sum3 = br.zero(), sum4 = br.zero();
	for (unsigned i = 1; i <= n; ++i)
	{
		Integer const c = binomial(n, i);
		sum3 = br.add(sum3, times(br, c, seq[i - 1]));
		sum4 = br.add(sum4, times(br, c, seq[i]));
	}
	E const an = power(br, a, Integer(n));
	return {{{an, sum3}, {star(br, an, a), sum4}}};
}

} // namespace identity

/// L2.i - L2.v (and L2.v') on one tuple.
template <LeftBrace B, class E = element_of<B>>
std::vector<IdentityCheck<E>> check_star_identities(B const& br, E const& a, E const& b,
                                                    E const& c, E const& y)
{
	std::vector<IdentityCheck<E>> out;
	auto push = [&](char const* id, std::vector<E> in, std::pair<E, E> sides) {
		out.push_back({id, std::move(in), {}, std::move(sides.first), std::move(sides.second)});
	};
	push("L2.i", {a, b, c}, identity::l2_i(br, a, b, c));
	push("L2.ii", {a, b, c}, identity::l2_ii(br, a, b, c));
	push("L2.iii", {a, b, c}, identity::l2_iii(br, a, b, c));
	push("L2.iv", {y, b, a}, identity::l2_iv(br, y, b, a));
	push("L2.v", {y, b}, identity::l2_v(br, y, b));
	push("L2.v'", {y, b}, identity::l2_v_alt(br, y, b));
	return out;
}

template <LeftBrace B, class E = element_of<B>>
IdentityCheck<E> check_signed_sum(B const& br, E const& a, std::span<E const> bs,
                                  std::span<E const> cs)
{
	std::vector<E> in{a};
	in.insert(in.end(), bs.begin(), bs.end());
	in.insert(in.end(), cs.begin(), cs.end());
	auto [l, r] = identity::signed_sum(br, a, bs, cs);
	return {"L2.2", std::move(in), {static_cast<long long>(bs.size()), static_cast<long long>(cs.size())},
	        std::move(l), std::move(r)};
}

template <LeftBrace B, class E = element_of<B>>
std::array<IdentityCheck<E>, 2> check_power_expansion(B const& br, E const& a, unsigned n)
{
	auto sides = identity::power_expansion(br, a, n);
	std::vector<long long> const params{static_cast<long long>(n)};
	return {{{"P2.3", {a}, params, sides[0].first, sides[0].second},
	         {"P2.4", {a}, params, sides[1].first, sides[1].second}}};
}

// ---------------------------------------------------------------- suites

struct IdentityOptions
{
	/// Exhaustive when order^arity is at most this many tuples.
	std::uint64_t tuple_cap = 10'000'000;
	/// Tuples per identity when sampling.
	std::uint64_t samples = 10'000;
	std::uint64_t seed = 0;
	/// Largest exponent for P2.3 / P2.4.
	unsigned max_exponent = 12;
	/// Bound on k, s for the generator-dependent identities.
	unsigned section4_bound = 8;
};

struct IdentityResult
{
	std::string id;
	std::string statement;
	bool exhaustive = true;
	bool skipped = false;
	std::uint64_t evaluated = 0;
	std::uint64_t failed = 0;
	std::vector<Element> first_failure;
	std::vector<long long> first_failure_params;
	std::string note;

	bool passed() const { return skipped || failed == 0; }
};

struct IdentityReport
{
	std::vector<IdentityResult> results;
	std::string gate;
	std::uint64_t seed = 0;

	bool passed() const;
	std::uint64_t evaluated() const;
	IdentityResult const* find(std::string_view id) const;
};

/// L2.*, L2.2 (several shapes), P2.3, P2.4.
IdentityReport run_universal(BraceTable const& brace, IdentityOptions const& options = {});

/// Generator-dependent identities, gated on hypotheses:
///   zl = 3: L4.1, L4.2.i - L4.2.vii, L4.3
///   zl = 2: T1.a, T1.b, T1.c, T1.inv
/// Unmet hypotheses are reported as skipped, not failed.
IdentityReport run_section4(BraceTable const& brace, IdentityOptions const& options = {});

enum class IdentitySuite
{
	all,
	universal,
	section4,
};

IdentityReport run_identities(BraceTable const& brace, IdentitySuite suite,
                              IdentityOptions const& options = {});

} // namespace bracelab
