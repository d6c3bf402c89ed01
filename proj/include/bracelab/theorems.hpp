#pragma once

// Generators, canonical data of a one-generator brace, and the canonical
// epimorphisms from D(1,2) (zl = 2) and D(1,3) (A = zeta_3) onto it.

#include "bracelab/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bracelab {

/// Every a with br({a}) = B, ascending.
std::vector<Element> find_generators(BraceTable const& brace);

/// Smallest generator, if the brace is one-generator.
std::optional<Element> first_generator(BraceTable const& brace);

struct CanonicalData
{
	Element a = 0;
	Element b = 0;  ///< a * a (also c in the zl = 2 case)
	Element c1 = 0; ///< a * b
	Element c2 = 0; ///< b * a
	Element z = 0;  ///< c2 - c1
	Element bb = 0; ///< b * b
	std::uint64_t n = 1; ///< additive order of a
};

/// Throws UsageError unless a generates the brace.
CanonicalData build_canonical(BraceTable const& brace, Element a);

/// Checks b in zeta_2; c1, c2, z in zeta_1 (when zl <= 3) and that n kills
/// b, c1, c2 and b * b. Returns the name of the first violated condition.
std::optional<std::string> canonical_violation(BraceTable const& brace, CanonicalData const& data,
                                               SeriesReport const& upper);

struct HomWitness
{
	std::string source;
	std::string target;
	std::vector<Element> mapping;
	bool is_additive = false;
	bool is_multiplicative = false;
	bool is_surjective = false;
	/// (x, y) on which the failed law breaks.
	std::vector<Element> counterexample;
	std::string failed_law;
	std::size_t kernel_size = 0;
	std::size_t image_size = 0;

	bool is_epimorphism() const { return is_additive && is_multiplicative && is_surjective; }
};

HomWitness check_homomorphism(BraceTable const& source, BraceTable const& target,
                              std::vector<Element> mapping);

struct EpiAttempt
{
	Element generator = 0;
	HomWitness witness;
};

struct EpiReport
{
	std::string family;
	bool gate_passed = false;
	std::string gate_note;
	std::string note;
	std::vector<EpiAttempt> attempts;

	/// Gate met and some attempted generator produced an epimorphism.
	bool passed() const;
	HomWitness const* witness() const;
};

/// f(alpha, gamma) = alpha a + gamma c on D(1,2) mod m, m the additive
/// exponent. Gate: non-abelian, one-generator, zl = 2.
EpiReport epi_from_d12(BraceTable const& brace);

/// f(n1, n2, n3, n4) = n1 a + n2 b + n3 c1 + n4 z on d13_brace(n), n the
/// additive order of a. Gate: non-abelian, one-generator, zeta_3 = B.
EpiReport epi_from_d13(BraceTable const& brace);

enum class EpiFamily
{
	d12,
	d13,
	automatic,
};

/// automatic picks d12 when zl = 2 and d13 otherwise.
EpiReport epi_report(BraceTable const& brace, EpiFamily family);

struct A2Report
{
	bool gate_passed = false;
	std::string gate_note;
	/// Members of A^2 and A^(2).
	std::vector<Element> left2;
	std::vector<Element> right2;
	bool abelian = false;
	bool equals_right = false;
	/// x, y in A^2 with x * y != 0.
	std::vector<Element> witness;

	bool passed() const { return gate_passed && abelian && equals_right; }
};

/// A^2 (left series term 2) is a trivial brace and equals A^(2).
/// Abelian braces pass vacuously; otherwise gated as epi_from_d13.
A2Report a2_abelian_check(BraceTable const& brace);

enum class Outcome
{
	not_applicable,
	pass,
	fail,
};

std::string_view outcome_name(Outcome v);

struct QuotientRow
{
	std::vector<Element> ideal;
	std::size_t ideal_size = 0;
	std::size_t quotient_order = 0;
	bool one_generator = false;
	bool abelian = false;
	std::optional<std::size_t> zl;
	std::optional<std::pair<std::size_t, std::size_t>> smok;
	Outcome epi_d12 = Outcome::not_applicable;
	Outcome epi_d13 = Outcome::not_applicable;
	Outcome a2 = Outcome::not_applicable;
};

struct Classification
{
	std::vector<QuotientRow> rows;
	bool passed() const;
};

/// One row per ideal of the brace, in enumerate_ideals order.
Classification classify_quotients(BraceTable const& brace, EnumerateOptions const& options = {});

} // namespace bracelab
