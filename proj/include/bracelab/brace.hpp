#pragma once

// Finite left braces: the table-backed representation, the star / lambda
// calculus shared by every backend, and exhaustive axiom verification.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bracelab {

/// Dense element index. Index 0 is the neutral element of both operations.
using Element = std::uint32_t;

/// Exact integers for coefficients, exponents and the D(1,2) carrier.
using Integer = boost::multiprecision::cpp_int;

/// Malformed input: ragged tables, out-of-range entries, bad file syntax.
class StructuralError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

/// A requested object exceeds a configured size cap.
class ResourceError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

/// Operation called outside its contract (wrong moduli, non-ideal, ...).
class UsageError : public std::invalid_argument
{
  public:
	using std::invalid_argument::invalid_argument;
};

/// Anything that behaves like a left brace: an abelian group (add, neg, zero)
/// and a group (mul, inv) on the same carrier sharing the neutral element.
template <class B>
concept LeftBrace = requires(const B& brace, const typename B::element_type& x) {
	{ brace.zero() } -> std::convertible_to<typename B::element_type>;
	{ brace.add(x, x) } -> std::convertible_to<typename B::element_type>;
	{ brace.neg(x) } -> std::convertible_to<typename B::element_type>;
	{ brace.mul(x, x) } -> std::convertible_to<typename B::element_type>;
	{ brace.inv(x) } -> std::convertible_to<typename B::element_type>;
	requires std::equality_comparable<typename B::element_type>;
};

template <LeftBrace B>
using element_of = typename B::element_type;

template <LeftBrace B>
element_of<B> sub(B const& brace, element_of<B> const& x, element_of<B> const& y)
{
	return brace.add(x, brace.neg(y));
}

/// x * y = xy - x - y
template <LeftBrace B>
element_of<B> star(B const& brace, element_of<B> const& x, element_of<B> const& y)
{
	return sub(brace, sub(brace, brace.mul(x, y), x), y);
}

/// lambda_a(x) = ax - a
template <LeftBrace B>
element_of<B> lambda_map(B const& brace, element_of<B> const& a, element_of<B> const& x)
{
	return sub(brace, brace.mul(a, x), a);
}

/// k-fold additive multiple, k any integer.
template <LeftBrace B>
element_of<B> times(B const& brace, Integer k, element_of<B> x)
{
	if (k < 0)
	{
		k = -k;
		x = brace.neg(x);
	}
	element_of<B> acc = brace.zero();
	while (k > 0)
	{
		if ((k & 1) != 0)
			acc = brace.add(acc, x);
		k >>= 1;
		if (k > 0)
			x = brace.add(x, x);
	}
	return acc;
}

/// Multiplicative power, k any integer.
template <LeftBrace B>
element_of<B> power(B const& brace, element_of<B> x, Integer k)
{
	if (k < 0)
	{
		k = -k;
		x = brace.inv(x);
	}
	element_of<B> acc = brace.zero();
	while (k > 0)
	{
		if ((k & 1) != 0)
			acc = brace.mul(acc, x);
		k >>= 1;
		if (k > 0)
			x = brace.mul(x, x);
	}
	return acc;
}

/// n (n - 1) ... (n - k + 1) / k!, defined for every integer n.
Integer binomial(Integer const& n, unsigned k);

/// Limits applied when materializing tables.
struct BuildLimits
{
	std::size_t max_order = 4096;
};

/// A finite left brace as explicit addition and multiplication tables.
/// Immutable after construction; copies are cheap enough at desk scale.
class BraceTable
{
  public:
	using element_type = Element;
	static constexpr Element npos = ~Element{0};

	/// Builds from row-major N*N tables. Checks shape and entry range only;
	/// use verify_axioms for the algebraic conditions.
	static BraceTable from_tables(std::size_t order, std::vector<Element> add,
	                              std::vector<Element> mul);

	std::size_t order() const { return n_; }
	Element zero() const { return 0; }
	Element add(Element x, Element y) const { return add_[x * n_ + y]; }
	Element mul(Element x, Element y) const { return mul_[x * n_ + y]; }
	/// Additive inverse; npos when the addition row has no zero.
	Element neg(Element x) const { return neg_[x]; }
	/// Multiplicative inverse; npos when the multiplication row has no zero.
	Element inv(Element x) const { return inv_[x]; }

	std::span<Element const> add_row(Element x) const { return {add_.data() + x * n_, n_}; }
	std::span<Element const> mul_row(Element x) const { return {mul_.data() + x * n_, n_}; }
	std::vector<Element> const& add_table() const { return add_; }
	std::vector<Element> const& mul_table() const { return mul_; }

	std::string const& description() const { return description_; }
	void set_description(std::string d) { description_ = std::move(d); }

	/// Machine-readable construction tag ("d12 5", "d13 2 reduced",
	/// "trivial 4"), empty for other tables. Stored as a comment in .brace
	/// files so labels can be restored on load.
	std::string const& family() const { return family_; }
	void set_family(std::string f) { family_ = std::move(f); }

	/// Optional display names (coordinate tuples for parametric braces).
	std::vector<std::string> const& labels() const { return labels_; }
	void set_labels(std::vector<std::string> labels);
	std::string label(Element x) const;

	bool valid(Element x) const { return x < n_; }

	/// Table equality; labels and description are ignored.
	friend bool operator==(BraceTable const& l, BraceTable const& r)
	{
		return l.n_ == r.n_ && l.add_ == r.add_ && l.mul_ == r.mul_;
	}

  private:
	std::size_t n_ = 0;
	std::vector<Element> add_, mul_, neg_, inv_;
	std::string description_;
	std::string family_;
	std::vector<std::string> labels_;
};

enum class Axiom
{
	add_identity,
	add_commutative,
	add_inverses,
	add_associative,
	mul_identity,
	mul_latin,
	mul_associative,
	left_distributive,
};

std::string_view axiom_name(Axiom a);
/// "LB1", "LB2" or "LB3".
std::string_view axiom_group(Axiom a);

struct AxiomResult
{
	Axiom axiom;
	bool passed = true;
	std::vector<Element> witness;
	/// False when a prerequisite axiom failed and this one was not checked.
	bool evaluated = true;
};

struct AxiomReport
{
	std::vector<AxiomResult> results;
	bool exhaustive = true;
	std::uint64_t samples = 0;
	std::uint64_t seed = 0;

	bool passed() const;
	AxiomResult const* first_failure() const;
};

struct VerifyOptions
{
	/// Orders above this use seeded sampling for the cubic checks.
	std::size_t exhaustive_max_order = 1000;
	std::uint64_t samples = 1'000'000;
	std::uint64_t seed = 0;
};

AxiomReport verify_axioms(BraceTable const& brace, VerifyOptions const& options = {});

/// Additive order of x (smallest k > 0 with kx = 0).
std::uint64_t additive_order(BraceTable const& brace, Element x);

/// Exponent of the additive group (lcm of element orders).
std::uint64_t additive_exponent(BraceTable const& brace);

bool is_trivial_brace(BraceTable const& brace);

} // namespace bracelab
