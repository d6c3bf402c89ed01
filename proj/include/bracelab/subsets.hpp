#pragma once

// Subsets of a finite brace: additive closures, K*L subgroups, generated
// subbraces, (left) ideal predicates, quotients and ideal enumeration.

#include "bracelab/brace.hpp"

#include <span>
#include <string>
#include <vector>

namespace bracelab {

enum class SubsetKind
{
	unknown,
	additive_subgroup,
	subbrace,
	left_ideal,
	ideal,
};

std::string_view kind_name(SubsetKind k);

/// Membership set over the indices of one brace. Always contains 0.
/// Equality is membership equality; the kind tag is advisory.
class SubsetMask
{
  public:
	explicit SubsetMask(std::size_t order);

	static SubsetMask zero(std::size_t order) { return SubsetMask(order); }
	static SubsetMask whole(std::size_t order);
	static SubsetMask of(std::size_t order, std::span<Element const> elements);

	std::size_t order() const { return bits_.size(); }
	std::size_t size() const { return count_; }
	bool contains(Element x) const { return x < bits_.size() && bits_[x]; }
	/// Returns true if x was not yet present.
	bool insert(Element x);
	std::vector<Element> members() const;

	bool is_zero() const { return count_ == 1; }
	bool is_whole() const { return count_ == bits_.size(); }
	bool is_subset_of(SubsetMask const& other) const;

	SubsetKind kind() const { return kind_; }
	void set_kind(SubsetKind k) { kind_ = k; }

	friend bool operator==(SubsetMask const& l, SubsetMask const& r) { return l.bits_ == r.bits_; }

  private:
	std::vector<bool> bits_;
	std::size_t count_ = 0;
	SubsetKind kind_ = SubsetKind::unknown;
};

/// Size first, then lexicographic membership.
bool canonical_less(SubsetMask const& l, SubsetMask const& r);

/// Smallest additive subgroup containing the given elements.
SubsetMask additive_closure(BraceTable const& brace, std::span<Element const> elements);
SubsetMask additive_closure(BraceTable const& brace, SubsetMask const& set);

/// Additive subgroup generated by all x * y, x in K, y in L.
SubsetMask star_subgroup(BraceTable const& brace, SubsetMask const& K, SubsetMask const& L);

/// br(M): the smallest subbrace containing M.
SubsetMask generated_subbrace(BraceTable const& brace, std::span<Element const> elements);

/// True when x alone generates the whole brace.
bool is_generator(BraceTable const& brace, Element x);

/// Outcome of a structural predicate, with the violating tuple on failure.
struct Verdict
{
	bool holds = true;
	std::vector<Element> witness;
	std::string reason;

	explicit operator bool() const { return holds; }
	static Verdict fail(std::string reason, std::vector<Element> witness)
	{
		return {false, std::move(witness), std::move(reason)};
	}
};

Verdict is_additive_subgroup(BraceTable const& brace, SubsetMask const& set);
/// Closed under +, -, multiplication and multiplicative inverses.
Verdict is_subbrace(BraceTable const& brace, SubsetMask const& set);
/// Subbrace with a * z in L for all a in the brace, z in L.
Verdict is_left_ideal(BraceTable const& brace, SubsetMask const& set);
/// Subbrace with a * z and z * a in L for all a, z in L.
Verdict is_ideal(BraceTable const& brace, SubsetMask const& set);

struct Quotient
{
	BraceTable brace;
	/// Element of the source -> coset index.
	std::vector<Element> projection;
	/// Coset index -> smallest element of the coset.
	std::vector<Element> representatives;
};

/// B / I. Cosets are numbered by their smallest element, so the coset of 0 is
/// 0 and quotient(B, {0}) reproduces B. Throws UsageError if I is not an ideal.
Quotient quotient(BraceTable const& brace, SubsetMask const& ideal);

struct EnumerateOptions
{
	std::size_t max_order = 256;
};

/// All additive subgroups, sorted by size then membership.
std::vector<SubsetMask> additive_subgroups(BraceTable const& brace,
                                           EnumerateOptions const& options = {});

/// All ideals, sorted by size then membership.
std::vector<SubsetMask> enumerate_ideals(BraceTable const& brace,
                                         EnumerateOptions const& options = {});

/// "{0, 3, 5}" or, with labels, "{(0,0), (1,2)}".
std::string format_subset(BraceTable const& brace, SubsetMask const& set);

} // namespace bracelab
