#pragma once

// Closed-form braces: D(1,2) over Z (exact), its quotients modulo m, the
// four-coordinate brace D(1,3) over Z_n, and the trivial brace on Z_N.
// Each formula backend satisfies LeftBrace and can be materialized into a
// BraceTable using a mixed-radix index with the first coordinate most
// significant.

#include "bracelab/brace.hpp"

#include <array>
#include <string>

namespace bracelab {

// ---------------------------------------------------------------- D(1,2)

struct D12Element
{
	Integer m1, m2;
	friend bool operator==(D12Element const&, D12Element const&) = default;
};

/// (m1, m2)(n1, n2) = (m1 + n1, m2 + n2 + m1 n1)
D12Element d12_mul(D12Element const& x, D12Element const& y);

/// D(1,2) on Z x Z with arbitrary-precision coordinates.
class D12Integer
{
  public:
	using element_type = D12Element;

	D12Element zero() const { return {0, 0}; }
	D12Element add(D12Element const& x, D12Element const& y) const { return {x.m1 + y.m1, x.m2 + y.m2}; }
	D12Element neg(D12Element const& x) const { return {-x.m1, -x.m2}; }
	D12Element mul(D12Element const& x, D12Element const& y) const { return d12_mul(x, y); }
	/// (n1, n2)^-1 = (-n1, n1^2 - n2)
	D12Element inv(D12Element const& x) const { return {-x.m1, x.m1 * x.m1 - x.m2}; }
};

struct D12Residue
{
	std::uint32_t m1 = 0, m2 = 0;
	friend bool operator==(D12Residue const&, D12Residue const&) = default;
};

/// D(1,2) reduced coordinatewise modulo m. This is a finite quotient of
/// D(1,2), not D(1,2) itself.
class D12Quotient
{
  public:
	using element_type = D12Residue;

	explicit D12Quotient(std::uint32_t modulus);

	std::uint32_t modulus() const { return m_; }
	std::size_t order() const { return std::size_t{m_} * m_; }

	D12Residue zero() const { return {}; }
	D12Residue add(D12Residue x, D12Residue y) const;
	D12Residue neg(D12Residue x) const;
	D12Residue mul(D12Residue x, D12Residue y) const;
	D12Residue inv(D12Residue x) const;

	/// Reduction of an exact D(1,2) element.
	D12Residue reduce(D12Element const& x) const;

	Element encode(D12Residue x) const { return x.m1 * m_ + x.m2; }
	D12Residue decode(Element i) const { return {i / m_, i % m_}; }
	std::string label(D12Residue x) const;

	BraceTable materialize(BuildLimits const& limits = {}) const;

  private:
	std::uint32_t m_;
};

/// Materialized D(1,2) modulo m; order m^2.
BraceTable d12_quotient(std::uint32_t modulus, BuildLimits const& limits = {});

// ---------------------------------------------------------------- D(1,3)

/// How the fourth coordinate is reduced.
///
/// `literal` evaluates C(m1,2) on the representative in [0, n) and reduces
/// everything modulo n. For even n this is not associative, because C(m,2)
/// mod n depends on the representative of m.
///
/// `reduced` takes the fourth coordinate modulo n / gcd(n, 2), the quotient
/// of the integral brace by the ideal generated by n Z^4. It is a brace for
/// every n and coincides with `literal` for odd n.
enum class D13Variant
{
	reduced,
	literal,
};

struct D13Element
{
	std::uint32_t n = 1;
	std::array<std::uint32_t, 4> m{};
	friend bool operator==(D13Element const&, D13Element const&) = default;
};

/// Modulus used for the fourth coordinate.
std::uint32_t d13_fourth_modulus(std::uint32_t n, D13Variant variant);

/// (m)(n) = (k1, k2 + m1n1, k3 + m1n2 + m2n1, k4 + m2n1 - C(m1,2) n1), k = m + n.
/// Throws UsageError when x and y carry different moduli.
D13Element d13_mul(D13Element const& x, D13Element const& y,
                   D13Variant variant = D13Variant::reduced);

class D13Family
{
  public:
	using element_type = D13Element;

	explicit D13Family(std::uint32_t n, D13Variant variant = D13Variant::reduced);

	std::uint32_t n() const { return n_; }
	std::uint32_t fourth_modulus() const { return q_; }
	D13Variant variant() const { return variant_; }
	std::size_t order() const { return std::size_t{n_} * n_ * n_ * q_; }

	D13Element make(std::uint32_t m1, std::uint32_t m2, std::uint32_t m3, std::uint32_t m4) const;

	D13Element zero() const { return make(0, 0, 0, 0); }
	D13Element add(D13Element const& x, D13Element const& y) const;
	D13Element neg(D13Element const& x) const;
	D13Element mul(D13Element const& x, D13Element const& y) const { return d13_mul(x, y, variant_); }
	/// (-x1, x1^2 - x2, 2x1x2 - x3 - x1^3, x1x2 - x4 - C(x1,2) x1)
	D13Element inv(D13Element const& x) const;

	Element encode(D13Element const& x) const;
	D13Element decode(Element i) const;
	std::string label(D13Element const& x) const;

	BraceTable materialize(BuildLimits const& limits = {}) const;

  private:
	void check(D13Element const& x) const;

	std::uint32_t n_, q_;
	D13Variant variant_;
};

/// Materialized D(1,3) for parameter n.
BraceTable d13_brace(std::uint32_t n, D13Variant variant = D13Variant::reduced,
                     BuildLimits const& limits = {});

// ---------------------------------------------------------------- trivial

/// The trivial brace on Z_N (multiplication equals addition).
BraceTable trivial_brace(std::uint32_t order, BuildLimits const& limits = {});

} // namespace bracelab
