#include "bracelab/parametric.hpp"

#include <numeric>

namespace bracelab {

namespace {

void check_order(std::size_t order, BuildLimits const& limits)
{
	if (order > limits.max_order)
		throw ResourceError("brace order " + std::to_string(order) + " exceeds cap " +
		                    std::to_string(limits.max_order));
}

template <class Backend>
BraceTable materialize_backend(Backend const& backend, std::size_t order)
{
	std::vector<Element> add(order * order), mul(order * order);
	std::vector<std::string> labels(order);
	for (Element i = 0; i < order; ++i)
	{
		auto const x = backend.decode(i);
		labels[i] = backend.label(x);
		for (Element j = 0; j < order; ++j)
		{
			auto const y = backend.decode(j);
			add[i * order + j] = backend.encode(backend.add(x, y));
			mul[i * order + j] = backend.encode(backend.mul(x, y));
		}
	}
	auto table = BraceTable::from_tables(order, std::move(add), std::move(mul));
	table.set_labels(std::move(labels));
	return table;
}

std::uint32_t mod(std::int64_t v, std::uint32_t m)
{
	auto r = v % static_cast<std::int64_t>(m);
	return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

// C(m,2) on the canonical representative.
std::int64_t choose2(std::uint32_t m)
{
	return static_cast<std::int64_t>(m) * (static_cast<std::int64_t>(m) - 1) / 2;
}

} // namespace

// ---------------------------------------------------------------- D(1,2)

D12Element d12_mul(D12Element const& x, D12Element const& y)
{
	return {x.m1 + y.m1, x.m2 + y.m2 + x.m1 * y.m1};
}

D12Quotient::D12Quotient(std::uint32_t modulus) : m_(modulus)
{
	if (modulus == 0)
		throw UsageError("d12 modulus must be positive");
}

D12Residue D12Quotient::add(D12Residue x, D12Residue y) const
{
	return {(x.m1 + y.m1) % m_, (x.m2 + y.m2) % m_};
}

D12Residue D12Quotient::neg(D12Residue x) const
{
	return {(m_ - x.m1) % m_, (m_ - x.m2) % m_};
}

D12Residue D12Quotient::mul(D12Residue x, D12Residue y) const
{
	std::uint64_t const m = m_;
	return {static_cast<std::uint32_t>((x.m1 + y.m1) % m),
	        static_cast<std::uint32_t>((x.m2 + std::uint64_t{y.m2} + std::uint64_t{x.m1} * y.m1) % m)};
}

D12Residue D12Quotient::inv(D12Residue x) const
{
	std::int64_t const n1 = x.m1, n2 = x.m2;
	return {mod(-n1, m_), mod(n1 * n1 - n2, m_)};
}

D12Residue D12Quotient::reduce(D12Element const& x) const
{
	auto r = [this](Integer v) {
		v %= m_;
		if (v < 0)
			v += m_;
		return static_cast<std::uint32_t>(v);
	};
	return {r(x.m1), r(x.m2)};
}

std::string D12Quotient::label(D12Residue x) const
{
	return "(" + std::to_string(x.m1) + "," + std::to_string(x.m2) + ")";
}

BraceTable D12Quotient::materialize(BuildLimits const& limits) const
{
	check_order(order(), limits);
	auto table = materialize_backend(*this, order());
	table.set_family("d12 " + std::to_string(m_));
	table.set_description("D(1,2) mod " + std::to_string(m_) + " (finite quotient of D(1,2))");
	return table;
}

BraceTable d12_quotient(std::uint32_t modulus, BuildLimits const& limits)
{
	return D12Quotient(modulus).materialize(limits);
}

// ---------------------------------------------------------------- D(1,3)

std::uint32_t d13_fourth_modulus(std::uint32_t n, D13Variant variant)
{
	if (variant == D13Variant::reduced && n % 2 == 0)
		return n / 2;
	return n;
}

D13Element d13_mul(D13Element const& x, D13Element const& y, D13Variant variant)
{
	if (x.n != y.n)
		throw UsageError("d13_mul: operands over different moduli (" + std::to_string(x.n) +
		                 " vs " + std::to_string(y.n) + ")");
	std::uint32_t const n = x.n, q = d13_fourth_modulus(n, variant);
	std::int64_t const x1 = x.m[0], x2 = x.m[1], x3 = x.m[2], x4 = x.m[3];
	std::int64_t const y1 = y.m[0], y2 = y.m[1], y3 = y.m[2], y4 = y.m[3];
	return {n,
	        {mod(x1 + y1, n), mod(x2 + y2 + x1 * y1, n), mod(x3 + y3 + x1 * y2 + x2 * y1, n),
	         mod(x4 + y4 + x2 * y1 - choose2(x.m[0]) * y1, q)}};
}

D13Family::D13Family(std::uint32_t n, D13Variant variant)
    : n_(n), q_(d13_fourth_modulus(n, variant)), variant_(variant)
{
	if (n == 0)
		throw UsageError("d13 parameter n must be positive");
}

D13Element D13Family::make(std::uint32_t m1, std::uint32_t m2, std::uint32_t m3,
                           std::uint32_t m4) const
{
	return {n_, {m1 % n_, m2 % n_, m3 % n_, m4 % q_}};
}

void D13Family::check(D13Element const& x) const
{
	if (x.n != n_)
		throw UsageError("D(1,3) element over modulus " + std::to_string(x.n) +
		                 " used with n = " + std::to_string(n_));
}

D13Element D13Family::add(D13Element const& x, D13Element const& y) const
{
	check(x);
	check(y);
	return make(x.m[0] + y.m[0], x.m[1] + y.m[1], x.m[2] + y.m[2], x.m[3] + y.m[3]);
}

D13Element D13Family::neg(D13Element const& x) const
{
	check(x);
	return make(n_ - x.m[0], n_ - x.m[1], n_ - x.m[2], q_ - x.m[3]);
}

D13Element D13Family::inv(D13Element const& x) const
{
	check(x);
	std::int64_t const x1 = x.m[0], x2 = x.m[1], x3 = x.m[2], x4 = x.m[3];
	return {n_,
	        {mod(-x1, n_), mod(x1 * x1 - x2, n_), mod(2 * x1 * x2 - x3 - x1 * x1 * x1, n_),
	         mod(x1 * x2 - x4 - choose2(x.m[0]) * x1, q_)}};
}

Element D13Family::encode(D13Element const& x) const
{
	return ((x.m[0] * n_ + x.m[1]) * n_ + x.m[2]) * q_ + x.m[3];
}

D13Element D13Family::decode(Element i) const
{
	D13Element x{n_, {}};
	x.m[3] = i % q_;
	i /= q_;
	x.m[2] = i % n_;
	i /= n_;
	x.m[1] = i % n_;
	x.m[0] = i / n_;
	return x;
}

std::string D13Family::label(D13Element const& x) const
{
	return "(" + std::to_string(x.m[0]) + "," + std::to_string(x.m[1]) + "," +
	       std::to_string(x.m[2]) + "," + std::to_string(x.m[3]) + ")";
}

BraceTable D13Family::materialize(BuildLimits const& limits) const
{
	check_order(order(), limits);
	auto table = materialize_backend(*this, order());
	bool const lit = variant_ == D13Variant::literal;
	table.set_family("d13 " + std::to_string(n_) + (lit ? " literal" : " reduced"));
	std::string d = "D(1,3) with n = " + std::to_string(n_);
	if (lit && n_ % 2 == 0)
		d += " (literal formula; not associative for even n)";
	else if (q_ != n_)
		d += " (fourth coordinate mod " + std::to_string(q_) + ")";
	table.set_description(std::move(d));
	return table;
}

BraceTable d13_brace(std::uint32_t n, D13Variant variant, BuildLimits const& limits)
{
	return D13Family(n, variant).materialize(limits);
}

// ---------------------------------------------------------------- trivial

BraceTable trivial_brace(std::uint32_t order, BuildLimits const& limits)
{
	if (order == 0)
		throw UsageError("trivial brace order must be positive");
	check_order(order, limits);
	std::vector<Element> add(std::size_t{order} * order);
	for (Element i = 0; i < order; ++i)
		for (Element j = 0; j < order; ++j)
			add[i * order + j] = (i + j) % order;
	auto mul = add;
	auto table = BraceTable::from_tables(order, std::move(add), std::move(mul));
	table.set_family("trivial " + std::to_string(order));
	table.set_description("trivial brace on Z_" + std::to_string(order));
	return table;
}

} // namespace bracelab
