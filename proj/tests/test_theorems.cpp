#include "support.hpp"

#include "bracelab/theorems.hpp"

#include <doctest.h>

using namespace bracelab;

namespace {

Element index_of(BraceTable const& b, std::string const& label)
{
	for (Element x = 0; x < b.order(); ++x)
		if (b.label(x) == label)
			return x;
	FAIL("no element labelled " << label);
	return 0;
}

} // namespace

TEST_CASE("generators")
{
	CHECK(find_generators(trivial_brace(4)) == std::vector<Element>{1, 3});
	auto const d13 = d13_brace(2);
	auto const g13 = find_generators(d13);
	CHECK(std::count(g13.begin(), g13.end(), index_of(d13, "(1,0,0,0)")) == 1);
	auto const d12 = d12_quotient(2);
	auto const g12 = find_generators(d12);
	CHECK(std::count(g12.begin(), g12.end(), index_of(d12, "(1,0)")) == 1);
	CHECK(find_generators(oracle::product(trivial_brace(2), trivial_brace(2))).empty());
	CHECK(first_generator(d12) == index_of(d12, "(1,0)"));
}

TEST_CASE("canonical data of D(1,3)")
{
	for (std::uint32_t n : {3u, 4u})
	{
		auto const b = d13_brace(n);
		auto const d = build_canonical(b, index_of(b, "(1,0,0,0)"));
		CHECK(b.label(d.b) == "(0,1,0,0)");
		CHECK(b.label(d.c1) == "(0,0,1,0)");
		CHECK(b.label(d.c2) == "(0,0,1,1)");
		CHECK(b.label(d.z) == "(0,0,0,1)");
		CHECK(d.bb == 0);
		CHECK(d.n == n);
		CHECK_FALSE(canonical_violation(b, d, upper_central_series(b)).has_value());
	}
	// With n = 2 the fourth coordinate is taken mod 1, so z vanishes.
	auto const b = d13_brace(2);
	CHECK(build_canonical(b, index_of(b, "(1,0,0,0)")).z == 0);
}

TEST_CASE("canonical data of trivial braces and D(1,2)")
{
	auto const t = build_canonical(trivial_brace(5), 2);
	CHECK(t.b == 0);
	CHECK(t.c1 == 0);
	CHECK(t.c2 == 0);
	CHECK(t.z == 0);
	auto const b = d12_quotient(3);
	CHECK(b.label(build_canonical(b, index_of(b, "(1,0)")).b) == "(0,1)");
	CHECK_THROWS_AS(build_canonical(b, index_of(b, "(0,1)")), UsageError);
}

TEST_CASE("canonical invariants hold on gated quotients")
{
	for (std::uint32_t n : {2u, 3u})
	{
		auto const b = d13_brace(n);
		for (auto const& I : enumerate_ideals(b))
		{
			auto const q = quotient(b, I).brace;
			auto const upper = upper_central_series(q);
			for (Element g : find_generators(q))
				CHECK_FALSE(canonical_violation(q, build_canonical(q, g), upper).has_value());
		}
	}
}

TEST_CASE("epi from D(1,2) onto D(1,2) mod 5 is the identity")
{
	auto const b = d12_quotient(5);
	auto const r = epi_from_d12(b);
	REQUIRE(r.gate_passed);
	REQUIRE(r.passed());
	auto const* w = r.witness();
	for (Element x = 0; x < b.order(); ++x)
		CHECK(w->mapping[x] == x);
	CHECK(w->kernel_size == 1);
	CHECK(r.note.find("mod 5") != std::string::npos);
}

TEST_CASE("epi from D(1,2) onto proper quotients")
{
	auto const b = d12_quotient(4);
	int checked = 0;
	for (auto const& I : enumerate_ideals(b))
	{
		if (I.is_zero() || I.is_whole())
			continue;
		auto const q = quotient(b, I).brace;
		if (is_trivial_brace(q))
			continue;
		auto const r = epi_from_d12(q);
		CHECK(r.gate_passed);
		CHECK(r.passed());
		++checked;
	}
	CHECK(checked > 0);
	auto const abelian = epi_from_d12(trivial_brace(4));
	CHECK_FALSE(abelian.gate_passed);
	CHECK(abelian.gate_note.find("abelian") != std::string::npos);
	CHECK_FALSE(abelian.passed());
}

TEST_CASE("epi from D(1,3)")
{
	auto const b = d13_brace(3);
	auto const r = epi_from_d13(b);
	REQUIRE(r.passed());
	CHECK(r.witness()->kernel_size == 1);
	CHECK(r.witness()->is_surjective);

	// Quotients by order-3 central ideals: the kernel is nonzero.
	int checked = 0;
	for (auto const& I : enumerate_ideals(b))
	{
		if (I.size() != 3)
			continue;
		auto const q = quotient(b, I).brace;
		auto const e = epi_from_d13(q);
		if (!e.gate_passed)
			continue;
		CHECK(e.passed());
		CHECK(e.witness()->kernel_size == 3);
		++checked;
	}
	CHECK(checked > 0);

	// zl = 2 braces meet the weaker zeta_3 gate as well.
	CHECK(epi_from_d13(d12_quotient(3)).passed());
	CHECK_FALSE(epi_from_d13(trivial_brace(3)).gate_passed);
	CHECK_FALSE(epi_from_d13(oracle::dihedral6()).gate_passed);
}

TEST_CASE("passing witnesses have ideal kernels and the right image size")
{
	for (auto const& b : {d13_brace(2), d13_brace(3), d12_quotient(4), d12_quotient(6)})
		for (auto const& I : enumerate_ideals(b))
		{
			auto const q = quotient(b, I).brace;
			for (auto const& r : {epi_from_d12(q), epi_from_d13(q)})
			{
				auto const* w = r.witness();
				if (!w)
					continue;
				// Recover the source to test the kernel.
				auto const src = r.family == "d12" ? d12_quotient(std::uint32_t(additive_exponent(q)))
				                                   : d13_brace(std::uint32_t(additive_order(q, r.attempts.back().generator)));
				SubsetMask kernel(src.order());
				for (Element x = 0; x < src.order(); ++x)
					if (w->mapping[x] == 0)
						kernel.insert(x);
				CHECK(bool(is_ideal(src, kernel)));
				CHECK(kernel.size() == w->kernel_size);
				CHECK(src.order() / kernel.size() == q.order());
			}
		}
}

TEST_CASE("zl = 2 product law on coefficient tuples")
{
	auto const b = d12_quotient(6);
	auto const report = epi_from_d12(b);
	auto const* w = report.witness();
	REQUIRE(w != nullptr);
	D12Quotient const fam(6);
	for (std::uint32_t al = 0; al < 6; ++al)
		for (std::uint32_t ga = 0; ga < 6; ++ga)
			for (std::uint32_t al1 = 0; al1 < 6; ++al1)
				for (std::uint32_t ga1 = 0; ga1 < 6; ++ga1)
				{
					auto const lhs = b.mul(w->mapping[fam.encode({al, ga})], w->mapping[fam.encode({al1, ga1})]);
					auto const rhs = w->mapping[fam.encode({(al + al1) % 6, (ga + ga1 + al * al1) % 6})];
					CHECK(lhs == rhs);
				}
}

TEST_CASE("check_homomorphism reports counterexamples")
{
	auto const b = d12_quotient(3);
	std::vector<Element> id(9);
	for (Element x = 0; x < 9; ++x)
		id[x] = x;
	CHECK(check_homomorphism(b, b, id).is_epimorphism());

	auto swapped = id;
	std::swap(swapped[1], swapped[2]);
	auto const w = check_homomorphism(b, b, swapped);
	CHECK_FALSE(w.is_epimorphism());
	CHECK(w.counterexample.size() == 2);

	std::vector<Element> zero(9, 0);
	auto const z = check_homomorphism(b, b, zero);
	CHECK(z.is_additive);
	CHECK(z.is_multiplicative);
	CHECK_FALSE(z.is_surjective);
	CHECK(z.failed_law == "surjectivity");
	CHECK(z.kernel_size == 9);
	CHECK_THROWS_AS(check_homomorphism(b, b, std::vector<Element>(3)), UsageError);
}

TEST_CASE("A^2 is abelian under the zeta_3 gate")
{
	for (std::uint32_t n = 2; n <= 4; ++n)
	{
		auto const r = a2_abelian_check(d13_brace(n));
		CHECK(r.gate_passed);
		CHECK(r.passed());
		CHECK(r.left2 == r.right2);
	}
	auto const t = a2_abelian_check(trivial_brace(6));
	CHECK(t.passed());
	CHECK(t.left2 == std::vector<Element>{0});
	CHECK_FALSE(a2_abelian_check(oracle::dihedral6()).gate_passed);
}

TEST_CASE("classification tables")
{
	auto const t = classify_quotients(trivial_brace(6));
	CHECK(t.passed());
	CHECK(t.rows.size() == 4);
	for (auto const& r : t.rows)
	{
		CHECK(r.abelian);
		CHECK(r.epi_d12 == Outcome::not_applicable);
		CHECK(r.epi_d13 == Outcome::not_applicable);
		CHECK(r.a2 == Outcome::not_applicable);
	}

	auto const d12 = classify_quotients(d12_quotient(2));
	CHECK(d12.passed());
	for (auto const& r : d12.rows)
		if (r.one_generator && !r.abelian)
			CHECK(r.epi_d12 == Outcome::pass);

	auto const d13 = classify_quotients(d13_brace(2));
	CHECK(d13.passed());
	CHECK(d13.rows.front().ideal_size == 1);
	CHECK(d13.rows.front().zl == 3u);
	for (auto const& r : d13.rows)
		if (!r.abelian)
		{
			CHECK(r.epi_d13 == Outcome::pass);
			CHECK(r.a2 == Outcome::pass);
		}
}
