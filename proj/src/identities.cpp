#include "bracelab/identities.hpp"
#include "bracelab/parallel.hpp"
#include "bracelab/series.hpp"
#include "bracelab/subsets.hpp"

#include <optional>

namespace bracelab {

bool IdentityReport::passed() const
{
	for (auto const& r : results)
		if (!r.passed())
			return false;
	return true;
}

std::uint64_t IdentityReport::evaluated() const
{
	std::uint64_t n = 0;
	for (auto const& r : results)
		n += r.evaluated;
	return n;
}

IdentityResult const* IdentityReport::find(std::string_view id) const
{
	for (auto const& r : results)
		if (r.id == id)
			return &r;
	return nullptr;
}

namespace {

constexpr unsigned max_arity = 8;

struct Tally
{
	std::uint64_t evaluated = 0, failed = 0;
	std::optional<std::uint64_t> first;
};

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp)
{
	std::uint64_t r = 1;
	for (unsigned i = 0; i < exp; ++i)
	{
		if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
			return std::numeric_limits<std::uint64_t>::max();
		r *= base;
	}
	return r;
}

// Evaluates ok(tuple) over all order^arity tuples in lexicographic order, or
// over a seeded sample when that exceeds the tuple cap.
template <class Ok>
IdentityResult scan(std::string id, std::string statement, BraceTable const& b, unsigned arity,
                    IdentityOptions const& opt, std::uint64_t lane, Ok&& ok)
{
	std::uint64_t const n = b.order();
	std::uint64_t const total = saturating_pow(n, arity);
	bool const exhaustive = total <= opt.tuple_cap;
	std::uint64_t const count = exhaustive ? total : opt.samples;
	SeededStream const rng(opt.seed);

	auto decode = [&](std::uint64_t t, Element* out) {
		if (exhaustive)
			for (unsigned j = arity; j-- > 0; t /= n)
				out[j] = static_cast<Element>(t % n);
		else
			for (unsigned j = 0; j < arity; ++j)
				out[j] = static_cast<Element>(rng.draw(t, lane * max_arity + j, n));
	};

	auto const tallies = map_chunks<Tally>(count, 8192, [&](std::uint64_t lo, std::uint64_t hi) {
		Tally t;
		Element tuple[max_arity];
		for (std::uint64_t i = lo; i < hi; ++i)
		{
			decode(i, tuple);
			++t.evaluated;
			if (!ok(tuple))
			{
				++t.failed;
				if (!t.first)
					t.first = i;
			}
		}
		return t;
	});

	IdentityResult r;
	r.id = std::move(id);
	r.statement = std::move(statement);
	r.exhaustive = exhaustive;
	std::optional<std::uint64_t> first;
	for (auto const& t : tallies)
	{
		r.evaluated += t.evaluated;
		r.failed += t.failed;
		if (!first && t.first)
			first = t.first;
	}
	if (first)
	{
		r.first_failure.resize(arity);
		decode(*first, r.first_failure.data());
	}
	return r;
}

struct Shape
{
	unsigned plus, minus;
};

// Shapes (n, k) of the signed-sum identity checked by the universal suite.
constexpr Shape signed_sum_shapes[] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2},
                                       {3, 0}, {2, 1}, {1, 2}, {0, 3}};

} // namespace

IdentityReport run_universal(BraceTable const& b, IdentityOptions const& opt)
{
	IdentityReport rep;
	rep.seed = opt.seed;
	rep.gate = "universal identities (hold in every left brace)";
	std::uint64_t lane = 0;

	auto three = [&](char const* id, char const* statement, auto fn) {
		rep.results.push_back(scan(id, statement, b, 3, opt, lane++, [&](Element const* t) {
			auto [l, r] = fn(b, t[0], t[1], t[2]);
			return l == r;
		}));
	};
	three("L2.i", "a*(b+c) = a*b + a*c",
	      [](auto const& br, Element a, Element x, Element y) { return identity::l2_i(br, a, x, y); });
	three("L2.ii", "(ab)*c = a*(b*c) + b*c + a*c",
	      [](auto const& br, Element a, Element x, Element y) { return identity::l2_ii(br, a, x, y); });
	three("L2.iii", "(a+b)*c = a*(b'*c) + b'*c + a*c, b' = lambda_{a^-1}(b)",
	      [](auto const& br, Element a, Element x, Element y) { return identity::l2_iii(br, a, x, y); });
	three("L2.iv", "lambda_y(b*a) = (y b y^-1) * lambda_y(a)",
	      [](auto const& br, Element y, Element x, Element a) { return identity::l2_iv(br, y, x, a); });
	rep.results.push_back(scan("L2.v", "y b y^-1 = lambda_y(lambda_b(y^-1) - y^-1 + b)", b, 2, opt,
	                           lane++, [&](Element const* t) {
		                           auto [l, r] = identity::l2_v(b, t[0], t[1]);
		                           return l == r;
	                           }));
	rep.results.push_back(scan("L2.v'", "y b y^-1 = lambda_y(b*y^-1 + b)", b, 2, opt, lane++,
	                           [&](Element const* t) {
		                           auto [l, r] = identity::l2_v_alt(b, t[0], t[1]);
		                           return l == r;
	                           }));

	for (auto [plus, minus] : signed_sum_shapes)
	{
		std::string const id = "L2.2[" + std::to_string(plus) + "," + std::to_string(minus) + "]";
		rep.results.push_back(scan(id, "a(sum b - sum c) = sum ab - sum ac + (k-n+1)a", b,
		                           1 + plus + minus, opt, lane++, [&](Element const* t) {
			                           std::span<Element const> bs(t + 1, plus), cs(t + 1 + plus, minus);
			                           auto [l, r] = identity::signed_sum(b, t[0], bs, cs);
			                           return l == r;
		                           }));
	}

	// P2.3 / P2.4: every element, every exponent 1..max_exponent.
	for (int which = 0; which < 2; ++which)
	{
		IdentityResult r;
		r.id = which == 0 ? "P2.3" : "P2.4";
		r.statement = which == 0 ? "a^n = sum C(n,i) a_i" : "a^n * a = sum C(n,i) a_{i+1}";
		for (Element a = 0; a < b.order(); ++a)
			for (unsigned n = 1; n <= opt.max_exponent; ++n)
			{
				auto const sides = identity::power_expansion(b, a, n)[which];
				++r.evaluated;
				if (sides.first != sides.second && r.failed++ == 0)
				{
					r.first_failure = {a};
					r.first_failure_params = {static_cast<long long>(n)};
				}
			}
		rep.results.push_back(std::move(r));
	}
	return rep;
}

namespace {

class Section4
{
  public:
	Section4(BraceTable const& b, IdentityReport& rep) : b_(b), rep_(rep) {}

	// Records one evaluation of `id`; params identify the instance.
	void check(std::string const& id, char const* statement, bool ok, Element a,
	           std::vector<long long> params = {})
	{
		IdentityResult* r = nullptr;
		for (auto& x : rep_.results)
			if (x.id == id)
				r = &x;
		if (!r)
		{
			rep_.results.push_back({});
			r = &rep_.results.back();
			r->id = id;
			r->statement = statement;
		}
		++r->evaluated;
		if (!ok && r->failed++ == 0)
		{
			r->first_failure = {a};
			r->first_failure_params = std::move(params);
		}
	}

	void skip(std::string const& id, char const* statement, std::string note)
	{
		IdentityResult r;
		r.id = id;
		r.statement = statement;
		r.skipped = true;
		r.note = std::move(note);
		rep_.results.push_back(std::move(r));
	}

	Element times(Integer k, Element x) const { return bracelab::times(b_, std::move(k), x); }
	Element pow(Element x, Integer k) const { return power(b_, x, std::move(k)); }
	Element star(Element x, Element y) const { return bracelab::star(b_, x, y); }
	Element add(Element x, Element y) const { return b_.add(x, y); }
	Element sub(Element x, Element y) const { return bracelab::sub(b_, x, y); }

  private:
	BraceTable const& b_;
	IdentityReport& rep_;
};

struct Statement
{
	char const* id;
	char const* text;
};

constexpr Statement zl3_statements[] = {
    {"L4.1", "na = 0 implies nb = nc1 = nc2 = nc = 0"},
    {"L4.2.i", "a^k = ka + C(k,2)b + C(k,3)c1"},
    {"L4.2.ii", "ka = a^k - C(k,2)b - C(k,3)c1"},
    {"L4.2.ii'", "ka = (a^k - C(k,2)b)(-C(k,3)c1)"},
    {"L4.2.iii", "a^k * a = kb + C(k,2)c1"},
    {"L4.2.iv", "a^k * b = kc1"},
    {"L4.2.v", "b^k * a = kc1 + kz = kb * a = kc2"},
    {"L4.2.vi", "kb * b = b^k * b = k(b * b)"},
    {"L4.2.vii", "ka + sb - a^k((s - C(k,2))b) lies in zeta_1"},
    {"L4.3", "b * b = 0"},
};

constexpr Statement zl2_statements[] = {
    {"T1.a", "a^k = ka + C(k,2)c"},
    {"T1.b", "a^n * a = na * a = nc for all integers n"},
    {"T1.c", "(alpha a + gamma c)(alpha1 a + gamma1 c) = (alpha+alpha1)a + (gamma+gamma1+alpha alpha1)c"},
    {"T1.inv", "(alpha a + gamma c)^-1 = -alpha a + (alpha^2 - gamma)c"},
};

void run_zl3(Section4& s, BraceTable const& b, Element a, SubsetMask const& C1, unsigned K)
{
	Element const bb = s.star(a, a);
	Element const c1 = s.star(a, bb), c2 = s.star(bb, a);
	Element const z = s.sub(c2, c1), c = s.star(bb, bb);
	std::uint64_t const n = additive_order(b, a);
	auto const* st = zl3_statements;

	for (Element e : {bb, c1, c2, c})
		s.check(st[0].id, st[0].text, s.times(n, e) == 0, a, {static_cast<long long>(n)});

	for (unsigned k = 1; k <= K; ++k)
	{
		long long const kk = k;
		Integer const ck2 = binomial(k, 2), ck3 = binomial(k, 3);
		Element const ak = s.pow(a, k), bk = s.pow(bb, k);
		Element const ka = s.times(k, a), kb = s.times(k, bb);

		Element const expansion = s.add(s.add(ka, s.times(ck2, bb)), s.times(ck3, c1));
		s.check(st[1].id, st[1].text, ak == expansion, a, {kk});

		Element const head = s.sub(ak, s.times(ck2, bb));
		s.check(st[2].id, st[2].text, ka == s.sub(head, s.times(ck3, c1)), a, {kk});
		s.check(st[3].id, st[3].text, ka == b.mul(head, s.times(-ck3, c1)), a, {kk});

		s.check(st[4].id, st[4].text, s.star(ak, a) == s.add(kb, s.times(ck2, c1)), a, {kk});
		s.check(st[5].id, st[5].text, s.star(ak, bb) == s.times(k, c1), a, {kk});

		Element const bka = s.star(bk, a), sum = s.add(s.times(k, c1), s.times(k, z));
		Element const kba = s.star(kb, a), kc2 = s.times(k, c2);
		s.check(st[6].id, st[6].text, bka == sum && sum == kba && kba == kc2, a, {kk});

		Element const kbb = s.star(kb, bb), bkb = s.star(bk, bb);
		s.check(st[7].id, st[7].text, kbb == bkb && bkb == s.times(k, c), a, {kk});

		for (unsigned sv = 0; sv <= K; ++sv)
		{
			Element const lhs = s.add(ka, s.times(sv, bb));
			Element const rhs = b.mul(ak, s.times(Integer(sv) - ck2, bb));
			s.check(st[8].id, st[8].text, C1.contains(s.sub(lhs, rhs)), a,
			        {kk, static_cast<long long>(sv)});
		}
	}
	s.check(st[9].id, st[9].text, c == 0, a);
}

void run_zl2(Section4& s, BraceTable const& b, Element a, unsigned K)
{
	Element const c = s.star(a, a);
	auto const* st = zl2_statements;
	int const k = static_cast<int>(K);

	for (int i = 1; i <= k; ++i)
		s.check(st[0].id, st[0].text,
		        s.pow(a, i) == s.add(s.times(i, a), s.times(binomial(i, 2), c)), a, {i});

	for (int i = -k; i <= k; ++i)
	{
		Element const lhs = s.star(s.pow(a, i), a), mid = s.star(s.times(i, a), a);
		s.check(st[1].id, st[1].text, lhs == mid && mid == s.times(i, c), a, {i});
	}

	auto elem = [&](int alpha, int gamma) { return s.add(s.times(alpha, a), s.times(gamma, c)); };
	for (int al = 0; al <= k; ++al)
		for (int ga = 0; ga <= k; ++ga)
		{
			Element const x = elem(al, ga);
			s.check(st[3].id, st[3].text, b.inv(x) == elem(-al, al * al - ga), a, {al, ga});
			for (int al1 = 0; al1 <= k; ++al1)
				for (int ga1 = 0; ga1 <= k; ++ga1)
					s.check(st[2].id, st[2].text,
					        b.mul(x, elem(al1, ga1)) == elem(al + al1, ga + ga1 + al * al1), a,
					        {al, ga, al1, ga1});
		}
}

} // namespace

IdentityReport run_section4(BraceTable const& b, IdentityOptions const& opt)
{
	IdentityReport rep;
	rep.seed = opt.seed;
	Section4 s(b, rep);

	auto skip_all = [&](std::string const& why) {
		rep.gate = "hypotheses unmet: " + why;
		for (auto const& st : zl3_statements)
			s.skip(st.id, st.text, why);
		for (auto const& st : zl2_statements)
			s.skip(st.id, st.text, why);
		return rep;
	};

	if (is_trivial_brace(b))
		return skip_all("brace is abelian");
	auto const upper = upper_central_series(b);
	auto const length = zl(upper);
	if (!length || (*length != 2 && *length != 3))
		return skip_all(length ? "zl = " + std::to_string(*length) : std::string("not star-hypercentral"));
	auto const gen = find_first(b.order(), [&](std::uint64_t x) {
		return is_generator(b, static_cast<Element>(x));
	});
	if (!gen)
		return skip_all("not one-generator");
	auto const a = static_cast<Element>(*gen);

	rep.gate = "one-generator (a = " + b.label(a) + "), non-abelian, zl = " + std::to_string(*length);
	if (*length == 3)
	{
		run_zl3(s, b, a, upper.term(1), opt.section4_bound);
		for (auto const& st : zl2_statements)
			s.skip(st.id, st.text, "requires zl = 2");
	}
	else
	{
		for (auto const& st : zl3_statements)
			s.skip(st.id, st.text, "requires zl = 3");
		run_zl2(s, b, a, opt.section4_bound);
	}
	return rep;
}

IdentityReport run_identities(BraceTable const& b, IdentitySuite suite, IdentityOptions const& opt)
{
	if (suite == IdentitySuite::universal)
		return run_universal(b, opt);
	if (suite == IdentitySuite::section4)
		return run_section4(b, opt);
	auto rep = run_universal(b, opt);
	auto s4 = run_section4(b, opt);
	rep.gate += "; " + s4.gate;
	for (auto& r : s4.results)
		rep.results.push_back(std::move(r));
	return rep;
}

} // namespace bracelab
