#include "bracelab/brace_io.hpp"
#include "bracelab/parametric.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bracelab {

void write_brace(std::ostream& out, BraceTable const& b)
{
	std::size_t const n = b.order();
	std::string buf;
	auto table = [&](char const* name, std::vector<Element> const& t) {
		out << name << '\n';
		for (std::size_t i = 0; i < n; ++i)
		{
			buf.clear();
			for (std::size_t j = 0; j < n; ++j)
			{
				if (j)
					buf += ' ';
				buf += std::to_string(t[i * n + j]);
			}
			buf += '\n';
			out << buf;
		}
	};
	out << "brace v1\n";
	out << "order " << n << '\n';
	table("addition", b.add_table());
	table("multiplication", b.mul_table());
	if (!b.family().empty())
		out << "# family " << b.family() << '\n';
}

void save_brace(std::string const& path, BraceTable const& b)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw UsageError("cannot open " + path + " for writing");
	write_brace(out, b);
	if (!out)
		throw UsageError("write to " + path + " failed");
}

namespace {

class LineReader
{
  public:
	explicit LineReader(std::istream& in) : in_(in) {}

	// Next non-comment line; records family comments on the way.
	std::string next(char const* expecting)
	{
		std::string line;
		while (std::getline(in_, line))
		{
			++lineno_;
			if (!line.empty() && line.back() == '\r')
				fail("CR line ending");
			if (!line.empty() && line[0] == '#')
			{
				note_comment(line);
				continue;
			}
			return line;
		}
		fail(std::string("unexpected end of file, expected ") + expecting);
	}

	void drain()
	{
		std::string line;
		while (std::getline(in_, line))
		{
			++lineno_;
			if (!line.empty() && line.back() == '\r')
				fail("CR line ending");
			if (line.empty() || line[0] != '#')
				fail("trailing content after multiplication table");
			note_comment(line);
		}
	}

	[[noreturn]] void fail(std::string const& msg) const
	{
		throw StructuralError("line " + std::to_string(lineno_) + ": " + msg);
	}

	std::string const& family() const { return family_; }

  private:
	void note_comment(std::string const& line)
	{
		constexpr std::string_view tag = "# family ";
		if (line.rfind(tag, 0) == 0)
			family_ = line.substr(tag.size());
	}

	std::istream& in_;
	std::size_t lineno_ = 0;
	std::string family_;
};

void parse_row(LineReader& r, std::string const& line, std::size_t n, Element* out)
{
	std::size_t pos = 0, count = 0;
	while (pos <= line.size())
	{
		std::size_t const end = std::min(line.find(' ', pos), line.size());
		if (end == pos)
			r.fail("empty field (fields are separated by single spaces)");
		if (count == n)
			r.fail("row has more than " + std::to_string(n) + " entries");
		std::uint64_t v = 0;
		auto [p, ec] = std::from_chars(line.data() + pos, line.data() + end, v);
		if (ec != std::errc{} || p != line.data() + end)
			r.fail("malformed index '" + line.substr(pos, end - pos) + "'");
		if (v >= n)
			r.fail("index " + std::to_string(v) + " out of range for order " + std::to_string(n));
		out[count++] = static_cast<Element>(v);
		pos = end + 1;
	}
	if (count != n)
		r.fail("row has " + std::to_string(count) + " entries, expected " + std::to_string(n));
}

} // namespace

BraceTable read_brace(std::istream& in, LoadOptions const& options)
{
	LineReader r(in);
	if (r.next("header") != "brace v1")
		r.fail("expected 'brace v1'");
	std::string const order_line = r.next("order line");
	if (order_line.rfind("order ", 0) != 0)
		r.fail("expected 'order N'");
	std::uint64_t n = 0;
	auto const digits = order_line.substr(6);
	auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
	if (ec != std::errc{} || p != digits.data() + digits.size() || n == 0)
		r.fail("bad order '" + digits + "'");
	if (n > (1u << 16))
		r.fail("order too large");

	auto table = [&](char const* name) {
		if (r.next(name) != name)
			r.fail(std::string("expected '") + name + "'");
		std::vector<Element> t(n * n);
		for (std::size_t i = 0; i < n; ++i)
			parse_row(r, r.next("table row"), n, t.data() + i * n);
		return t;
	};
	auto add = table("addition");
	auto mul = table("multiplication");
	r.drain();

	auto brace = BraceTable::from_tables(n, std::move(add), std::move(mul));
	if (!r.family().empty())
	{
		brace.set_family(r.family());
		if (!restore_family(brace))
			brace.set_family({});
	}
	if (!options.unchecked)
	{
		auto report = verify_axioms(brace, options.verify);
		if (auto const* f = report.first_failure())
			throw AxiomError("not a left brace: " + std::string(axiom_group(f->axiom)) + " (" +
			                     std::string(axiom_name(f->axiom)) + ") fails",
			                 std::move(report));
	}
	return brace;
}

BraceTable load_brace(std::string const& path, LoadOptions const& options)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw UsageError("cannot open " + path);
	auto b = read_brace(in, options);
	if (b.description().empty())
		b.set_description(path);
	return b;
}

bool restore_family(BraceTable& b)
{
	std::istringstream s(b.family());
	std::string kind;
	std::uint32_t param = 0;
	s >> kind >> param;
	if (!s || param == 0)
		return false;
	try
	{
		if (kind == "d12")
		{
			auto ref = d12_quotient(param, {b.order()});
			if (ref != b)
				return false;
			b.set_labels(ref.labels());
			b.set_description(ref.description());
			return true;
		}
		if (kind == "d13")
		{
			std::string v;
			s >> v;
			auto const variant = v == "literal" ? D13Variant::literal : D13Variant::reduced;
			auto ref = d13_brace(param, variant, {b.order()});
			if (ref != b)
				return false;
			b.set_labels(ref.labels());
			b.set_description(ref.description());
			return true;
		}
		if (kind == "trivial")
		{
			auto ref = trivial_brace(param, {b.order()});
			if (ref != b)
				return false;
			b.set_description(ref.description());
			return true;
		}
	}
	catch (ResourceError const&)
	{
	}
	return false;
}

} // namespace bracelab
