#include "bracelab/cli.hpp"
#include "bracelab/brace_io.hpp"
#include "bracelab/parametric.hpp"
#include "bracelab/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>

namespace bracelab {

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_error = 2;

struct Input
{
	std::string path;
	bool unchecked = false;

	void add_to(CLI::App* cmd)
	{
		cmd->add_option("file", path, "Input .brace file")->required();
		cmd->add_flag("--unchecked", unchecked, "Skip axiom verification on load");
	}

	BraceTable load() const
	{
		LoadOptions opt;
		opt.unchecked = unchecked;
		return load_brace(path, opt);
	}
};

std::ofstream open_output(std::string const& path)
{
	std::ofstream f(path, std::ios::binary);
	if (!f)
		throw UsageError("cannot open " + path + " for writing");
	return f;
}

std::vector<Element> checked_elements(BraceTable const& b, std::vector<std::uint64_t> const& raw)
{
	std::vector<Element> out;
	for (auto x : raw)
	{
		if (x >= b.order())
			throw UsageError("element " + std::to_string(x) + " out of range for order " +
			                 std::to_string(b.order()));
		out.push_back(static_cast<Element>(x));
	}
	return out;
}

class Cli
{
  public:
	Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) { build(); }

	int run(std::vector<std::string> const& args)
	{
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		try
		{
			app_.parse(std::move(reversed));
		}
		catch (CLI::ParseError const& e)
		{
			int const code = app_.exit(e, out_, err_);
			return code == 0 ? exit_pass : exit_error;
		}
		try
		{
			return action_();
		}
		catch (AxiomError const& e)
		{
			err_ << "error: " << e.what() << "\n";
			if (auto const* f = e.report().first_failure())
				err_ << "first failure: " << axiom_group(f->axiom) << " " << axiom_name(f->axiom) << "\n";
			return exit_error;
		}
		catch (std::exception const& e)
		{
			err_ << "error: " << e.what() << "\n";
			return exit_error;
		}
	}

  private:
	void build();
	void build_make();

	CLI::App* command(std::string name, std::string help, std::function<int()> fn)
	{
		auto* cmd = app_.add_subcommand(std::move(name), std::move(help));
		cmd->callback([this, fn = std::move(fn)] { action_ = fn; });
		return cmd;
	}

	int emit(bool ok) const { return ok ? exit_pass : exit_fail; }

	std::ostream& out_;
	std::ostream& err_;
	CLI::App app_{"Finite left braces: constructions, star series, identities, structure theorems, YBE."};
	std::function<int()> action_;

	Input in_;
	std::string output_;
	std::size_t max_order_ = BuildLimits{}.max_order;
	std::uint32_t param_ = 0;
	bool literal_ = false;

	std::uint64_t seed_ = 0;
	std::uint64_t samples_ = 0;
	std::uint64_t cap_ = 0;
	std::size_t exhaustive_max_order_ = VerifyOptions{}.exhaustive_max_order;
	std::string kind_ = "all";
	std::string suite_ = "all";
	std::string family_ = "auto";
	unsigned max_exponent_ = IdentityOptions{}.max_exponent;
	unsigned bound_ = IdentityOptions{}.section4_bound;
	std::size_t enum_cap_ = EnumerateOptions{}.max_order;
	std::vector<std::uint64_t> elements_;
};

void Cli::build()
{
	app_.name("bracelab");
	app_.require_subcommand(1);
	app_.fallthrough(false);
	build_make();

	auto* verify = command("verify", "Check the left brace axioms LB1-LB3", [this] {
		Input raw = in_;
		raw.unchecked = true;
		auto const b = raw.load();
		VerifyOptions opt;
		opt.exhaustive_max_order = exhaustive_max_order_;
		if (samples_)
			opt.samples = samples_;
		opt.seed = seed_;
		auto const r = verify_axioms(b, opt);
		print_axioms(out_, b, r);
		return emit(r.passed());
	});
	verify->add_option("file", in_.path, "Input .brace file")->required();
	verify->add_option("--exhaustive-max-order", exhaustive_max_order_, "Sample cubic axioms above this order")
	    ->capture_default_str();
	verify->add_option("--samples", samples_, "Sampled triples per cubic axiom (default 1000000)");
	verify->add_option("--seed", seed_, "Seed for sampled checks")->capture_default_str();

	auto* series = command("series", "Left, right and upper star-central series", [this] {
		auto const b = in_.load();
		print_header(out_, b);
		if (kind_ == "all" || kind_ == "left")
			print_series(out_, b, left_series(b));
		if (kind_ == "all" || kind_ == "right")
			print_series(out_, b, right_series(b));
		if (kind_ == "all" || kind_ == "upper")
			print_series(out_, b, upper_central_series(b));
		return exit_pass;
	});
	in_.add_to(series);
	series->add_option("--kind", kind_, "Which series")
	    ->check(CLI::IsMember({"all", "left", "right", "upper"}))
	    ->capture_default_str();

	auto* zl_cmd = command("zl", "Length of the upper star-central series", [this] {
		auto const length = zl(in_.load());
		out_ << (length ? std::to_string(*length) : "none") << "\n";
		return emit(length.has_value());
	});
	in_.add_to(zl_cmd);

	auto* center = command("center", "The star-center zeta(*, A)", [this] {
		auto const b = in_.load();
		print_center(out_, b, star_center(b));
		return exit_pass;
	});
	in_.add_to(center);

	auto* nil = command("classify-nilpotency", "Series, Smoktunowicz class and zl", [this] {
		print_nilpotency(out_, in_.load());
		return exit_pass;
	});
	in_.add_to(nil);

	auto* gen = command("gen", "Subbrace generated by a set of elements", [this] {
		auto const b = in_.load();
		auto const xs = checked_elements(b, elements_);
		auto const s = generated_subbrace(b, xs);
		print_header(out_, b);
		out_ << "generators " << format_tuple(b, xs) << "\n";
		out_ << "subbrace size " << s.size() << (s.is_whole() ? " (whole brace)" : "") << "\n";
		print_subset(out_, b, s);
		return exit_pass;
	});
	in_.add_to(gen);
	gen->add_option("--elements", elements_, "Comma-separated element indices")->required()->delimiter(',');

	auto* ideals = command("ideals", "All ideals, by size then membership", [this] {
		auto const b = in_.load();
		auto const all = enumerate_ideals(b, {enum_cap_});
		print_header(out_, b);
		out_ << "ideals: " << all.size() << "\n";
		for (std::size_t i = 0; i < all.size(); ++i)
		{
			out_ << "ideal " << i << " size " << all[i].size() << "\n";
			print_subset(out_, b, all[i], "    ");
		}
		return exit_pass;
	});
	in_.add_to(ideals);
	ideals->add_option("--max-order", enum_cap_, "Refuse larger braces")->capture_default_str();

	auto* quot = command("quotient", "Quotient by the ideal generated additively by elements", [this] {
		auto const b = in_.load();
		auto const xs = checked_elements(b, elements_);
		auto I = additive_closure(b, xs);
		if (auto const v = is_ideal(b, I); !v)
			throw UsageError("additive closure of the given elements is not an ideal: " + v.reason);
		auto const q = quotient(b, I);
		auto f = open_output(output_);
		write_brace(f, q.brace);
		print_header(out_, b);
		out_ << "ideal size " << I.size() << "\n";
		print_subset(out_, b, I);
		out_ << "quotient order " << q.brace.order() << " written to " << output_ << "\n";
		return exit_pass;
	});
	in_.add_to(quot);
	quot->add_option("--ideal-elements", elements_, "Comma-separated element indices")
	    ->required()
	    ->delimiter(',');
	quot->add_option("-o,--output", output_, "Output .brace file")->required();

	auto* ident = command("identities", "Check the brace identities", [this] {
		auto const b = in_.load();
		IdentityOptions opt;
		if (samples_)
			opt.samples = samples_;
		if (cap_)
			opt.tuple_cap = cap_;
		opt.seed = seed_;
		opt.max_exponent = max_exponent_;
		opt.section4_bound = bound_;
		auto const suite = suite_ == "universal"  ? IdentitySuite::universal
		                   : suite_ == "section4" ? IdentitySuite::section4
		                                          : IdentitySuite::all;
		auto const r = run_identities(b, suite, opt);
		print_identities(out_, b, r);
		return emit(r.passed());
	});
	in_.add_to(ident);
	ident->add_option("--suite", suite_, "Identity suite")
	    ->check(CLI::IsMember({"all", "universal", "section4"}))
	    ->capture_default_str();
	ident->add_option("--samples", samples_, "Sampled tuples per identity above the cap (default 10000)");
	ident->add_option("--seed", seed_, "Seed for sampled tuples")->capture_default_str();
	ident->add_option("--max-exponent", max_exponent_, "Largest exponent for power expansions")
	    ->check(CLI::PositiveNumber)
	    ->capture_default_str();
	ident->add_option("--tuple-cap", cap_, "Exhaustive up to this many tuples (default 10000000)");
	ident->add_option("--bound", bound_, "Bound on k and s for generator identities")->capture_default_str();

	auto* epi = command("epi", "Canonical epimorphism from D(1,2) or D(1,3)", [this] {
		auto const b = in_.load();
		auto const fam = family_ == "d12" ? EpiFamily::d12 : family_ == "d13" ? EpiFamily::d13 : EpiFamily::automatic;
		auto const r = epi_report(b, fam);
		print_epi(out_, b, r);
		if (!r.gate_passed)
			return exit_error;
		return emit(r.passed());
	});
	in_.add_to(epi);
	epi->add_option("--family", family_, "Source family")
	    ->check(CLI::IsMember({"d12", "d13", "auto"}))
	    ->capture_default_str();

	auto* classify = command("classify", "Analyze the quotient by every ideal", [this] {
		auto const b = in_.load();
		auto const c = classify_quotients(b, {enum_cap_});
		print_classification(out_, b, c);
		if (!output_.empty())
		{
			auto f = open_output(output_);
			print_classification_csv(f, c);
		}
		return emit(c.passed());
	});
	in_.add_to(classify);
	classify->add_option("-o,--output", output_, "Also write comma-separated records here");
	classify->add_option("--max-order", enum_cap_, "Refuse larger braces")->capture_default_str();

	auto* a2 = command("a2check", "Whether A^2 is abelian and equals A^(2)", [this] {
		auto const b = in_.load();
		auto const r = a2_abelian_check(b);
		print_a2(out_, b, r);
		if (!r.gate_passed)
			return exit_error;
		return emit(r.passed());
	});
	in_.add_to(a2);

	auto* ybe = command("ybe", "Involutivity and braid relation of the associated solution", [this] {
		auto const b = in_.load();
		YbeOptions opt;
		if (cap_)
			opt.triple_cap = cap_;
		if (samples_)
			opt.samples = samples_;
		opt.seed = seed_;
		auto const inv = check_involutive(b);
		auto const braid = check_braid(b, opt);
		print_ybe(out_, b, inv, braid, opt);
		if (!output_.empty())
		{
			auto f = open_output(output_);
			dump_solution(b, f);
		}
		return emit(inv.passed && braid.passed);
	});
	in_.add_to(ybe);
	ybe->add_option("--sample", samples_, "Sample this many triples when above the cap");
	ybe->add_option("--seed", seed_, "Seed for sampled triples")->capture_default_str();
	ybe->add_option("--triple-cap", cap_, "Exhaustive braid check up to this many triples (default 1000000)");
	ybe->add_option("--dump", output_, "Write r as 'x y u v' lines");
}

void Cli::build_make()
{
	auto* make = app_.add_subcommand("make", "Build a parametric brace and write it as .brace");
	make->require_subcommand(1);

	auto finish = [this](BraceTable const& b) {
		auto f = open_output(output_);
		write_brace(f, b);
		out_ << "wrote " << b.description() << ", order " << b.order() << ", to " << output_ << "\n";
		return exit_pass;
	};

	auto* d12 = make->add_subcommand("d12", "D(1,2) modulo m");
	d12->callback([this, finish] { action_ = [=, this] { return finish(d12_quotient(param_, {max_order_})); }; });
	d12->add_option("--mod", param_, "Modulus m")->required()->check(CLI::PositiveNumber);

	auto* d13 = make->add_subcommand("d13", "D(1,3) over Z_n");
	d13->callback([this, finish] {
		action_ = [=, this] {
			return finish(d13_brace(param_, literal_ ? D13Variant::literal : D13Variant::reduced, {max_order_}));
		};
	});
	d13->add_option("--n", param_, "Parameter n")->required()->check(CLI::PositiveNumber);
	d13->add_flag("--literal", literal_, "Reduce the fourth coordinate mod n (not a brace for even n)");

	auto* triv = make->add_subcommand("trivial", "Trivial brace on Z_N");
	triv->callback([this, finish] { action_ = [=, this] { return finish(trivial_brace(param_, {max_order_})); }; });
	triv->add_option("--order", param_, "Order N")->required()->check(CLI::PositiveNumber);

	for (auto* sub : {d12, d13, triv})
	{
		sub->add_option("-o,--output", output_, "Output .brace file")->required();
		sub->add_option("--max-order", max_order_, "Refuse larger braces")->capture_default_str();
	}
}

} // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
	return Cli(out, err).run(args);
}

} // namespace bracelab
