#pragma once

// The .brace text format:
//
//   brace v1
//   order N
//   addition
//   <N lines of N indices separated by single spaces>
//   multiplication
//   <N lines>
//
// ASCII with LF line endings; lines starting with '#' are comments. The
// writer appends a "# family ..." comment for parametric braces, which the
// reader uses to restore coordinate labels.

#include "bracelab/brace.hpp"

#include <iosfwd>
#include <string>

namespace bracelab {

struct LoadOptions
{
	/// Skip verify_axioms (for negative-test workflows).
	bool unchecked = false;
	VerifyOptions verify;
};

/// Thrown by the checked loader when the tables are well formed but are not
/// a left brace.
class AxiomError : public std::runtime_error
{
  public:
	AxiomError(std::string what, AxiomReport report)
	    : std::runtime_error(std::move(what)), report_(std::move(report))
	{
	}
	AxiomReport const& report() const { return report_; }

  private:
	AxiomReport report_;
};

void write_brace(std::ostream& out, BraceTable const& brace);
void save_brace(std::string const& path, BraceTable const& brace);

BraceTable read_brace(std::istream& in, LoadOptions const& options = {});
BraceTable load_brace(std::string const& path, LoadOptions const& options = {});

/// Rebuilds labels and description from a family tag; false if unknown.
bool restore_family(BraceTable& brace);

} // namespace bracelab
