#pragma once

// Deterministic plain-text reports for every analysis. Nothing here depends
// on timing or thread count, so identical inputs give identical bytes.

#include "bracelab/identities.hpp"
#include "bracelab/theorems.hpp"
#include "bracelab/ybe.hpp"

#include <iosfwd>

namespace bracelab {

/// Memberships are listed only up to this order.
inline constexpr std::size_t membership_print_limit = 64;

void print_header(std::ostream& out, BraceTable const& brace);

/// "3" or "3 (0,1,0,0)" for labelled braces.
std::string format_element(BraceTable const& brace, Element x);
std::string format_tuple(BraceTable const& brace, std::vector<Element> const& xs);

/// Index list, plus coordinate tuples for labelled braces.
void print_subset(std::ostream& out, BraceTable const& brace, SubsetMask const& set,
                  std::string_view indent = "  ");

void print_axioms(std::ostream& out, BraceTable const& brace, AxiomReport const& report);
void print_series(std::ostream& out, BraceTable const& brace, SeriesReport const& series);
void print_center(std::ostream& out, BraceTable const& brace, SubsetMask const& center);
void print_nilpotency(std::ostream& out, BraceTable const& brace);
void print_identities(std::ostream& out, BraceTable const& brace, IdentityReport const& report);
void print_epi(std::ostream& out, BraceTable const& brace, EpiReport const& report);
void print_a2(std::ostream& out, BraceTable const& brace, A2Report const& report);
void print_classification(std::ostream& out, BraceTable const& brace, Classification const& table);
void print_classification_csv(std::ostream& out, Classification const& table);
void print_ybe(std::ostream& out, BraceTable const& brace, YbeCheck const& involutive,
               YbeCheck const& braid, YbeOptions const& options);

} // namespace bracelab
