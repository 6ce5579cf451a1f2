#pragma once

#include <string>
#include <vector>

#include "gtb/bialgebra.hpp"

namespace gtb {

enum class OutputFormat { kText, kRecords };

/// "-1", "0" or "+1" (any magnitude, always signed unless zero).
std::string format_signed(Coefficient c);

/// Text: one "<±coeff> <word>" line per term, sorted by word text; "0" for
/// the empty sum. Tensor components are separated by " | ".
/// Records: one "coeff=<±c> word=<w>" (or left/right, first/second/third)
/// line per term; the empty sum is the single line "coeff=0".
std::string format(const FormalSum& x, OutputFormat fmt = OutputFormat::kText);
std::string format(const Tensor2& t, OutputFormat fmt = OutputFormat::kText);
std::string format(const Tensor3& t, OutputFormat fmt = OutputFormat::kText);

/// One line per pair:
/// "type=<k> sign=<s> P=<start>+<len> Q=<start>+<len> Pword=<..> Qword=<..>".
/// Records add " j=<j> k=<k>".
std::string format_pairs(const std::vector<LinkedPair>& pairs, const CyclicWord& V,
                         const CyclicWord& W, OutputFormat fmt = OutputFormat::kText);

}  // namespace gtb
