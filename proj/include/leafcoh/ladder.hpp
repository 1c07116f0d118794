#pragma once

#include <span>
#include <string>
#include <vector>

#include "leafcoh/coeff_seq.hpp"

namespace leafcoh {

/// Generators acting on a weight module. H, E, F are the weight and ladder
/// operators; X0, X1, X2, Y are the derived action of the real Lie algebra:
///   X0 = iH,  X1 = (E - F)/2,  Y = -i(E + F)/2,  X2 = Y + X0.
enum class Symbol { H, E, F, X0, X1, X2, Y };

std::string to_string(Symbol s);
/// Parses "H", "E", "F", "X0", "X1", "X2", "Y"; throws ParseError.
Symbol parse_symbol(const std::string& text);

CoeffSeq apply(Symbol s, const CoeffSeq& v);

/// Applies an operator word written as a product: the word {F, E} is the
/// operator F∘E, so the rightmost symbol acts first. No reordering is done.
CoeffSeq apply_operator(std::span<const Symbol> word, const CoeffSeq& v);

inline CoeffSeq apply_operator(std::initializer_list<Symbol> word, const CoeffSeq& v) {
  return apply_operator(std::span<const Symbol>(word.begin(), word.size()), v);
}

}  // namespace leafcoh
