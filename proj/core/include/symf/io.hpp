#pragma once

// Parsing and serialization. JSON output is compact, single-line, and
// deterministic: keys appear in a fixed order and terms in canonical order.
// Arbitrary-precision numbers are written as decimal strings ("3", "-1/2").

#include <string>
#include <string_view>
#include <vector>

#include "symf/characters.hpp"
#include "symf/hopf.hpp"
#include "symf/matrix.hpp"
#include "symf/polynomial.hpp"
#include "symf/symfunc.hpp"
#include "symf/tableau.hpp"

namespace symf {

/// Parses an element literal:
///
///   element := basis ':' term (('+' | '-') term)*
///   term    := [coeff '*'] partition | '0'
///   basis   := 'm' | 'e' | 'h' | 'p' | 's'
///   coeff   := ['-'] digits ['/' digits]
///
/// A partition is written as in parse_partition ("2,1" or "()"). A bare
/// partition has coefficient 1, so `s:3` is s_(3); the lone term `0`
/// denotes the zero element. Throws SyntaxError.
SymElement parse_element(std::string_view text);

/// `{"basis":"s","terms":[{"partition":[2,1],"coeff":"1"}]}`
std::string to_json(const SymElement& f);
SymElement element_from_json(std::string_view json);

/// `[{"left":[2],"right":[1],"coeff":"1"}, ...]`
std::string to_json(const TensorElement& t);
/// Bases are not part of the tensor schema and must be supplied.
TensorElement tensor_from_json(std::string_view json, BasisTag left, BasisTag right);

/// Row-major arrays of arrays of integers.
std::string to_json(const Tableau& t);
std::string to_json(const std::vector<Tableau>& ts);

/// Arrays of arrays of rational strings.
std::string to_json(const Matrix& m);
Matrix matrix_from_json(std::string_view json);

/// `{"n":3,"values":[{"class":[3],"value":"1"}, ...]}`
std::string to_json(const ClassFunction& chi);
/// `{"n":3,"partitions":[[3],[2,1],[1,1,1]],"values":[["1","1","1"], ...]}`
std::string to_json(const CharacterTable& table);
/// `[{"partition":[3],"multiplicity":"1"}, ...]`
std::string to_json(const PartitionMap<Integer>& multiplicities);
std::string to_json(const Polynomial& f);

/// "m[2,1] + 2*m[1,1,1]"; "0" for zero and "s[]" for the unit.
std::string to_text(const SymElement& f);
/// "s[2] (x) s[1] - 1/2*s[1] (x) s[1,1]"
std::string to_text(const TensorElement& t);
/// One row per line, entries separated by spaces.
std::string to_text(const Tableau& t);
/// Rows of right-aligned entries.
std::string to_text(const Matrix& m);
/// Lines "class  value", classes in canonical order.
std::string to_text(const ClassFunction& chi);
/// Aligned table: a header row of classes μ, then one row per λ.
std::string to_text(const CharacterTable& table);
/// Lines "partition  multiplicity", canonical order.
std::string to_text(const PartitionMap<Integer>& multiplicities);

}  // namespace symf
