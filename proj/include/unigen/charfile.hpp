#pragma once

#include <iosfwd>
#include <string>

#include "unigen/unified.hpp"

namespace unigen {

// Character table file format:
//   line 1: d=<modulus>
//   line 2: m=<root order>
//   then one "<j> <e>" line per unit residue j, meaning chi(j) = zeta_m^e.
// Blank lines and lines starting with '#' are ignored. Every unit residue
// must be listed (non-units are implicitly zero); the loaded table is fully
// validated (chi(1) = 1, multiplicativity).
DirichletCharacter load_character_file(const std::string& path);
DirichletCharacter parse_character_table(std::istream& in, const std::string& source_name);

}  // namespace unigen
