#include "unigen/charfile.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "unigen/errors.hpp"

namespace unigen {

namespace {

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

unsigned long scan_header(const std::string& line, char key, const std::string& source, long lineno) {
  std::istringstream is(line);
  std::string token;
  is >> token;
  const std::string prefix = std::string(1, key) + "=";
  if (token.rfind(prefix, 0) != 0)
    throw ParseError(source + ":" + std::to_string(lineno) + ": expected '" + prefix +
                     "<integer>', got '" + line + "'");
  try {
    const long v = std::stol(token.substr(2));
    if (v < 1) throw std::out_of_range("non-positive");
    return static_cast<unsigned long>(v);
  } catch (const std::logic_error&) {
    throw ParseError(source + ":" + std::to_string(lineno) + ": invalid integer in '" + line + "'");
  }
}

}  // namespace

DirichletCharacter parse_character_table(std::istream& in, const std::string& source) {
  std::string line;
  long lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!skippable(line)) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(source + ": missing 'd=<modulus>' header");
  const unsigned long d = scan_header(line, 'd', source, lineno);
  if (!next_line()) throw ParseError(source + ": missing 'm=<root order>' header");
  const unsigned long m = scan_header(line, 'm', source, lineno);

  std::vector<std::optional<unsigned long>> values(d);
  while (next_line()) {
    std::istringstream is(line);
    long j = 0, e = 0;
    if (!(is >> j >> e))
      throw ParseError(source + ":" + std::to_string(lineno) + ": expected '<j> <e>', got '" +
                       line + "'");
    std::string extra;
    if (is >> extra)
      throw ParseError(source + ":" + std::to_string(lineno) + ": trailing token '" + extra + "'");
    long jr = j % static_cast<long>(d);
    if (jr < 0) jr += static_cast<long>(d);
    if (std::gcd(static_cast<unsigned long>(jr), d) != 1)
      throw ParseError(source + ":" + std::to_string(lineno) + ": residue " + std::to_string(j) +
                       " is not a unit mod " + std::to_string(d));
    if (values[static_cast<std::size_t>(jr)])
      throw ParseError(source + ":" + std::to_string(lineno) + ": duplicate residue " +
                       std::to_string(j));
    long er = e % static_cast<long>(m);
    if (er < 0) er += static_cast<long>(m);
    values[static_cast<std::size_t>(jr)] = static_cast<unsigned long>(er);
  }
  for (unsigned long j = 0; j < d; ++j)
    if (std::gcd(j, d) == 1 && !values[j])
      throw ParseError(source + ": unit residue " + std::to_string(j) +
                       " is unlisted; every unit must be assigned a value");
  return DirichletCharacter(d, m, std::move(values));
}

DirichletCharacter load_character_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open character file '" + path + "'");
  return parse_character_table(in, path);
}

}  // namespace unigen
