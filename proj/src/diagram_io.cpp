#include "parab/diagram_io.hpp"

#include <cctype>

namespace parab {

CrossedDiagram parse_diagram(const std::string& text) {
  if (text.empty()) throw ParseError("empty diagram string", 1);
  size_t pos = 0;
  char fam = text[pos];
  if (!std::isalpha((unsigned char)fam)) throw ParseError("expected family letter A-G", 1);
  Family family;
  try {
    family = family_from_letter(fam);
  } catch (const std::invalid_argument&) {
    throw ParseError(std::string("unknown family letter '") + fam + "'", 1);
  }
  ++pos;

  if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
    throw ParseError("expected decimal rank", int(pos) + 1);
  int rank = 0;
  while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
    rank = rank * 10 + (text[pos] - '0');
    if (rank > 1000) throw ParseError("rank out of range", int(pos) + 1);
    ++pos;
  }

  LieType t{family, rank};
  try {
    validate(t);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 2);
  }

  CrossedDiagram d{t, {}};
  if (pos == text.size()) return d;

  if (text[pos] != ':')
    throw ParseError("expected ':' before mask", int(pos) + 1);
  ++pos;
  for (int i = 1; i <= rank; ++i, ++pos) {
    if (pos >= text.size())
      throw ParseError("mask shorter than rank " + std::to_string(rank), int(pos) + 1);
    char c = text[pos];
    if (c == 'x' || c == 'X')
      d.sigma.insert(i);
    else if (c != '*')
      throw ParseError(std::string("mask character must be 'x' or '*', got '") + c + "'",
                       int(pos) + 1);
  }
  if (pos != text.size())
    throw ParseError("mask longer than rank " + std::to_string(rank), int(pos) + 1);
  return d;
}

std::string print_diagram(const CrossedDiagram& d) { return d.str(); }

}  // namespace parab
