#pragma once

// Generator files: a header line "degree=<d> rank=<r> family=<name>" followed
// by one permutation per line in cycle notation. Blank lines and text after
// '#' are ignored.

#include <sstream>
#include <string>
#include <vector>

#include "bnpoly/constructions.hpp"
#include "bnpoly/cycle_notation.hpp"

namespace bnpoly {

class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line) : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

inline std::string write_generator_file(const CStringCandidate& c) {
  std::ostringstream out;
  out << "degree=" << c.degree() << " rank=" << c.rank() << " family=" << to_string(c.family) << "\n";
  for (const auto& t : c.generators) out << format_cycles(t) << "\n";
  return out.str();
}

struct GeneratorFile {
  std::size_t degree = 0;
  std::size_t rank = 0;
  Family family = Family::custom;
  std::vector<Permutation> generators;
};

inline GeneratorFile parse_generator_file(const std::string& text) {
  GeneratorFile f;
  bool have_header = false;
  std::istringstream in(text);
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_header) {
      std::istringstream words(line);
      std::string w;
      bool deg = false, rank = false;
      while (words >> w) {
        auto eq = w.find('=');
        if (eq == std::string::npos) throw FormatError("expected key=value in header, got '" + w + "'", no);
        std::string key = w.substr(0, eq), val = w.substr(eq + 1);
        try {
          if (key == "degree") {
            f.degree = std::stoul(val);
            deg = true;
          } else if (key == "rank") {
            f.rank = std::stoul(val);
            rank = true;
          } else if (key == "family") {
            auto fam = parse_family(val);
            if (!fam) throw FormatError("unknown family '" + val + "'", no);
            f.family = *fam;
          } else {
            throw FormatError("unknown header key '" + key + "'", no);
          }
        } catch (const std::logic_error&) {
          throw FormatError("bad number '" + val + "'", no);
        }
      }
      if (!deg || !rank) throw FormatError("header needs degree= and rank=", no);
      if (f.degree == 0) throw FormatError("degree must be positive", no);
      have_header = true;
      continue;
    }
    try {
      f.generators.push_back(parse_cycles(line, f.degree));
    } catch (const ParseError& e) {
      throw FormatError(e.what(), no);
    }
  }
  if (!have_header) throw FormatError("missing header", 1);
  if (f.generators.size() != f.rank)
    throw FormatError("header says rank " + std::to_string(f.rank) + " but " + std::to_string(f.generators.size()) +
                          " permutations follow",
                      1);
  return f;
}

/// Validates involutions and the string condition (throws InvalidCandidate).
inline CStringCandidate candidate_from_file(const GeneratorFile& f) {
  return CStringCandidate::make(f.generators, f.family, static_cast<unsigned>(f.degree / 2));
}

}  // namespace bnpoly
