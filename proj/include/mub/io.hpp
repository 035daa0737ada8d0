#pragma once

#include <string>
#include <string_view>

#include "mub/completion.hpp"
#include "mub/construct.hpp"

namespace mub {

// Collection documents (format_version 1) are JSON objects with keys, in this
// order: format_version, d, tol, provenance, bases. bases[k][row][col] is a
// [re, im] pair, and column j of bases[k] is the j-th vector of basis k.
// Numbers use the shortest decimal form that round-trips to the same double.

inline constexpr int kFormatVersion = 1;

struct CollectionFile {
  MubCollection collection;
  std::string provenance;
};

std::string serialize(const CollectionFile& file);

/// Throws ParseError naming the JSON path of the first malformed value, or
/// ValidationError naming the first basis that is not unitary within tol.
CollectionFile parse_collection(std::string_view text);

CollectionFile read_collection(const std::string& path);
void write_text(const std::string& path, const std::string& text);

std::string verify_report_json(const VerifyReport& r, int indent = 2);
std::string completion_report_json(const CompletionReport& r, int indent = 2);

}  // namespace mub
