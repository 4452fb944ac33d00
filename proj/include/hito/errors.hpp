#pragma once
#include <stdexcept>

namespace hito {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed binary word, pattern line, or label text.
struct ParseError : Error { using Error::Error; };

// A pattern needs at least two rows of horizontal stitching (|y| >= 2).
struct DegenerateHeight : Error { using Error::Error; };

// Row index outside the valid range for the segment orientation.
struct RowOutOfRange : Error { using Error::Error; };

// A per-axis symbol combination that is not one of the 31 catalogued groups.
// Reaching this from detect_signature indicates an implementation bug.
struct SignatureNotInCatalogue : Error { using Error::Error; };

// Label text that does not name a catalogued group.
struct UnknownLabel : Error { using Error::Error; };

}  // namespace hito
