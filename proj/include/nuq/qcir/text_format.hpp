#pragma once

#include <iosfwd>
#include <string>

#include "nuq/qcir/circuit.hpp"

namespace nuq::qcir {

/// Line format:
///   # comment
///   DIMS d0 d1 ...
///   LABEL text
///   LAYOUT l0 l1 ...      (only when not the identity)
///   KIND wire... param... (one gate per line, params at 17 significant digits)
void write_text(std::ostream& os, const Circuit& c);
std::string to_text(const Circuit& c);

/// Throws DomainError with the line number on malformed input.
Circuit read_text(std::istream& is);
Circuit from_text(const std::string& s);

}  // namespace nuq::qcir
