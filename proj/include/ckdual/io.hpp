#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "ckdual/diagrams.hpp"
#include "ckdual/errors.hpp"
#include "ckdual/fgab.hpp"
#include "ckdual/intmat.hpp"

namespace ckdual {

class ParseError : public Error {
public:
    using Error::Error;
};

/// A named square 0-1 matrix as loaded from disk. Entries and squareness
/// are checked here, before CK validation.
struct MatrixDocument {
    std::optional<std::string> name;
    IntMatrix matrix;
    std::string digest;  // fnv1a-64 of the raw input bytes
    std::string source;  // path or "-"
};

/// Format is sniffed from the first non-whitespace byte: '{' means the
/// structured form {"name": ..., "matrix": [[...]]}, anything else the
/// plain-text form (one row per line, 0/1 entries separated by spaces,
/// optional leading "# name" line).
MatrixDocument parse_matrix_document(const std::string& text, const std::string& source);

/// Reads the file, or stdin when path is "-".
MatrixDocument load_matrix_document(const std::string& path);

std::string fnv1a64_hex(const std::string& bytes);

/// Fixed serialization {"free_rank": r, "torsion": [d...], "marks": [[...]]},
/// torsion divisors ascending, mark coordinates canonical.
nlohmann::json group_json(const MarkedDisplay& display);
nlohmann::json group_json(const FgAbGroup& group);
nlohmann::json check_json(const CheckResult& check);
nlohmann::json diagram_report_json(const DiagramReport& report);
nlohmann::json strong_duality_json(const StrongDualityReport& report);
nlohmann::json matrix_json(const IntMatrix& m);

long json_int(const Int& value);  // throws if the value exceeds 64-bit range

}  // namespace ckdual
