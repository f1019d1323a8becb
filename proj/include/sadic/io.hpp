#pragma once

// JSON and CSV encodings. Letters are 1-based in files and 0-based in memory.

#include "sadic/bratteli.hpp"
#include "sadic/construct.hpp"
#include "sadic/language.hpp"
#include "sadic/morphism.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace sadic {

using Json = nlohmann::ordered_json;

/// Raised for malformed input files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j);

/// Images longer than this in total are written run-length encoded.
inline constexpr std::uint64_t kPlainImageLimit = 4096;

Json to_json(const Morphism& tau);
Morphism morphism_from_json(const Json& j);

Json to_json(const BratteliDiagram& d);
BratteliDiagram diagram_from_json(const Json& j);

Json to_json(const DirectiveSequence& ds);
DirectiveSequence directive_from_json(const Json& j);

Json to_json(const ConstructionResult& res);
ConstructionResult result_from_json(const Json& j);

Json to_json(const VerificationReport& rep);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// "n,p,target,bound,ratio"; the bound column is empty where undefined.
void write_profile_csv(std::ostream& out, const ComplexityProfile& profile, const ComplexityTarget* target,
                       const std::vector<std::optional<BoundValue>>& bounds);
/// "position,period" with "unverified" for open or refuted positions.
void write_toeplitz_csv(std::ostream& out, const ToeplitzReport& rep);

}  // namespace sadic
