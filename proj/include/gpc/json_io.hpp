#ifndef GPC_JSON_IO_HPP
#define GPC_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "gpc/channel.hpp"
#include "gpc/constructions.hpp"
#include "gpc/verify.hpp"

namespace gpc {

// Shared JSON schemas. ordered_json keeps document order so a written file
// re-read and re-written is byte-identical.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json subalgebra_to_json(const Subalgebra& s);
Subalgebra subalgebra_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);
/// Parts without a stored commutant basis get one computed numerically;
/// spanning flags are recomputed.
Decomposition decomposition_from_json(const Json& j);

Json channel_to_json(const GeneralizedPauliChannel& ch);
/// "decomposition" may be a builder name string or an inline decomposition.
GeneralizedPauliChannel channel_from_json(const Json& j);

Json cp_report_to_json(const CpReport& report);
Json kraus_form_to_json(const KrausForm& form);
Json identity_report_to_json(const IdentityReport& report);
Json decomposition_report_to_json(const DecompositionReport& report);
Json sample_stats_to_json(const SampleStats& stats);

std::string dump_json(const Json& j);  // pretty, trailing newline
Json parse_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gpc

#endif
