#ifndef UAKIT_IO_HPP
#define UAKIT_IO_HPP

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "uakit/category.hpp"
#include "uakit/equivalence.hpp"
#include "uakit/harness.hpp"
#include "uakit/hms.hpp"
#include "uakit/logic.hpp"
#include "uakit/transforms.hpp"

namespace uakit {

using json = nlohmann::json;

/// Malformed model, proof or category document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc, bool pretty = true);

/// The "kind" field, or "" when absent.
std::string document_kind(const json& doc);

json fh_to_json(const FHModel& k);
FHModel fh_from_json(const json& doc);

json hms_to_json(const HMSModel& m);
HMSModel hms_from_json(const json& doc);

/// Compact form: base model and mode.
json category_to_json(const FHCategory& c);
/// Every model and morphism spelled out.
json category_dump(const FHCategory& c);
/// Accepts the compact form; the category is rebuilt from its base.
FHCategory category_from_json(const json& doc);

json report_to_json(const ValidationReport& r);
json report_to_json(const PropertyReport& r);
json report_to_json(const SoundnessReport& r, const Vocabulary& v);
json report_to_json(const EquivalenceReport& r, const Vocabulary& v);

json trace_to_json(const TransformTrace& t, const FHModel& source, const HMSModel& target);
json trace_to_json(const TransformTrace& t, const HMSModel& source, const FHModel& target);

/// 64-bit FNV-1a of the compact serialization, as 16 hex digits.
std::string digest(const json& doc);

}  // namespace uakit

#endif
