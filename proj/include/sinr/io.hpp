#pragma once

#include <string>

#include <json.hpp>

#include "sinr/generator.hpp"
#include "sinr/refinement.hpp"
#include "sinr/report.hpp"
#include "sinr/scheduler.hpp"

namespace sinr {

using json = nlohmann::json;

json instance_to_json(const LinkInstance& inst);
LinkInstance instance_from_json(const json& j);

json power_to_json(const PowerAssignment& pa);
PowerAssignment power_from_json(const json& j);

json schedule_to_json(const Schedule& sched);
Schedule schedule_from_json(const json& j);

json report_to_json(const ScheduleReport& rep);

json generator_spec_to_json(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const json& j);

json alg1_trace_to_json(const Alg1Trace& t);
json pc_trace_to_json(const SchedulePcTrace& t);

/// Canonical text form used everywhere: two-space indent, sorted keys (the
/// json object type is ordered), trailing newline. Identical values always
/// produce identical bytes.
std::string dump_json(const json& j);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sinr
