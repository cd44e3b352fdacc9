#include "prodsched/io.hpp"

#include <fstream>
#include <sstream>

namespace prodsched {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j, const std::string& what) {
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError(what + " must be a string or integer (floats lose exactness)");
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

json rationals_to_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.to_string());
    return out;
}

} // namespace

json spec_to_json(const ProblemSpec& spec) {
    json classes = json::array();
    for (const auto& c : spec.classes())
        classes.push_back({{"time", c.completion_time.to_string()}, {"count", c.count}});
    return {{"classes", classes}, {"objects", spec.num_objects()}};
}

ProblemSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("classes") || !j["classes"].is_array())
        throw ParseError("spec needs a 'classes' array");
    std::vector<AgentClass> classes;
    for (const auto& c : j["classes"]) {
        if (!c.is_object() || !c.contains("time") || !c.contains("count"))
            throw ParseError("each class needs 'time' and 'count'");
        if (!c["count"].is_number_integer()) throw ParseError("class count must be an integer");
        classes.push_back({rational_from_json(c["time"], "class time"), c["count"].get<long long>()});
    }
    std::optional<long long> objects;
    if (j.contains("objects") && !j["objects"].is_null()) {
        if (!j["objects"].is_number_integer()) throw ParseError("objects must be an integer");
        objects = j["objects"].get<long long>();
    }
    return ProblemSpec(std::move(classes), objects);
}

std::string matrix_to_csv(const AssignmentMatrix& matrix) {
    std::ostringstream out;
    out << "au_hours," << matrix.au_hours().to_string() << "\n";
    out << "object";
    for (long long j = 1; j <= matrix.size(); ++j) out << "," << j;
    out << "\n";
    for (long long i = 1; i <= matrix.size(); ++i) {
        out << i;
        for (long long j = 1; j <= matrix.size(); ++j) out << "," << matrix.at(i, j);
        out << "\n";
    }
    return out.str();
}

AssignmentMatrix matrix_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty matrix CSV");
    auto au_cells = split_line(line);
    if (au_cells.size() != 2 || au_cells[0] != "au_hours")
        throw ParseError("matrix CSV must start with an au_hours record");
    Rational au = Rational::from_string(au_cells[1]);

    if (!std::getline(in, line)) throw ParseError("matrix CSV missing header row");
    auto header = split_line(line);
    if (header.empty() || header[0] != "object")
        throw ParseError("matrix CSV header must start with 'object'");
    const std::size_t n = header.size() - 1;

    std::vector<std::vector<long long>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != n + 1)
            throw ParseError("matrix row has " + std::to_string(cells.size() - 1) +
                             " entries, expected " + std::to_string(n));
        if (cells[0] != std::to_string(rows.size() + 1))
            throw ParseError("matrix rows must be numbered consecutively from 1");
        std::vector<long long> row;
        row.reserve(n);
        for (std::size_t k = 1; k < cells.size(); ++k) {
            try {
                row.push_back(std::stoll(cells[k]));
            } catch (const std::exception&) {
                throw ParseError("bad agent id '" + cells[k] + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() != n) throw ParseError("matrix must be square");
    return AssignmentMatrix(std::move(rows), au);
}

std::string binary_matrix_to_csv(const std::vector<std::vector<int>>& bits) {
    std::ostringstream out;
    out << "object";
    for (std::size_t j = 1; j <= bits.size(); ++j) out << "," << j;
    out << "\n";
    for (std::size_t i = 0; i < bits.size(); ++i) {
        out << i + 1;
        for (int bit : bits[i]) out << "," << bit;
        out << "\n";
    }
    return out.str();
}

json scheme_to_json(const Scheme& scheme) {
    json objects = json::array();
    for (long long i = 1; i <= scheme.num_objects(); ++i) {
        json segments = json::array();
        for (const auto& seg : scheme.objects[static_cast<std::size_t>(i - 1)])
            segments.push_back({{"agent", seg.agent},
                                {"start", seg.start.to_string()},
                                {"end", seg.end.to_string()}});
        objects.push_back({{"object", i}, {"segments", segments}});
    }
    return {{"objects", objects}};
}

Scheme scheme_from_json(const json& j) {
    if (!j.is_object() || !j.contains("objects") || !j["objects"].is_array())
        throw ParseError("scheme needs an 'objects' array");
    Scheme scheme;
    scheme.objects.resize(j["objects"].size());
    std::vector<bool> seen(j["objects"].size(), false);
    for (const auto& entry : j["objects"]) {
        if (!entry.contains("object") || !entry["object"].is_number_integer())
            throw ParseError("each scheme entry needs an integer 'object'");
        long long index = entry["object"].get<long long>();
        if (index < 1 || index > static_cast<long long>(scheme.objects.size()) ||
            seen[static_cast<std::size_t>(index - 1)])
            throw ParseError("objects must be numbered 1..n without repeats");
        seen[static_cast<std::size_t>(index - 1)] = true;
        if (!entry.contains("segments") || !entry["segments"].is_array())
            throw ParseError("each scheme entry needs a 'segments' array");
        for (const auto& s : entry["segments"]) {
            if (!s.contains("agent") || !s["agent"].is_number_integer())
                throw ParseError("segment needs an integer 'agent'");
            scheme.objects[static_cast<std::size_t>(index - 1)].push_back(
                {s["agent"].get<long long>(), rational_from_json(s["start"], "segment start"),
                 rational_from_json(s["end"], "segment end")});
        }
    }
    return scheme;
}

json validation_to_json(const ValidationReport& report) {
    json records = json::array();
    for (std::size_t i = 0; i < report.work_records.per_object.size(); ++i) {
        json by_class = json::object();
        for (const auto& [cls, hours] : report.work_records.per_object[i])
            by_class[std::to_string(cls)] = hours.to_string();
        records.push_back({{"object", i + 1}, {"by_class", by_class}});
    }
    return {{"continuous_per_object", report.continuous_per_object},
            {"agents_always_busy", report.agents_always_busy},
            {"simultaneous_finish", report.simultaneous_finish},
            {"objects_complete", report.objects_complete},
            {"duration_hours", report.duration.to_string()},
            {"duration_decimal", report.duration.to_decimal()},
            {"optimal", report.optimal},
            {"uniform", report.uniform},
            {"halt_count", report.halt_count},
            {"work_records", {{"unit", "hours"}, {"objects", records}}}};
}

json timing_to_json(const TimingReport& report, const std::string& strategy, long long r1,
                    long long r2, const Rational& T) {
    return {{"strategy", strategy},
            {"r1", r1},
            {"r2", r2},
            {"n", r1 + r2},
            {"T", T.to_string()},
            {"epsilon", report.epsilon.to_string()},
            {"H", report.H.to_string()},
            {"H_decimal", report.H.to_decimal()},
            {"halts", report.halt_count},
            {"total", report.total.to_string()},
            {"total_decimal", report.total.to_decimal()},
            {"excess_percent", report.excess_percent.to_string()},
            {"excess_percent_decimal", report.excess_percent.to_fixed(1)}};
}

json partition_to_json(const std::vector<Rational>& input,
                       const std::vector<HarmonicPartition>& splits,
                       const HarmonicPartition& irreducible) {
    json split_list = json::array();
    for (const auto& split : splits)
        split_list.push_back(
            {{"u", rationals_to_json(split.parts[0])}, {"v", rationals_to_json(split.parts[1])}});
    json parts = json::array();
    for (const auto& part : irreducible.parts) parts.push_back(rationals_to_json(part));
    Rational mean = irreducible.mean;
    return {{"input", rationals_to_json(input)},
            {"mean", mean.to_string()},
            {"mean_decimal", mean.to_decimal()},
            {"split_count", static_cast<long long>(splits.size())},
            {"splits", split_list},
            {"irreducible", parts}};
}

json euclid_plan_to_json(const EuclideanScheme& scheme, AgentOrder order) {
    const EuclidTrace& trace = scheme.trace;
    json a_seq = json::array(), lengths = json::array(), stages = json::array();
    for (std::size_t i = 1; i <= trace.stage_count(); ++i) a_seq.push_back(trace.a(i));
    for (long long len : stage_lengths(trace)) lengths.push_back(len);
    for (const auto& stage : scheme.stages) {
        stages.push_back({{"stage", stage.stage},
                          {"length_au", stage.length_au},
                          {"halts_at_au", stage.halts_at},
                          {"passive_record_au",
                           {{"type1", stage.passive_record.type1},
                            {"type2", stage.passive_record.type2}}},
                          {"active_record_au",
                           {{"type1", stage.active_record.type1},
                            {"type2", stage.active_record.type2}}}});
    }
    Rational H = Rational(trace.r1 + trace.r2) * scheme.matrix.au_hours();
    return {{"strategy", "euclid"},
            {"agent_order", order == AgentOrder::Type1First ? "type1-first" : "type2-first"},
            {"r1", trace.r1},
            {"r2", trace.r2},
            {"n", trace.r1 + trace.r2},
            {"H", H.to_string()},
            {"H_decimal", H.to_decimal()},
            {"au_hours", scheme.matrix.au_hours().to_string()},
            {"halts", halt_number(trace)},
            {"halt_instants_au", halt_instants(trace)},
            {"a_sequence", a_seq},
            {"stage_lengths_au", lengths},
            {"stages", stages}};
}

json fibonacci_to_json(const FibonacciReport& report) {
    return {{"p", report.p},
            {"r1", report.r1},
            {"r2", report.r2},
            {"n", report.n},
            {"h", report.h},
            {"halt_instants_au", report.halts},
            {"log_phi_n", report.log_phi_n},
            {"bound_ok", report.bound_ok}};
}

json halt_statistics_to_json(const HaltStatistics& stats) {
    json pairs = json::array();
    for (const auto& [r1, r2, h] : stats.per_pair)
        pairs.push_back({{"r1", r1}, {"r2", r2}, {"h", h}});
    return {{"n", stats.n},
            {"pair_count", static_cast<long long>(stats.per_pair.size())},
            {"pairs", pairs},
            {"mean", stats.mean.to_string()},
            {"mean_decimal", stats.mean.to_decimal()}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << contents;
}

} // namespace prodsched
