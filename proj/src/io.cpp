#include "vqcnet/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vqcnet {

std::string g17(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string csv_escape(std::string_view field)
{
    const bool needs_quotes =
        field.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

namespace {

const std::string kVersionField = std::to_string(kSchemaVersion);

std::string bool_field(bool value) { return value ? "1" : "0"; }

}  // namespace

std::string trajectory_csv(const RunResult& result)
{
    std::string out = "schema_version,epoch,cost\n";
    for (const auto& [epoch, cost] : result.trajectory) {
        out += kVersionField;
        out += ',';
        out += std::to_string(epoch);
        out += ',';
        out += g17(cost);
        out += '\n';
    }
    return out;
}

std::string records_csv(std::span<const RunRow> rows, std::string_view experiment)
{
    std::string out =
        "schema_version,experiment,scheme,n_qubits,depth,eta,target,seed,reached,epochs\n";
    const std::string experiment_field = csv_escape(experiment);
    for (const RunRow& row : rows) {
        out += kVersionField;
        out += ',';
        out += experiment_field;
        out += ',';
        out += scheme_name(row.scheme);
        out += ',';
        out += std::to_string(row.n_qubits);
        out += ',';
        out += std::to_string(row.depth);
        out += ',';
        out += g17(row.eta);
        out += ',';
        out += g17(row.target);
        out += ',';
        out += std::to_string(row.seed);
        out += ',';
        out += bool_field(row.reached);
        out += ',';
        out += std::to_string(row.epochs);
        out += '\n';
    }
    return out;
}

std::string aggregate_csv(std::span<const SweepCell> cells)
{
    std::string out =
        "schema_version,scheme,n_qubits,depth,reps,reached,failures,mean_epochs,"
        "min_epochs,max_epochs\n";
    for (const SweepCell& cell : cells) {
        out += kVersionField;
        out += ',';
        out += scheme_name(cell.scheme);
        out += ',';
        out += std::to_string(cell.n_qubits);
        out += ',';
        out += std::to_string(cell.depth);
        out += ',';
        out += std::to_string(cell.reps);
        out += ',';
        out += std::to_string(cell.reached_count);
        out += ',';
        out += std::to_string(cell.failures);
        out += ',';
        out += g17(cell.mean_epochs);
        out += ',';
        out += std::to_string(cell.min_epochs);
        out += ',';
        out += std::to_string(cell.max_epochs);
        out += '\n';
    }
    return out;
}

std::string variance_csv(std::span<const VarianceReport> reports)
{
    std::string out =
        "schema_version,n_qubits,param_index,samples,mean,variance,std_error,"
        "variance_std_error\n";
    for (const VarianceReport& report : reports) {
        out += kVersionField;
        out += ',';
        out += std::to_string(report.n_qubits);
        out += ',';
        out += std::to_string(report.param_index);
        out += ',';
        out += std::to_string(report.samples);
        out += ',';
        out += g17(report.mean);
        out += ',';
        out += g17(report.variance);
        out += ',';
        out += g17(report.std_error);
        out += ',';
        out += g17(report.variance_std_error);
        out += '\n';
    }
    return out;
}

std::string identity_csv(std::span<const IdentityProximityReport> reports)
{
    std::string out = "schema_version,scheme,n_qubits,depth,seed,mu\n";
    for (const IdentityProximityReport& report : reports) {
        for (std::size_t i = 0; i < report.mu.size(); ++i) {
            out += kVersionField;
            out += ',';
            out += scheme_name(report.scheme);
            out += ',';
            out += std::to_string(report.n_qubits);
            out += ',';
            out += std::to_string(report.depth);
            out += ',';
            out += std::to_string(report.seeds[i]);
            out += ',';
            out += g17(report.mu[i]);
            out += '\n';
        }
    }
    return out;
}

std::string lemmas_csv(std::span<const LemmaCheckReport> reports)
{
    std::string out =
        "schema_version,lemma,dim,samples,estimate_re,estimate_im,analytic_re,"
        "analytic_im,abs_error,rel_error,std_error,conclusive,label\n";
    for (const LemmaCheckReport& report : reports) {
        out += kVersionField;
        out += ',';
        out += std::to_string(report.lemma);
        out += ',';
        out += std::to_string(report.dim);
        out += ',';
        out += std::to_string(report.samples);
        out += ',';
        out += g17(report.estimate.real());
        out += ',';
        out += g17(report.estimate.imag());
        out += ',';
        out += g17(report.analytic.real());
        out += ',';
        out += g17(report.analytic.imag());
        out += ',';
        out += g17(report.abs_error);
        out += ',';
        out += g17(report.rel_error);
        out += ',';
        out += g17(report.std_error);
        out += ',';
        out += bool_field(report.conclusive);
        out += ',';
        out += csv_escape(report.label);
        out += '\n';
    }
    return out;
}

void ensure_dir(const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create directory '" + dir.string()
                                 + "': " + ec.message());
    }
}

void write_text_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!file.good()) {
        throw std::runtime_error("short write to '" + path.string() + "'");
    }
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& value)
{
    write_text_file(path, value.dump(2) + "\n");
}

nlohmann::json load_flat_config(const std::filesystem::path& path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();

    nlohmann::json config;
    try {
        config = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& err) {
        throw std::runtime_error("config file '" + path.string()
                                 + "' is not valid JSON: " + err.what());
    }
    if (!config.is_object()) {
        throw std::runtime_error("config file '" + path.string()
                                 + "' must hold a JSON object at the top level");
    }
    for (const auto& [key, value] : config.items()) {
        if (value.is_structured() || value.is_null()) {
            throw std::runtime_error("config key '" + key
                                     + "' must be a scalar (string, number, or bool)");
        }
    }
    return config;
}

void reject_unknown_keys(const nlohmann::json& config,
                         std::span<const std::string_view> allowed)
{
    for (const auto& [key, value] : config.items()) {
        bool known = false;
        for (std::string_view name : allowed) {
            if (key == name) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
}

std::string default_out_dir()
{
    const char* env = std::getenv("VQCNET_OUT");
    return env != nullptr && *env != '\0' ? env : "vqcnet-out";
}

std::string iso_timestamp()
{
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

}  // namespace vqcnet
