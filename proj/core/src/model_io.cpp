#include "relbel/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "relbel/errors.hpp"

namespace relbel {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& origin) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError(origin + ": not valid JSON");
    return j;
}

std::vector<std::string> string_array(const json& j, const char* key, const std::string& origin) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw ValidationError(origin + ": missing array field \"" + key + "\"");
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j[key].size(); ++i) {
        const auto& v = j[key][i];
        if (!v.is_string()) {
            throw ValidationError(origin + ": " + key + "[" + std::to_string(i) +
                                  "] is not a string");
        }
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::vector<double> number_array(const json& arr, const std::string& what,
                                 const std::string& origin) {
    std::vector<double> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number()) {
            throw ValidationError(origin + ": " + what + "[" + std::to_string(i) +
                                  "] is not a number");
        }
        out.push_back(arr[i].get<double>());
    }
    return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LoadedModel parse_model_json(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);
    auto theta = string_array(j, "theta", origin);
    auto x = string_array(j, "x", origin);
    if (!j.contains("prior") || !j["prior"].is_array()) {
        throw ValidationError(origin + ": missing array field \"prior\"");
    }
    auto prior = number_array(j["prior"], "prior", origin);
    if (!j.contains("likelihood") || !j["likelihood"].is_array()) {
        throw ValidationError(origin + ": missing array field \"likelihood\"");
    }
    std::vector<std::vector<double>> lik;
    for (std::size_t i = 0; i < j["likelihood"].size(); ++i) {
        const auto& row = j["likelihood"][i];
        if (!row.is_array()) {
            throw ValidationError(origin + ": likelihood[" + std::to_string(i) +
                                  "] is not an array");
        }
        lik.push_back(number_array(row, "likelihood[" + std::to_string(i) + "]", origin));
    }

    std::vector<std::string> psi_of;
    if (j.contains("psi")) {
        psi_of = string_array(j, "psi", origin);
        if (psi_of.size() != theta.size()) {
            throw ValidationError(origin + ": psi has " + std::to_string(psi_of.size()) +
                                  " entries, expected " + std::to_string(theta.size()));
        }
    } else {
        psi_of = theta;
    }

    try {
        DiscreteModel model(std::move(theta), std::move(prior), std::move(x), std::move(lik));
        return {std::move(model), Marginalization(std::move(psi_of))};
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    }
}

LoadedModel load_model_file(const std::string& path) {
    return parse_model_json(read_text_file(path), path);
}

namespace {

std::vector<double> labeled_weights(const std::string& path, const DiscreteModel& model,
                                    const char* key, bool require_all) {
    const json j = parse_json(read_text_file(path), path);
    if (!j.contains(key) || !j[key].is_object()) {
        throw ValidationError(std::string(path) + ": missing object field \"" + key + "\"");
    }
    std::vector<double> out(model.n_theta(), 0.0);
    std::vector<bool> seen(model.n_theta(), false);
    for (const auto& [label, value] : j[key].items()) {
        const std::size_t i = [&] {
            try {
                return model.theta_index(label);
            } catch (const ValidationError&) {
                throw ValidationError(std::string(path) + ": \"" + label +
                                      "\" is not a theta label of the model");
            }
        }();
        if (!value.is_number()) {
            throw ValidationError(std::string(path) + ": " + key + "[\"" + label +
                                  "\"] is not a number");
        }
        out[i] = value.get<double>();
        seen[i] = true;
    }
    if (require_all) {
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (!seen[i]) {
                throw ValidationError(std::string(path) + ": " + key + " is missing theta label \"" +
                                      model.theta_labels()[i] + "\"");
            }
        }
    }
    return out;
}

}  // namespace

std::vector<double> load_q_file(const std::string& path, const DiscreteModel& model) {
    return labeled_weights(path, model, "q", /*require_all=*/true);
}

Distribution load_spike_file(const std::string& path, const DiscreteModel& model) {
    try {
        return Distribution(labeled_weights(path, model, "spike", /*require_all=*/false));
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

}  // namespace relbel
