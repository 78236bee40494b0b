// Ensemble files: a JSON document
//
//   {"dims": [d_A, d_B],
//    "states": [{"probability": p, "amplitudes": [[re, im], ...]}, ...]}
//
// "probability" is optional but must then be absent for every state (uniform
// weights). Amplitudes must be normalized to within 1e-8; they are renormalized
// exactly after loading.

#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nle/numkit.hpp"
#include "nle/qstate.hpp"

namespace nle {

/// Malformed input text, as opposed to a well-formed but inadmissible ensemble.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& detail) : Error("parse-error", detail) {}
};

inline Ensemble parse_ensemble(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(ex.what());
    }
    try {
        const auto& dims = doc.at("dims");
        if (!dims.is_array() || dims.size() != 2) throw ParseError("dims must be a two-element array");
        const auto da = dims[0].get<long long>();
        const auto db = dims[1].get<long long>();
        if (da < 1 || db < 1) throw ParseError("dims must be positive");
        const Dims d{static_cast<std::size_t>(da), static_cast<std::size_t>(db)};

        const auto& states = doc.at("states");
        if (!states.is_array() || states.empty()) throw ParseError("states must be a non-empty array");
        std::size_t with_p = 0;
        for (const auto& s : states) with_p += s.contains("probability") ? 1 : 0;
        if (with_p != 0 && with_p != states.size()) {
            throw ParseError("probability must be given for every state or for none");
        }

        std::vector<Member> members;
        double total = 0.0;
        for (const auto& s : states) {
            const auto& amps = s.at("amplitudes");
            if (!amps.is_array() || amps.size() != d.total()) throw ParseError("amplitude count must be d_A*d_B");
            Vector v;
            for (const auto& z : amps) {
                if (!z.is_array() || z.size() != 2) throw ParseError("amplitudes are [re, im] pairs");
                v.emplace_back(z[0].get<double>(), z[1].get<double>());
            }
            require_finite(v, "amplitudes");
            if (std::abs(norm2(v) - 1.0) > kTol.file_norm) throw ParseError("state is not normalized");
            const double p = with_p ? s.at("probability").get<double>() : 1.0 / static_cast<double>(states.size());
            total += p;
            members.push_back(Member{p, PureState::normalize(d, std::move(v))});
        }
        if (with_p && std::abs(total - 1.0) > kTol.file_norm) throw ParseError("probabilities do not sum to 1");
        for (Member& m : members) m.probability /= total;
        return Ensemble(d, std::move(members));
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(ex.what());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& ex) {
        throw ParseError(ex.what());
    }
}

inline Ensemble load_ensemble(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_ensemble(ss.str());
}

inline nlohmann::json ensemble_to_json(const Ensemble& e) {
    nlohmann::json doc;
    doc["dims"] = {e.dims().a, e.dims().b};
    doc["states"] = nlohmann::json::array();
    for (const Member& m : e.members()) {
        nlohmann::json amps = nlohmann::json::array();
        for (const cplx& z : m.state.amplitudes()) amps.push_back({z.real(), z.imag()});
        doc["states"].push_back({{"probability", m.probability}, {"amplitudes", amps}});
    }
    return doc;
}

}  // namespace nle
