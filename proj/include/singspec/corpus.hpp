#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "singspec/errors.hpp"
#include "singspec/rational.hpp"

namespace singspec {

class CorpusError : public InputError {
public:
    CorpusError(std::size_t line, const std::string& msg)
        : InputError("corpus line " + std::to_string(line) + ": " + msg) {}
    explicit CorpusError(const std::string& msg) : InputError("corpus: " + msg) {}
};

// One verification target: a polynomial, its variables, optionally a weight
// system, and optionally the values `verify` must reproduce. weights and
// degree come together or not at all (absent means: infer).
struct CorpusRecord {
    struct Expect {
        std::optional<long long> mu;
        std::optional<Rational> alpha_tilde;
        std::optional<std::vector<long long>> s;
        std::optional<int> max_du_bois;
        std::optional<int> max_rational;
        bool liminal_given = false;
        std::optional<int> liminal_k;  // nullopt with liminal_given: expect "none"
    };

    std::string name;
    std::string poly;
    std::vector<std::string> vars;
    std::optional<std::vector<long long>> weights;
    std::optional<long long> degree;
    std::optional<Expect> expect;
};

// JSON-lines, one record per line; lines starting with '#' are comments.
inline std::vector<CorpusRecord> load_corpus(std::istream& in) {
    std::vector<CorpusRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw CorpusError(lineno, std::string("invalid JSON: ") + e.what());
        }
        try {
            CorpusRecord rec;
            rec.name = j.at("name").get<std::string>();
            rec.poly = j.at("poly").get<std::string>();
            rec.vars = j.at("vars").get<std::vector<std::string>>();
            if (rec.vars.empty()) throw CorpusError(lineno, "empty variable list");
            if (j.contains("weights")) rec.weights = j["weights"].get<std::vector<long long>>();
            if (j.contains("degree")) rec.degree = j["degree"].get<long long>();
            if (rec.weights.has_value() != rec.degree.has_value())
                throw CorpusError(lineno, "weights and degree must appear together");
            if (j.contains("expect")) {
                const auto& e = j["expect"];
                CorpusRecord::Expect ex;
                if (e.contains("mu")) ex.mu = e["mu"].get<long long>();
                if (e.contains("alpha_tilde"))
                    ex.alpha_tilde = Rational::parse(e["alpha_tilde"].get<std::string>());
                if (e.contains("s")) ex.s = e["s"].get<std::vector<long long>>();
                if (e.contains("max_du_bois")) ex.max_du_bois = e["max_du_bois"].get<int>();
                if (e.contains("max_rational")) ex.max_rational = e["max_rational"].get<int>();
                if (e.contains("liminal_k")) {
                    ex.liminal_given = true;
                    if (!e["liminal_k"].is_null()) ex.liminal_k = e["liminal_k"].get<int>();
                }
                rec.expect = std::move(ex);
            }
            records.push_back(std::move(rec));
        } catch (const CorpusError&) {
            throw;
        } catch (const nlohmann::json::exception& e) {
            throw CorpusError(lineno, std::string("bad record: ") + e.what());
        }
    }
    return records;
}

}  // namespace singspec
