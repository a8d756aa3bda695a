#include "tdarc/trace.hpp"

#include <algorithm>
#include <istream>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tdarc {

using nlohmann::json;

std::string to_string(Paradigm p) {
    switch (p) {
        case Paradigm::CoT: return "CoT";
        case Paradigm::ToT: return "ToT";
        case Paradigm::GoT: return "GoT";
        case Paradigm::AoT: return "AoT";
        case Paradigm::Other: return "other";
    }
    return "other";
}

std::string to_string(Label l) {
    switch (l) {
        case Label::Correct: return "correct";
        case Label::Incorrect: return "incorrect";
        case Label::Unknown: return "unknown";
    }
    return "unknown";
}

static std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

Paradigm paradigm_from_string(const std::string& s) {
    const std::string t = lower(s);
    if (t == "cot") return Paradigm::CoT;
    if (t == "tot") return Paradigm::ToT;
    if (t == "got") return Paradigm::GoT;
    if (t == "aot") return Paradigm::AoT;
    return Paradigm::Other;
}

Label label_from_string(const std::string& s) {
    const std::string t = lower(s);
    if (t == "correct") return Label::Correct;
    if (t == "incorrect") return Label::Incorrect;
    return Label::Unknown;
}

void validate_trace(const ReasoningTrace& trace) {
    if (trace.task_type.empty()) throw ParseError("trace has empty task_type");
    if (trace.steps.empty()) throw ParseError("trace has no steps");

    const size_t n = trace.steps.size();
    size_t embed_dim = 0;
    bool any_embedding = false;
    for (size_t i = 0; i < n; ++i) {
        const ReasoningStep& step = trace.steps[i];
        if (step.id != static_cast<int>(i))
            throw ParseError("step ids must be dense 0..n-1; position " + std::to_string(i) +
                             " carries id " + std::to_string(step.id));
        if (step.depth < 0)
            throw ParseError("negative depth at step " + std::to_string(step.id));
        for (int dep : step.deps) {
            if (dep >= step.id)
                throw ParseError("forward dependency at step " + std::to_string(step.id));
            if (dep < 0)
                throw ParseError("negative dependency at step " + std::to_string(step.id));
        }
        if (step.embedding) {
            if (!any_embedding) {
                any_embedding = true;
                embed_dim = step.embedding->size();
                if (embed_dim == 0)
                    throw ParseError("empty embedding at step " + std::to_string(step.id));
            } else if (step.embedding->size() != embed_dim) {
                throw ParseError("ragged embeddings: step " + std::to_string(step.id) +
                                 " has dimension " + std::to_string(step.embedding->size()) +
                                 ", expected " + std::to_string(embed_dim));
            }
        }
    }
    if (any_embedding) {
        for (const ReasoningStep& step : trace.steps)
            if (!step.embedding)
                throw ParseError("ragged embeddings: step " + std::to_string(step.id) +
                                 " is missing an embedding present elsewhere");
    }
}

static std::vector<int> canonical_deps(std::vector<int> deps) {
    std::sort(deps.begin(), deps.end());
    deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
    return deps;
}

static ReasoningTrace trace_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("trace document must be a JSON object");
    ReasoningTrace trace;
    try {
        trace.task_type = doc.at("task_type").get<std::string>();
        trace.paradigm = paradigm_from_string(doc.at("paradigm").get<std::string>());
        if (doc.contains("label")) trace.label = label_from_string(doc.at("label").get<std::string>());

        const json& steps = doc.at("steps");
        if (!steps.is_array()) throw ParseError("steps must be an array");
        for (const json& js : steps) {
            ReasoningStep step;
            step.id = js.at("id").get<int>();
            step.text = js.at("text").get<std::string>();
            step.depth = js.at("depth").get<int>();
            const json& branch = js.at("branch");
            step.branch = branch.is_string() ? branch.get<std::string>() : branch.dump();
            step.deps = canonical_deps(js.at("deps").get<std::vector<int>>());
            step.is_validation = js.at("is_validation").get<bool>();
            if (js.contains("embedding") && !js.at("embedding").is_null())
                step.embedding = js.at("embedding").get<std::vector<double>>();
            trace.steps.push_back(std::move(step));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed trace document: ") + e.what());
    }
    validate_trace(trace);
    return trace;
}

ReasoningTrace parse_trace(const std::string& json_text) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed trace document: invalid JSON");
    return trace_from_json(doc);
}

ReasoningTrace parse_trace(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_trace(buf.str());
}

std::string serialize_trace(const ReasoningTrace& trace) {
    json steps = json::array();
    for (const ReasoningStep& step : trace.steps) {
        json js{{"id", step.id},
                {"text", step.text},
                {"depth", step.depth},
                {"branch", step.branch},
                {"deps", step.deps},
                {"is_validation", step.is_validation}};
        if (step.embedding) js["embedding"] = *step.embedding;
        steps.push_back(std::move(js));
    }
    json doc{{"task_type", trace.task_type},
             {"paradigm", to_string(trace.paradigm)},
             {"label", to_string(trace.label)},
             {"steps", std::move(steps)}};
    return doc.dump();
}

ReasoningTrace sequential_deps(ReasoningTrace trace) {
    for (size_t i = 1; i < trace.steps.size(); ++i) {
        std::vector<int>& deps = trace.steps[i].deps;
        const int prev = static_cast<int>(i) - 1;
        if (!std::binary_search(deps.begin(), deps.end(), prev)) {
            deps.insert(std::upper_bound(deps.begin(), deps.end(), prev), prev);
        }
    }
    return trace;
}

std::vector<ReasoningTrace> load_corpus(std::istream& in) {
    std::vector<ReasoningTrace> traces;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            traces.push_back(parse_trace(line));
        } catch (const ParseError& e) {
            throw ParseError("corpus line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return traces;
}

std::vector<ReasoningTrace> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus file: " + path);
    return load_corpus(in);
}

void save_corpus(const std::vector<ReasoningTrace>& traces, std::ostream& out) {
    for (const ReasoningTrace& t : traces) out << serialize_trace(t) << '\n';
}

}  // namespace tdarc
