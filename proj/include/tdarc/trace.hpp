#pragma once
// Annotated reasoning traces: the ingestion format for the whole pipeline.
//
// A trace is an ordered list of steps, each carrying its hierarchy depth,
// branch identifier, backward dependency citations, a validation flag and
// an optional precomputed embedding. Dependency annotation is what keeps a
// linear chain from collapsing into a topologically trivial path.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdarc {

enum class Paradigm { CoT, ToT, GoT, AoT, Other };
enum class Label { Correct, Incorrect, Unknown };

std::string to_string(Paradigm p);
std::string to_string(Label l);
Paradigm paradigm_from_string(const std::string& s);
Label label_from_string(const std::string& s);

struct ReasoningStep {
    int id = 0;
    std::string text;
    int depth = 0;
    std::string branch;
    std::vector<int> deps;  // sorted, unique, each < id
    bool is_validation = false;
    std::optional<std::vector<double>> embedding;

    bool operator==(const ReasoningStep&) const = default;
};

struct ReasoningTrace {
    std::string task_type;
    Paradigm paradigm = Paradigm::CoT;
    std::vector<ReasoningStep> steps;
    Label label = Label::Unknown;

    bool operator==(const ReasoningTrace&) const = default;

    size_t size() const { return steps.size(); }
    // Embedding dimension shared by all steps, or 0 when none carry one.
    size_t embedding_dim() const {
        return steps.empty() || !steps.front().embedding ? 0 : steps.front().embedding->size();
    }
};

// Raised on any malformed document or invariant violation during ingestion.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Parse a single JSON trace document. Rejection is total: any invariant
// violation (forward/self dependency, ragged embeddings, sparse ids, empty
// steps) throws ParseError naming the offending step.
ReasoningTrace parse_trace(const std::string& json_text);
ReasoningTrace parse_trace(std::istream& in);

std::string serialize_trace(const ReasoningTrace& trace);

// Validate an in-memory trace against the same invariants parse_trace enforces.
void validate_trace(const ReasoningTrace& trace);

// Union the implicit i-1 -> i sequential relation into each step's deps so a
// bare CoT still yields a connected path. Idempotent; only adds edges.
ReasoningTrace sequential_deps(ReasoningTrace trace);

// Corpus files are newline-delimited trace documents.
std::vector<ReasoningTrace> load_corpus(std::istream& in);
std::vector<ReasoningTrace> load_corpus_file(const std::string& path);
void save_corpus(const std::vector<ReasoningTrace>& traces, std::ostream& out);

}  // namespace tdarc
