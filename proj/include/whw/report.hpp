#ifndef WHW_REPORT_HPP
#define WHW_REPORT_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace whw {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

// First failing probe tuple, as basis (or probe) indices and their labels.
struct Witness {
    std::vector<std::size_t> indices;
    std::vector<std::string> labels;
};

struct Verdict {
    std::string label;
    Status status = Status::pass;
    bool required = true;
    std::optional<Witness> witness;
    std::string note;
};

// Ordered list of labelled verdicts. `passed()` looks at required entries only;
// skipped entries never count as failures.
class Report {
public:
    Report() = default;
    explicit Report(std::string title) : title_(std::move(title)) {}

    const std::string& title() const { return title_; }
    const std::vector<Verdict>& entries() const { return entries_; }

    Verdict& add(Verdict v);
    Verdict& add(const std::string& label, bool ok, std::string note = {}, bool required = true);
    Verdict& skip(const std::string& label, std::string note);

    // Append all entries of `other`, prefixing labels with `prefix` when given.
    void merge(const Report& other, const std::string& prefix = {});

    bool passed() const;
    const Verdict* find(const std::string& label) const;
    // True iff the entry exists and passed. Throws std::out_of_range if absent.
    bool holds(const std::string& label) const;
    std::size_t count(Status s) const;
    std::vector<std::string> failures() const;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;

private:
    std::string title_;
    std::vector<Verdict> entries_;
};

using AxiomReport = Report;
using IdentityReport = Report;
using ModuleCoalgebraVerdict = Report;

} // namespace whw

#endif
