#include "whw/report.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace whw {

std::string to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    }
    return "?";
}

Verdict& Report::add(Verdict v) {
    entries_.push_back(std::move(v));
    return entries_.back();
}

Verdict& Report::add(const std::string& label, bool ok, std::string note, bool required) {
    Verdict v;
    v.label = label;
    v.status = ok ? Status::pass : Status::fail;
    v.required = required;
    v.note = std::move(note);
    return add(std::move(v));
}

Verdict& Report::skip(const std::string& label, std::string note) {
    Verdict v;
    v.label = label;
    v.status = Status::skipped;
    v.note = std::move(note);
    return add(std::move(v));
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (auto v : other.entries_) {
        if (!prefix.empty()) v.label = prefix + v.label;
        entries_.push_back(std::move(v));
    }
}

bool Report::passed() const {
    for (const auto& v : entries_)
        if (v.required && v.status == Status::fail) return false;
    return true;
}

const Verdict* Report::find(const std::string& label) const {
    for (const auto& v : entries_)
        if (v.label == label) return &v;
    return nullptr;
}

bool Report::holds(const std::string& label) const {
    const Verdict* v = find(label);
    if (!v) throw std::out_of_range("no verdict labelled '" + label + "' in " + title_);
    return v->status == Status::pass;
}

std::size_t Report::count(Status s) const {
    std::size_t n = 0;
    for (const auto& v : entries_) n += v.status == s;
    return n;
}

std::vector<std::string> Report::failures() const {
    std::vector<std::string> out;
    for (const auto& v : entries_)
        if (v.status == Status::fail) out.push_back(v.label);
    return out;
}

nlohmann::ordered_json Report::to_json() const {
    // Keys sorted so output is byte-stable regardless of check order.
    std::map<std::string, nlohmann::ordered_json> sorted;
    for (const auto& v : entries_) {
        nlohmann::ordered_json e;
        e["status"] = to_string(v.status);
        e["required"] = v.required;
        if (v.witness) {
            e["witness"]["indices"] = v.witness->indices;
            e["witness"]["labels"] = v.witness->labels;
        }
        if (!v.note.empty()) e["note"] = v.note;
        sorted[v.label] = std::move(e);
    }
    nlohmann::ordered_json j;
    j["title"] = title_;
    j["passed"] = passed();
    j["verdicts"] = nlohmann::ordered_json::object();
    for (auto& [k, e] : sorted) j["verdicts"][k] = std::move(e);
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << title_ << ": " << (passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& v : entries_) {
        os << "  [" << to_string(v.status) << "] " << v.label;
        if (!v.required) os << " (informational)";
        if (v.witness) {
            os << "  witness:";
            for (const auto& l : v.witness->labels) os << ' ' << l;
        }
        if (!v.note.empty()) os << "  -- " << v.note;
        os << "\n";
    }
    return os.str();
}

} // namespace whw
