#include "wittforge/report.hpp"

#include <algorithm>
#include <sstream>

namespace wittforge {

std::string_view to_string(Status s) noexcept {
    switch (s) {
    case Status::Ok: return "OK";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
    case Status::Error: return "ERROR";
    }
    return "?";
}

void VerificationReport::add(SourceId source, Status status, std::string detail) {
    entries_.push_back({std::move(source), status, std::move(detail)});
}

void VerificationReport::append(const VerificationReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

void VerificationReport::sort() {
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const ReportEntry& a, const ReportEntry& b) { return a.source < b.source; });
}

std::size_t VerificationReport::count(Status s) const {
    return static_cast<std::size_t>(std::count_if(
        entries_.begin(), entries_.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

bool VerificationReport::passed(bool strict) const {
    return count(Status::Fail) == 0 && count(Status::Error) == 0 &&
           (!strict || count(Status::Skipped) == 0);
}

std::string VerificationReport::render(std::string_view title) const {
    std::ostringstream out;
    for (const auto& e : entries_) {
        std::string status(to_string(e.status));
        status.resize(7, ' ');
        out << status << ' ' << e.source.to_string() << "  " << e.detail << '\n';
    }
    if (!title.empty()) {
        out << title << ": ";
    }
    out << count(Status::Ok) << " OK, " << count(Status::Fail) << " FAIL, "
        << count(Status::Skipped) << " SKIPPED, " << count(Status::Error) << " ERROR\n";
    return out.str();
}

} // namespace wittforge
