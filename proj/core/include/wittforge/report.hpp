#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wittforge {

enum class Status { Ok, Fail, Skipped, Error };

std::string_view to_string(Status s) noexcept;

/// Where a check came from: a data-file line, or a built-in suite item.
struct SourceId {
    std::string file;
    int line = 0;

    std::string to_string() const { return file + ":" + std::to_string(line); }

    friend bool operator==(const SourceId&, const SourceId&) = default;
    friend auto operator<=>(const SourceId&, const SourceId&) = default;
};

struct ReportEntry {
    SourceId source;
    Status status = Status::Ok;
    std::string detail;
};

class VerificationReport {
public:
    void add(SourceId source, Status status, std::string detail);
    void append(const VerificationReport& other);

    /// Stable sort by source id; entries sharing a source keep insertion order.
    void sort();

    const std::vector<ReportEntry>& entries() const noexcept { return entries_; }
    std::size_t count(Status s) const;
    bool empty() const noexcept { return entries_.empty(); }

    /// No FAIL and no ERROR; with `strict`, SKIPPED also counts as failure.
    bool passed(bool strict = false) const;

    /// One line per entry plus a trailing summary line. Deterministic.
    std::string render(std::string_view title = {}) const;

private:
    std::vector<ReportEntry> entries_;
};

} // namespace wittforge
