#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twocat {

// Structural identifier of a generated cell or simplex.
using Key = std::vector<int>;

struct KeyHash {
    size_t operator()(const Key& k) const noexcept {
        uint64_t h = 1469598103934665603ull ^ k.size();
        for (int v : k) {
            h ^= static_cast<uint32_t>(v);
            h *= 1099511628211ull;
            h ^= h >> 29;
        }
        return static_cast<size_t>(h);
    }
};

inline uint64_t pair_key(int a, int b) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
}

// Every failure raised by the library carries one of the kind tags listed in the README.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct Finding {
    std::string kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool ok() const { return findings.empty(); }
    bool has(const std::string& kind) const {
        for (const auto& f : findings)
            if (f.kind == kind) return true;
        return false;
    }
    size_t count(const std::string& kind) const {
        size_t n = 0;
        for (const auto& f : findings) n += f.kind == kind;
        return n;
    }
    void add(std::string kind, std::string detail) {
        findings.push_back({std::move(kind), std::move(detail)});
    }
    void merge(const ValidationReport& other, const std::string& prefix = "") {
        for (const auto& f : other.findings) findings.push_back({f.kind, prefix + f.detail});
    }
};

// Counts candidate cells examined by enumerations; throws once the limit is passed.
struct Budget {
    long long limit = 1000000;
    long long used = 0;

    void spend(long long n = 1) {
        used += n;
        if (used > limit)
            throw Error("EnumerationBudgetExceeded",
                        "examined more than " + std::to_string(limit) + " candidate cells");
    }
};

}  // namespace twocat
