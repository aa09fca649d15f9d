#pragma once

#include <cstddef>
#include <string>
#include <utility>

namespace weilchar {

/// Outcome of a verification check: pass/fail, the number of cases examined,
/// and the first counterexample seen.
struct CheckReport {
    CheckReport() = default;
    explicit CheckReport(std::string n) : name(std::move(n)) {}

    std::string name;
    bool pass = true;
    std::size_t cases = 0;
    std::string witness;

    void record(bool ok, const std::string& what) {
        ++cases;
        if (!ok && pass) {
            pass = false;
            witness = what;
        }
    }

    void merge(const CheckReport& other) {
        cases += other.cases;
        if (!other.pass && pass) {
            pass = false;
            witness = other.name.empty() ? other.witness : other.name + ": " + other.witness;
        }
    }
};

} // namespace weilchar
