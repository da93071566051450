#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "yangian/matrix.hpp"

namespace yang {

/// Outcome of one verification: pass/fail, number of instances examined, and the
/// first failing instance with a residual entry.
struct CheckReport {
    std::string id;
    std::string anchor;
    bool pass = true;
    long instances = 0;
    std::string witness;
    std::string detail;
    double elapsed = 0;
    std::vector<CheckReport> parts;

    CheckReport() = default;
    CheckReport(std::string id_, std::string anchor_) : id(std::move(id_)), anchor(std::move(anchor_)) {}

    template <class Describe>
    void expect(bool ok, Describe&& describe) {
        ++instances;
        if (!ok && pass) {
            pass = false;
            witness = std::string(describe());
        } else if (!ok) {
            pass = false;
        }
    }

    /// Passes iff the residual matrix is zero; the witness names its first nonzero entry.
    template <class Describe>
    void expect_zero(const Mat& residual, Describe&& describe) {
        ++instances;
        if (residual.is_zero()) return;
        if (pass) {
            int i = 0, j = 0;
            K v;
            residual.first_nonzero(i, j, v);
            witness = std::string(describe()) + ": residual entry (" + std::to_string(i) + "," + std::to_string(j) +
                      ") = " + v.str();
        }
        pass = false;
    }

    /// Adds a sub-report; the parent fails if any part fails.
    void add(CheckReport part);
};

/// Wall-clock timer filling CheckReport::elapsed.
class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace yang
