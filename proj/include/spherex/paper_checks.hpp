#pragma once

#include <functional>
#include <string>
#include <vector>

namespace spherex {

struct PaperCheck {
    std::string name;
    bool passed = false;
    std::string detail;  // first differing cell on failure, a summary otherwise
};

// Every published table and closed form this library reproduces, compared cell
// by cell. `progress` (optional) is called after each check.
std::vector<PaperCheck> verify_paper(const std::function<void(const PaperCheck&)>& progress = {});

}  // namespace spherex
