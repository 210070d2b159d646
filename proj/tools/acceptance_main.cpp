// Acceptance runner: one line per criterion, nonzero exit on any failure.
// Usage: acceptance [--criterion N] [--suite quick|full] [--data DIR]

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "acceptance_suite.hpp"

int main(int argc, char** argv) {
    std::string data_dir = "data";
    std::string suite = "full";
    int single = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        auto need_value = [&](const char* flag) -> std::string {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "%s requires a value\n", flag);
                std::exit(1);
            }
            return argv[++i];
        };
        if (arg == "--criterion")
            single = std::stoi(need_value("--criterion"));
        else if (arg == "--suite")
            suite = need_value("--suite");
        else if (arg == "--data")
            data_dir = need_value("--data");
        else {
            std::fprintf(stderr, "unknown argument '%s'\n", arg.c_str());
            return 1;
        }
    }

    std::vector<int> ids;
    try {
        ids = single > 0 ? std::vector<int>{single} : mixtime::acceptance::suite_ids(suite);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 1;
    }

    int failures = 0;
    for (int id : ids) {
        mixtime::acceptance::CriterionResult r;
        try {
            r = mixtime::acceptance::run_criterion(id, data_dir);
        } catch (const std::exception& e) {
            std::printf("[FAIL] %02d (error: %s)\n", id, e.what());
            ++failures;
            continue;
        }
        std::printf("[%s] %02d %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds);
        for (size_t start = 0; start < r.detail.size();) {
            auto end = r.detail.find('\n', start);
            if (end == std::string::npos) end = r.detail.size();
            std::printf("       %s\n", r.detail.substr(start, end - start).c_str());
            start = end + 1;
        }
        if (!r.pass) ++failures;
    }
    return failures == 0 ? 0 : 2;
}
