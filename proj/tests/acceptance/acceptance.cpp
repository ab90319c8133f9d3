// One line per acceptance criterion, then the individual checks and any
// measured-but-ungated notes indented below it.
#include <cstdio>

#include <pdmosc/checks.hpp>

int main()
{
    int failed = 0;
    const auto all = pdmosc::criteria();
    for (const auto& [id, title] : all) {
        const auto r = pdmosc::run_criterion(id);
        std::printf("%s %2d  %s [%.2f s]\n", r.passed() ? "PASS" : "FAIL", id, title.c_str(), r.seconds);
        for (const auto& c : r.checks)
            std::printf("        %-4s %-48s %.3g (tol %.3g)\n", c.pass() ? "ok" : "!!", c.name.c_str(), c.value, c.tol);
        for (const auto& n : r.notes)
            std::printf("        note: %s\n", n.c_str());
        std::fflush(stdout);
        failed += r.passed() ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
