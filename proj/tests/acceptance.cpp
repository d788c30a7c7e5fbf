// One PASS/FAIL line per acceptance criterion over the default grid.

#include "klrsk/verify.hpp"

#include <cstdio>

using namespace klrsk;

int main()
{
    VerifyOptions o;
    const auto results = run_all(o);
    // runtime targets in seconds; 0 means none
    const double limits[10] = {60, 0, 0, 0, 0, 0, 300, 0, 0, 0};
    bool ok = results.size() == 10;
    std::printf("grid %s\n", o.grid.to_string().c_str());
    for (size_t i = 0; i < results.size(); ++i) {
        auto r = results[i];
        if (limits[i] > 0 && r.seconds > limits[i]) {
            r.pass = false;
            r.note += (r.note.empty() ? "" : "; ") + std::string("over the runtime target");
        }
        std::printf("criterion %zu: %s\n", i + 1, format_result(r).c_str());
        ok = ok && r.pass;
    }
    std::printf("%s\n", ok ? "all criteria pass" : "some criteria FAIL");
    return ok ? 0 : 1;
}
