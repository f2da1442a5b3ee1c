#include "finik/selfcheck.hpp"

#include <iostream>

int main()
{
    bool all = true;
    for (const finik::CheckResult& r : finik::acceptance_suite()) {
        std::cout << r.name << ": " << (r.pass ? "pass" : "fail") << "\n";
        if (!r.pass) {
            std::cout << "    " << r.detail << "\n";
            all = false;
        }
    }
    return all ? 0 : 1;
}
