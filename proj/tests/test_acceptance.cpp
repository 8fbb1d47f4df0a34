#include <iostream>

#include <sheafline/selftest.hpp>

int main() {
    bool all = true;
    for (const auto& r : sheafline::selftest::run_all()) {
        std::cout << "criterion " << r.id << " " << r.name << ": " << (r.pass ? "pass" : "FAIL")
                  << " (" << r.detail << ")" << std::endl;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
