// Minimal test harness: always-on checks, one [PASS]/[FAIL] line per test.
#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace testkit {

inline int g_failures = 0;
inline int g_checks = 0;
inline const char* g_current = "";

#define TK_CHECK(cond)                                                                   \
    do {                                                                                 \
        ++testkit::g_checks;                                                             \
        if (!(cond)) {                                                                   \
            ++testkit::g_failures;                                                       \
            std::fprintf(stderr, "[FAIL] %s:%d in %s: %s\n", __FILE__, __LINE__,         \
                         testkit::g_current, #cond);                                     \
        }                                                                                \
    } while (0)

#define TK_CHECK_CLOSE(a, b, tol)                                                        \
    do {                                                                                 \
        ++testkit::g_checks;                                                             \
        const double tk_a = (a), tk_b = (b), tk_tol = (tol);                             \
        if (!(std::abs(tk_a - tk_b) <= tk_tol)) {                                        \
            ++testkit::g_failures;                                                       \
            std::fprintf(stderr, "[FAIL] %s:%d in %s: |%s - %s| = %.3e > %.3e\n",        \
                         __FILE__, __LINE__, testkit::g_current, #a, #b,                 \
                         std::abs(tk_a - tk_b), tk_tol);                                 \
        }                                                                                \
    } while (0)

#define TK_CHECK_THROWS(expr)                                                            \
    do {                                                                                 \
        ++testkit::g_checks;                                                             \
        bool tk_threw = false;                                                           \
        try {                                                                            \
            (void)(expr);                                                                \
        } catch (...) {                                                                  \
            tk_threw = true;                                                             \
        }                                                                                \
        if (!tk_threw) {                                                                 \
            ++testkit::g_failures;                                                       \
            std::fprintf(stderr, "[FAIL] %s:%d in %s: expected throw: %s\n", __FILE__,   \
                         __LINE__, testkit::g_current, #expr);                           \
        }                                                                                \
    } while (0)

struct Registry {
    struct Entry {
        const char* name;
        void (*fn)();
    };
    static std::vector<Entry>& entries() {
        static std::vector<Entry> v;
        return v;
    }
};

struct Registrar {
    Registrar(const char* name, void (*fn)()) { Registry::entries().push_back({name, fn}); }
};

#define TK_TEST(name)                                                        \
    static void tk_test_##name();                                            \
    static testkit::Registrar tk_reg_##name(#name, &tk_test_##name);         \
    static void tk_test_##name()

inline int run_all() {
    int failed_tests = 0;
    for (const auto& e : Registry::entries()) {
        g_current = e.name;
        const int before = g_failures;
        e.fn();
        if (g_failures == before) {
            std::printf("[PASS] %s\n", e.name);
        } else {
            std::printf("[FAIL] %s\n", e.name);
            ++failed_tests;
        }
    }
    std::printf("%zu tests, %d checks, %d failures\n", Registry::entries().size(), g_checks,
                g_failures);
    return failed_tests == 0 ? 0 : 1;
}

}  // namespace testkit

#define TK_MAIN()                        \
    int main() { return testkit::run_all(); }
