#ifndef HSS_COMMON_HPP
#define HSS_COMMON_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace hss {

/* Error taxonomy mirrors the CLI exit contract: input errors (parse,
 * validation, window/budget misuse) versus internal invariant violations,
 * which indicate a bug and are never expected on any input. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

class WindowError : public Error {
public:
    explicit WindowError(const std::string& msg) : Error(msg) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error("internal: " + msg) {}
};

inline void check_internal(bool ok, const std::string& msg)
{
    if (!ok)
        throw InternalError(msg);
}

/* Closed interval of cohomological degrees. */
struct DegreeWindow {
    int lo = 0;
    int hi = 0;

    DegreeWindow() = default;
    DegreeWindow(int l, int h) : lo(l), hi(h)
    {
        if (l > h)
            throw WindowError("empty degree window");
    }
    static DegreeWindow symmetric(int n) { return DegreeWindow(-n, n); }

    bool contains(int n) const { return lo <= n && n <= hi; }
    DegreeWindow padded(int by) const { return DegreeWindow(lo - by, hi + by); }
};

/* Guard against runaway enumerations; shared by bar-word enumeration and
 * the heavy per-degree reductions.  max_words == 0 means unlimited.  The
 * optional deadline is checked cooperatively inside long loops. */
struct Budget {
    std::size_t max_words = 500000;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    void charge_words(std::size_t n) const
    {
        if (max_words != 0 && n > max_words)
            throw BudgetError("bar word budget exceeded: " + std::to_string(n) + " > " +
                              std::to_string(max_words) + " (raise --budget)");
    }

    void check_time() const
    {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            throw BudgetError("time budget exceeded");
    }
};

} // namespace hss

#endif
