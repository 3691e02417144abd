#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "clr/harness.hpp"

namespace clr::detail {

using Mismatch = std::optional<std::string>;

inline std::string clip(std::string s, std::size_t limit = 400)
{
    if (s.size() > limit) s = s.substr(0, limit) + "...";
    return s;
}

// First failing item wins.
class Mismatches {
public:
    template <class A, class B>
    void expect_eq(const A& got, const B& want, const std::string& what)
    {
        if (first_ || got == want) return;
        std::ostringstream os;
        os << what;
        if constexpr (requires { got.str(); want.str(); }) os << ": got " << clip(got.str()) << ", expected " << clip(want.str());
        else if constexpr (requires { os << got; os << want; }) os << ": got " << got << ", expected " << want;
        first_ = os.str();
    }
    void expect(bool ok, const std::string& what)
    {
        if (!first_ && !ok) first_ = what;
    }
    Mismatch result() const { return first_; }
    bool failed() const { return first_.has_value(); }

private:
    Mismatch first_;
};

Check exact_check(std::string id, std::string anchor, json params, std::function<Mismatch()> body);
// expect_equal = false turns the check into a control: NotEqual passes.
Check oracle_check(std::string id, std::string anchor, json params, std::function<SkewPairs()> build,
                   bool expect_equal = true);

}  // namespace clr::detail
