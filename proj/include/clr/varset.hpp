#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace clr {

// Ordered set of variable names; exponent vectors index into it.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names))
    {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], static_cast<int>(i)).second) {
                throw std::invalid_argument("duplicate variable name " + names_[i]);
            }
        }
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }
    bool contains(const std::string& n) const { return index_.count(n) != 0; }
    int index(const std::string& n) const
    {
        auto it = index_.find(n);
        if (it == index_.end()) throw std::out_of_range("unknown variable " + n);
        return it->second;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(std::vector<std::string> names)
{
    return std::make_shared<const VarSet>(std::move(names));
}

}  // namespace clr
