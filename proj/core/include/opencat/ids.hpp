#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

namespace opencat {

/// Opaque string identifier, tagged so object and arrow names cannot be mixed up.
template <class Tag>
class Id {
public:
    Id() = default;
    explicit Id(std::string name) : name_(std::move(name)) {}

    const std::string& str() const noexcept { return name_; }
    bool empty() const noexcept { return name_.empty(); }

    friend bool operator==(const Id&, const Id&) = default;
    friend std::strong_ordering operator<=>(const Id& a, const Id& b) { return a.name_ <=> b.name_; }

    friend std::ostream& operator<<(std::ostream& os, const Id& id) { return os << id.name_; }

private:
    std::string name_;
};

using ObjId = Id<struct ObjectTag>;
using ArrId = Id<struct ArrowTag>;

}  // namespace opencat

template <class Tag>
struct std::hash<opencat::Id<Tag>> {
    std::size_t operator()(const opencat::Id<Tag>& id) const noexcept { return std::hash<std::string>{}(id.str()); }
};
