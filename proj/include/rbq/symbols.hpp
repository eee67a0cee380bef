#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rbq {

// Interned variable name. Interning gives cheap equality and a fixed total
// precedence used by the monomial order: the sixteen operator unknowns
// a11..a44 come first (row-major), then the family parameters a, b, c, d,
// then lambda; any other name sorts after these, alphabetically.
class Sym {
public:
    static Sym intern(std::string_view name);

    const std::string& name() const;

    // true when *this comes before other in the fixed variable order
    bool precedes(Sym other) const;

    bool operator==(Sym other) const noexcept { return id_ == other.id_; }
    bool operator!=(Sym other) const noexcept { return id_ != other.id_; }

    std::uint32_t id() const noexcept { return id_; }

private:
    explicit Sym(std::uint32_t id) : id_(id) {}

    struct Entry {
        std::string name;
        int rank;  // 0..20 for the fixed names, large otherwise
    };

    struct Registry {
        std::mutex mutex;
        std::vector<Entry> entries;
        std::unordered_map<std::string, std::uint32_t> by_name;
    };

    static Registry& registry();

    std::uint32_t id_;
};

inline Sym::Registry& Sym::registry() {
    static Registry reg;
    return reg;
}

inline Sym Sym::intern(std::string_view name) {
    static const char* fixed[] = {
        "a11", "a12", "a13", "a14", "a21", "a22", "a23", "a24",
        "a31", "a32", "a33", "a34", "a41", "a42", "a43", "a44",
        "a",   "b",   "c",   "d",   "lambda",
    };
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mutex);
    std::string key(name);
    auto it = reg.by_name.find(key);
    if (it != reg.by_name.end()) return Sym(it->second);
    int rank = 1 << 20;
    for (int i = 0; i < 21; ++i) {
        if (key == fixed[i]) {
            rank = i;
            break;
        }
    }
    auto id = static_cast<std::uint32_t>(reg.entries.size());
    reg.entries.push_back(Entry{key, rank});
    reg.by_name.emplace(std::move(key), id);
    return Sym(id);
}

inline const std::string& Sym::name() const {
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mutex);
    return reg.entries[id_].name;
}

inline bool Sym::precedes(Sym other) const {
    if (id_ == other.id_) return false;
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mutex);
    const Entry& x = reg.entries[id_];
    const Entry& y = reg.entries[other.id_];
    if (x.rank != y.rank) return x.rank < y.rank;
    return x.name < y.name;
}

}  // namespace rbq
