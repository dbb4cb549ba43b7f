#pragma once

#include <stdexcept>
#include <string>

namespace pidlat {

// Thrown when a requested source count exceeds what exact lattice
// enumeration supports (the node count is Dedekind(n) - 2 and grows
// super-exponentially).
class capacity_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed distribution input. line/field are 1-based; 0 means unknown.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& msg, int line = 0, int field = 0)
        : std::runtime_error(describe(msg, line, field)), line_(line), field_(field) {}

    int line() const { return line_; }
    int field() const { return field_; }

  private:
    static std::string describe(const std::string& msg, int line, int field) {
        std::string out = msg;
        if (line > 0) {
            out += " (line " + std::to_string(line);
            if (field > 0) out += ", field " + std::to_string(field);
            out += ")";
        }
        return out;
    }

    int line_;
    int field_;
};

} // namespace pidlat
