#pragma once

#include <stdexcept>
#include <string>

namespace pfg {

enum class errc {
  parse,
  bound_exceeded,
  not_normal,
  trivial_group,
  not_simple,
  not_solvable,
  ambiguous,
  incompatible_subgroup,
  invalid_tower,
  precondition,
};

// All failures surface as this one exception type; `code` maps onto the
// C API status values.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace pfg
