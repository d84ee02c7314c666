#pragma once

#include <stdexcept>
#include <string>

namespace collide {

enum class Errc {
  invalid_argument,
  resource_limit,  // query is valid but exceeds a configured size cap
  out_of_regime,   // bound requested outside the hypotheses it was proved under
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(Errc::invalid_argument, what);
}

}  // namespace collide
