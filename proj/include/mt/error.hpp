#pragma once

#include <stdexcept>
#include <string>

namespace mt {

enum class error_kind {
  insufficient_truncation,
  domain,
  outside_catalog,
  parse,
};

const char* error_kind_name(error_kind k);

class Error : public std::runtime_error {
 public:
  Error(error_kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
  error_kind kind() const { return kind_; }

 private:
  error_kind kind_;
};

[[noreturn]] inline void fail(error_kind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace mt
