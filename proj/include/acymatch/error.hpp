#pragma once

#include <stdexcept>
#include <string>

namespace acym {

/// Machine-readable failure categories surfaced by every module.
enum class errc {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  negative_input,
  degree_too_small,
  degree_too_high,
  k_out_of_range,
  bad_parameter,
  infeasible,
  too_large,
  missing_k,
  precondition_violated,
  stale_move,
  invariant_violation,
  not_a_matching,
  not_acyclic,
  parse_error,
  io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const { return code_; }

  /// True for defects in this library rather than in the caller's input.
  bool internal() const {
    return code_ == errc::invariant_violation || code_ == errc::stale_move;
  }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace acym
