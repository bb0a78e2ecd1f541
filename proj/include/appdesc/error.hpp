#pragma once

#include <stdexcept>
#include <string>

namespace appdesc {

enum class errc {
  malformed_filename,
  bad_encoding,
  malformed_block,
  malformed_score,
  score_out_of_range,
  dangling_rating,
  duplicate_id,
  io_failure,
  malformed_csv,
  no_ratings,
  degenerate_distribution,
  undefined_split,
  invalid_parameter,
  degenerate_class,
  no_convergence,
  dimension_mismatch,
  insufficient_data,
  bad_model,
};

const char* errc_name(errc code);

/// Single exception type for all library failures; code() tells callers
/// (and the CLI exit-status mapping) what kind of failure it was.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace appdesc
