#include "appdesc/error.hpp"

namespace appdesc {

const char* errc_name(errc code) {
  switch (code) {
    case errc::malformed_filename: return "malformed-filename";
    case errc::bad_encoding: return "bad-encoding";
    case errc::malformed_block: return "malformed-block";
    case errc::malformed_score: return "malformed-score";
    case errc::score_out_of_range: return "score-out-of-range";
    case errc::dangling_rating: return "dangling-rating";
    case errc::duplicate_id: return "duplicate-id";
    case errc::io_failure: return "io-failure";
    case errc::malformed_csv: return "malformed-csv";
    case errc::no_ratings: return "no-ratings";
    case errc::degenerate_distribution: return "degenerate-distribution";
    case errc::undefined_split: return "undefined-split";
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::degenerate_class: return "degenerate-class";
    case errc::no_convergence: return "no-convergence";
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::insufficient_data: return "insufficient-data";
    case errc::bad_model: return "bad-model";
  }
  return "unknown";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace appdesc
