#ifndef WHRANK_REPORT_HPP
#define WHRANK_REPORT_HPP

#include <string>
#include <vector>

#include "whrank/kconj.hpp"

namespace whrank {

// One JSON object per line. "order" is a number when it fits in 64 bits and
// a decimal string otherwise.
std::string report_json(const RankReport& r);
RankReport report_from_json(const std::string& text);  // throws parse_error

const std::vector<std::string>& report_columns();
std::string report_tsv_header();
std::string report_tsv_row(const RankReport& r);

}  // namespace whrank

#endif  // WHRANK_REPORT_HPP
