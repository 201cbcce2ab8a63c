#ifndef TOPICBURST_TEXT_FORMAT_HPP
#define TOPICBURST_TEXT_FORMAT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace topicburst {

// Quotes a field if it contains a comma, quote or newline (RFC 4180 style).
std::string csv_escape(std::string_view field);

// Joins fields into one comma-separated line (no trailing newline).
std::string csv_join(const std::vector<std::string>& fields);

// Splits one CSV line, honoring double-quoted fields.
// Throws std::runtime_error on an unterminated quote.
std::vector<std::string> csv_split(std::string_view line);

// Fixed-point decimal formatting, locale independent.
std::string format_fixed(double value, int decimals);

// Integer parsing with a descriptive error on failure.
long long parse_integer(std::string_view text, std::string_view what);
double parse_number(std::string_view text, std::string_view what);

}  // namespace topicburst

#endif
