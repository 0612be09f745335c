#ifndef LIND_ARCHIVE_HPP
#define LIND_ARCHIVE_HPP

#include <iosfwd>
#include <string>

#include "lind/lindstedt.hpp"

namespace lind {

class FormatError : public InputError {
public:
    FormatError(const std::string& msg, long line) : InputError(msg + " (line " +
                                                                std::to_string(line) + ")"),
                                                     line(line) {}
    long line;
};

// Text archive of a computed series: full-precision decimal strings,
// bit-exact on reload at the stored digit count.
void save_archive(const LindstedtSeries& s, std::ostream& out);
void save_archive_file(const LindstedtSeries& s, const std::string& path);

// digits_override = 0 loads at the stored precision. A higher override
// re-parses the decimals at the wider precision and flags the series.
LindstedtSeries load_archive(std::istream& in, int digits_override = 0);
LindstedtSeries load_archive_file(const std::string& path, int digits_override = 0);

// write-temp-then-rename
void atomic_write_file(const std::string& path, const std::string& content);

} // namespace lind

#endif
